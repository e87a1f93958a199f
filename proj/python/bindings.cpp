#include "hcyl/error.hpp"
#include "hcyl/json_io.hpp"
#include "hcyl/massey.hpp"
#include "hcyl/psi.hpp"
#include "hcyl/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hcyl;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.
std::string dump(const Json& j) { return j.dump(); }

Json tensor_list(const std::vector<HTensorLie>& ts)
{
    Json out = Json::array();
    for (const HTensorLie& t : ts)
        out.push_back(to_json(t));
    return out;
}

} // namespace

PYBIND11_MODULE(_hcyl, m)
{
    m.doc() = "Exact algebra of free groups, free Lie algebras and Jacobi diagrams";

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(code_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("magnus", [](const std::string& word, int rank, int cap) {
        return dump(to_json(magnus_expand(parse_word(word, rank), cap)));
    }, py::arg("word"), py::arg("rank"), py::arg("cap") = 4);

    m.def("lcs_weight", [](const std::string& word, int rank, int cap) {
        return dump(to_json(lcs_weight(parse_word(word, rank), cap)));
    }, py::arg("word"), py::arg("rank"), py::arg("cap") = 8);

    m.def("dim_lie", &dim_lie, py::arg("m"), py::arg("n"));

    m.def("lyndon_basis", [](int m, int n) {
        std::vector<std::string> out;
        for (const Word& w : lyndon_words(m, n))
            out.push_back(bracket_string(w));
        return out;
    }, py::arg("m"), py::arg("n"));

    m.def("dn_basis", [](int m, int n) { return dump(tensor_list(dn_basis(m, n).basis)); },
          py::arg("m"), py::arg("n"));

    m.def("tree_dimension", [](int degree, int rank) { return tree_space(degree, rank).dimension(); },
          py::arg("degree"), py::arg("rank"));

    m.def("psi", [](const std::string& tripods, int rank) {
        const HTensorLie t = psi(parse_tripod_sum(tripods, rank), rank, 1);
        Json j = to_json(t);
        j["in_D"] = dn_contains(t);
        return dump(j);
    }, py::arg("tripods"), py::arg("rank"));

    m.def("star", [](const std::string& lhs, const std::string& rhs, int genus) {
        const int rank = 2 * genus;
        return dump(to_json(star(parse_tripod_sum(lhs, rank), parse_tripod_sum(rhs, rank), default_stacking(genus))));
    }, py::arg("lhs"), py::arg("rhs"), py::arg("genus"));

    m.def("bracket", [](const std::string& lhs, const std::string& rhs, int genus) {
        const int rank = 2 * genus;
        return dump(to_json(
            stack_bracket(parse_tripod_sum(lhs, rank), parse_tripod_sum(rhs, rank), default_stacking(genus))));
    }, py::arg("lhs"), py::arg("rhs"), py::arg("genus"));

    m.def("johnson", [](const std::vector<std::string>& images, int n) {
        const int rank = static_cast<int>(images.size());
        std::vector<GroupWord> words;
        for (const std::string& w : images)
            words.push_back(parse_word(w, rank));
        return dump(to_json(johnson_map(FreeEndo(rank, words), n)));
    }, py::arg("images"), py::arg("n"));

    m.def("realize", [](const std::string& tensor, int rank) {
        const HTensorLie theta = parse_tensor(tensor, rank);
        const FreeEndo h = realize(theta);
        Json j = to_json(h);
        j["round_trip"] = is_A0(h, theta.lie_degree() + 1) && johnson_map(h, theta.lie_degree()) == theta;
        return dump(j);
    }, py::arg("tensor"), py::arg("rank"));

    m.def("massey", [](const std::vector<int>& index, const std::string& word, int rank, int cap) {
        Monomial mono;
        for (int i : index) {
            if (i < 1 || i > rank)
                throw Error(ErrorCode::out_of_range, "index entry " + std::to_string(i) + " outside 1.." +
                                                         std::to_string(rank));
            mono.push_back(static_cast<std::uint8_t>(i - 1));
        }
        return massey_eval(mono, parse_word(word, rank), cap).get_str();
    }, py::arg("index"), py::arg("word"), py::arg("rank"), py::arg("cap") = 8);

    m.def("suites", [] {
        std::vector<std::string> out;
        for (const SuiteInfo& s : suites())
            out.push_back(s.name);
        return out;
    });

    m.def("run_suite", [](const std::string& name, std::uint64_t seed, bool full) {
        return dump(to_json(run_suite(name, seed, full)));
    }, py::arg("name"), py::arg("seed") = 1, py::arg("full") = false);
}
