// hcyl: command-line front end for the free-group / graph-algebra library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "hcyl/error.hpp"
#include "hcyl/massey.hpp"
#include "hcyl/psi.hpp"
#include "hcyl/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hcyl;

namespace {

struct Globals {
    int rank = 0;
    int genus = 0;
    int cap = 8;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int resolve_rank(const Globals& g, int fallback = 0)
{
    if (g.rank > 0 && g.genus > 0 && g.rank != 2 * g.genus)
        throw UsageError("--rank " + std::to_string(g.rank) + " conflicts with --genus " + std::to_string(g.genus));
    if (g.rank > 0)
        return g.rank;
    if (g.genus > 0)
        return 2 * g.genus;
    if (fallback > 0)
        return fallback;
    throw UsageError("give --rank/-m or --genus/-g");
}

int resolve_genus(const Globals& g)
{
    const int m = resolve_rank(g);
    if (m % 2)
        throw UsageError("this command needs an even rank (a genus)");
    return m / 2;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "@file" reads a file; text starting with '{' or '[' (other than a bracket
// expression) is JSON.
bool looks_like_json(const std::string& text)
{
    std::size_t i = text.find_first_not_of(" \t\n");
    return i != std::string::npos && (text[i] == '{' || (text[i] == '[' && text.find('"') != std::string::npos));
}

std::string argument_text(const std::string& arg)
{
    return !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg;
}

DiagramSum read_diagrams(const std::string& arg, int rank)
{
    const std::string text = argument_text(arg);
    if (looks_like_json(text))
        return diagram_sum_from_json(Json::parse(text));
    return parse_tripod_sum(text, rank);
}

HTensorLie read_tensor(const std::string& arg, int rank)
{
    const std::string text = argument_text(arg);
    if (looks_like_json(text))
        return tensor_from_json(Json::parse(text), rank);
    return parse_tensor(text, rank);
}

FreeEndo read_endo(const std::string& arg, int rank)
{
    const std::string text = argument_text(arg);
    if (looks_like_json(text))
        return endo_from_json(Json::parse(text));
    // words separated by ';'
    std::vector<GroupWord> images;
    std::size_t start = 0;
    while (true) {
        std::size_t cut = text.find(';', start);
        images.push_back(parse_word(text.substr(start, cut == std::string::npos ? cut : cut - start), rank));
        if (cut == std::string::npos)
            break;
        start = cut + 1;
    }
    return FreeEndo(rank, std::move(images));
}

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(g.out);
    if (!out)
        throw UsageError("cannot write " + g.out);
    out << text << "\n";
}

void emit(const Globals& g, const Json& j)
{
    if (g.format != "json")
        throw UsageError("--format csv is only available for dims");
    emit(g, j.dump(2));
}

// ---- commands -------------------------------------------------------------

int cmd_dims(const Globals& g, int max_degree)
{
    const int m = resolve_rank(g);
    if (m < 1 || m > 6)
        throw UsageError("dims supports rank 1..6 (got " + std::to_string(m) + ")");
    if (max_degree < 1 || max_degree > 8)
        throw UsageError("dims supports max degree 1..8 (got " + std::to_string(max_degree) + ")");
    constexpr long kKernelColumns = 4000; // exact elimination bound
    Json rows = Json::array();
    for (int n = 1; n <= max_degree; ++n) {
        const long dl = static_cast<long>(dim_lie(m, n));
        const long predicted = m * dl - static_cast<long>(dim_lie(m, n + 1));
        Json row = {{"degree", n}, {"dim_L", dl}};
        if (m >= 2 && m * dl <= kKernelColumns)
            row["rank_D"] = dn_basis(m, n).basis.size();
        else
            row["rank_D"] = nullptr;
        row["predicted_rank_D"] = predicted;
        // A^t_{n-1} sits next to D_n under psi
        if (n >= 2 && n - 1 <= 3)
            row["dim_At_prev"] = tree_space(n - 1, m).dimension();
        else
            row["dim_At_prev"] = nullptr;
        rows.push_back(row);
    }
    if (g.format == "csv") {
        std::string csv = "degree,dim_L,rank_D,predicted_rank_D,dim_At_prev\n";
        for (const Json& r : rows) {
            std::string line;
            for (const char* key : {"degree", "dim_L", "rank_D", "predicted_rank_D", "dim_At_prev"})
                line += (line.empty() ? "" : ",") + (r[key].is_null() ? std::string() : r[key].dump());
            csv += line + "\n";
        }
        csv.pop_back();
        emit(g, csv);
    } else {
        emit(g, Json{{"rank", m}, {"rows", rows}});
    }
    return 0;
}

int cmd_magnus(const Globals& g, const std::string& word)
{
    const int m = resolve_rank(g);
    const GroupWord w = parse_word(word, m);
    Json out = {{"word", w.to_string()}, {"series", to_json(magnus_expand(w, g.cap))},
                {"weight", to_json(lcs_weight(w, g.cap))}};
    emit(g, out);
    return 0;
}

int cmd_lie(const Globals& g, const std::string& expr, const std::string& word, int basis_degree)
{
    const int m = resolve_rank(g);
    if (basis_degree > 0) {
        Json list = Json::array();
        for (const Word& w : lyndon_words(m, basis_degree))
            list.push_back(bracket_string(w));
        emit(g, Json{{"rank", m}, {"degree", basis_degree}, {"dim", dim_lie(m, basis_degree)}, {"basis", list}});
        return 0;
    }
    if (!word.empty()) {
        emit(g, to_json(from_leading(parse_word(word, m), g.cap)));
        return 0;
    }
    if (expr.empty())
        throw UsageError("lie needs --expr, --word or --basis");
    const LieElement u = parse_lie_bracket(expr, m);
    emit(g, Json{{"element", to_json(u)}, {"tensor", to_json(to_tensor(u))}});
    return 0;
}

int cmd_psi(const Globals& g, const std::string& tree, const std::string& tensor)
{
    const int m = resolve_rank(g);
    if (!tensor.empty()) {
        emit(g, to_json(rooted_embed(read_tensor(tensor, m))));
        return 0;
    }
    const DiagramSum s = read_diagrams(tree, m);
    int degree = s.is_zero() ? 1 : s.terms().begin()->first.degree();
    const HTensorLie t = psi(s, m, degree);
    emit(g, Json{{"psi", to_json(t)}, {"in_D", dn_contains(t)}});
    return 0;
}

StackingForm read_form(const std::string& arg, int genus)
{
    if (arg.empty())
        return default_stacking(genus);
    return stacking_from_json(Json::parse(argument_text(arg)), genus);
}

int cmd_star(const Globals& g, const std::string& lhs, const std::string& rhs, const std::string& form)
{
    const int genus = resolve_genus(g);
    const StackingForm s = read_form(form, genus);
    emit(g, to_json(star(read_diagrams(lhs, 2 * genus), read_diagrams(rhs, 2 * genus), s)));
    return 0;
}

int cmd_bracket(const Globals& g, const std::string& lhs, const std::string& rhs, const std::string& form, bool omega,
                bool trees)
{
    const int genus = resolve_genus(g);
    const DiagramSum a = read_diagrams(lhs, 2 * genus), b = read_diagrams(rhs, 2 * genus);
    DiagramSum out = omega ? contraction_bracket(a, b, symplectic_form(genus))
                           : stack_bracket(a, b, read_form(form, genus));
    if (trees)
        out = project_trees(out);
    emit(g, to_json(out));
    return 0;
}

int cmd_johnson(const Globals& g, const std::string& endo, int level)
{
    const int m = resolve_rank(g);
    const FreeEndo h = read_endo(endo, m);
    const HTensorLie t = johnson_map(h, level);
    emit(g, Json{{"endo", to_json(h)},
                 {"level", level},
                 {"weight_level", weight_level(h, std::max(g.cap, level + 1))},
                 {"johnson", to_json(t)},
                 {"in_D", dn_contains(t)}});
    return 0;
}

int cmd_realize(const Globals& g, int degree, int basis_index, const std::string& tensor, const std::string& lift)
{
    const int m = resolve_rank(g);
    HTensorLie theta(m, std::max(degree, 1));
    if (!tensor.empty()) {
        theta = read_tensor(tensor, m);
    } else {
        if (degree < 1)
            throw UsageError("realize needs --degree with --basis-index, or --tensor");
        const auto& b = dn_basis(m, degree).basis;
        if (basis_index < 0 || basis_index >= static_cast<int>(b.size()))
            throw UsageError("basis index must lie in 0.." + std::to_string(static_cast<int>(b.size()) - 1));
        theta = b[static_cast<std::size_t>(basis_index)];
    }
    const int n = theta.lie_degree();
    const FreeEndo h = realize(theta, lift == "alternative" ? LiftStyle::alternative : LiftStyle::forward);
    Json out = {{"theta", to_json(theta)}, {"endo", to_json(h)}};
    bool passed = is_A0(h, n + 1);
    out["is_A0"] = passed;
    if (passed) {
        const HTensorLie back = johnson_map(h, n);
        out["weight_level"] = weight_level(h, n + 1);
        out["johnson"] = to_json(back);
        passed = back == theta;
    }
    out["round_trip"] = passed;
    emit(g, out);
    return passed ? 0 : 1;
}

Monomial parse_index(const std::string& text, int rank)
{
    Monomial out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int i = 0;
        try {
            i = std::stoi(item);
        } catch (const std::exception&) {
            throw UsageError("--I expects comma-separated generator numbers, got '" + text + "'");
        }
        if (i < 1 || i > rank)
            throw UsageError("index " + item + " outside 1.." + std::to_string(rank));
        out.push_back(static_cast<std::uint8_t>(i - 1));
    }
    return out;
}

int cmd_massey(const Globals& g, const std::string& index, const std::string& word)
{
    const int m = resolve_rank(g, 0);
    const GroupWord w = parse_word(word, m);
    if (index.empty()) {
        emit(g, Json{{"word", w.to_string()}, {"mu_hat", to_json(mu_hat(w, g.cap))}});
        return 0;
    }
    const Monomial I = parse_index(index, m);
    emit(g, Json{{"I", index}, {"word", w.to_string()}, {"value", massey_eval(I, w, g.cap).get_str()}});
    return 0;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& names, const std::string& level, bool timing)
{
    if (level != "quick" && level != "full")
        throw UsageError("--level must be quick or full");
    std::vector<std::string> run = names;
    if (run.size() == 1 && run[0] == "list") {
        Json list = Json::array();
        for (const SuiteInfo& s : suites())
            list.push_back({{"name", s.name}, {"description", s.description}});
        emit(g, list);
        return 0;
    }
    if (run.size() == 1 && (run[0] == "all" || run[0] == "acceptance")) {
        const bool acceptance = run[0] == "acceptance";
        run.clear();
        for (const SuiteInfo& s : suites())
            if (!acceptance || std::isdigit(static_cast<unsigned char>(s.description[0])))
                run.push_back(s.name);
    }
    for (const std::string& n : run) {
        const auto& all = suites();
        if (std::none_of(all.begin(), all.end(), [&](const SuiteInfo& s) { return s.name == n; }))
            throw UsageError("unknown suite '" + n + "' (try: verify list)");
    }
    Json reports = Json::array();
    bool passed = true;
    for (const std::string& n : run) {
        SuiteReport r = run_suite(n, g.seed, level == "full");
        passed = passed && r.passed();
        reports.push_back(to_json(r, timing));
    }
    emit(g, reports.size() == 1 ? reports[0] : Json{{"status", passed ? "pass" : "fail"}, {"suites", reports}});
    return passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with free Lie algebras, Magnus expansions, D_n(H), "
                 "colored graphs and Johnson-type maps"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("-m,--rank", g.rank, "rank of H (number of generators)")->check(CLI::PositiveNumber);
    app.add_option("-g,--genus", g.genus, "genus g, rank 2g with x_i = g_{2i-1}, y_i = g_{2i}")->check(CLI::PositiveNumber);
    app.add_option("--cap", g.cap, "Magnus truncation degree")->check(CLI::Range(1, 16));
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--out", g.out, "write the result to this file");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    std::function<int()> action;

    int max_degree = 5;
    auto* dims = app.add_subcommand("dims", "dimension table: dim L_n, rank D_n, dim A^t_{n-1}");
    dims->add_option("-N,--max-degree", max_degree, "largest degree")->required();
    dims->callback([&] { action = [&] { return cmd_dims(g, max_degree); }; });

    std::string word;
    auto* magnus = app.add_subcommand("magnus", "Magnus expansion and lower-central-series weight of a word");
    magnus->add_option("--word,word", word, "word, e.g. \"[x1,y1] x2^-1\"")->required();
    magnus->callback([&] { action = [&] { return cmd_magnus(g, word); }; });

    std::string expr;
    int basis_degree = 0;
    auto* lie = app.add_subcommand("lie", "free Lie algebra elements in the Lyndon basis");
    lie->add_option("--expr", expr, "bracket expression, e.g. \"[g1,[g1,g2]]\"");
    lie->add_option("--word", word, "group word; prints its class in F_n/F_{n+1}");
    lie->add_option("--basis", basis_degree, "list the Lyndon basis of this degree");
    lie->callback([&] { action = [&] { return cmd_lie(g, expr, word, basis_degree); }; });

    std::string tree, tensor;
    auto* psi_cmd = app.add_subcommand("psi", "Psi of a tree sum, or the rooted embedding of a tensor");
    psi_cmd->add_option("--tree", tree, "tripod sum \"Y(x1,x2,y2) - Y(...)\", diagram JSON or @file");
    psi_cmd->add_option("--embed", tensor, "tensor \"g1(x)[g2,g3]\" or JSON; prints rooted_embed");
    psi_cmd->callback([&] {
        action = [&] {
            if (tree.empty() == tensor.empty())
                throw UsageError("psi needs exactly one of --tree, --embed");
            return cmd_psi(g, tree, tensor);
        };
    });

    std::string lhs, rhs, form;
    auto* star_cmd = app.add_subcommand("star", "stacking product of two diagram sums");
    star_cmd->add_option("--lhs", lhs, "left factor")->required();
    star_cmd->add_option("--rhs", rhs, "right factor")->required();
    star_cmd->add_option("--form", form, "stacking form as an integer matrix (JSON); default s(x_i,y_i)=1");
    star_cmd->callback([&] { action = [&] { return cmd_star(g, lhs, rhs, form); }; });

    bool omega = false, trees = false;
    auto* bracket_cmd = app.add_subcommand("bracket", "stacking bracket (or the omega contraction bracket)");
    bracket_cmd->add_option("--lhs", lhs, "left argument")->required();
    bracket_cmd->add_option("--rhs", rhs, "right argument")->required();
    bracket_cmd->add_option("--form", form, "stacking form (JSON matrix)");
    bracket_cmd->add_flag("--omega", omega, "single contractions weighted by the intersection form");
    bracket_cmd->add_flag("--trees", trees, "keep only tree terms");
    bracket_cmd->callback([&] { action = [&] { return cmd_bracket(g, lhs, rhs, form, omega, trees); }; });

    std::string endo;
    int level = 0;
    auto* johnson_cmd = app.add_subcommand("johnson", "Johnson map D_n(h) of an endomorphism of F");
    johnson_cmd->add_option("--endo", endo, "images \"w1; w2; ...\", JSON {\"rank\",\"images\"} or @file")->required();
    johnson_cmd->add_option("-n,--level", level, "level n")->required()->check(CLI::PositiveNumber);
    johnson_cmd->callback([&] { action = [&] { return cmd_johnson(g, endo, level); }; });

    int degree = 0, basis_index = 0;
    std::string lift = "forward";
    auto* realize_cmd = app.add_subcommand("realize", "endomorphism realizing an element of D_n(H)");
    realize_cmd->add_option("-n,--degree", degree, "degree n of the D_n basis");
    realize_cmd->add_option("--basis-index", basis_index, "index into the D_n basis");
    realize_cmd->add_option("--tensor", tensor, "explicit element instead of a basis index");
    realize_cmd->add_option("--lift", lift, "word lift")->check(CLI::IsMember({"forward", "alternative"}));
    realize_cmd->callback([&] { action = [&] { return cmd_realize(g, degree, basis_index, tensor, lift); }; });

    std::string index;
    auto* massey_cmd = app.add_subcommand("massey", "universal Massey value <u_I>(w), or mu_hat(w)");
    massey_cmd->add_option("--I", index, "index sequence, e.g. 1,2 (omit for mu_hat)");
    massey_cmd->add_option("--word", word, "word of weight |I|")->required();
    massey_cmd->callback([&] { action = [&] { return cmd_massey(g, index, word); }; });

    std::vector<std::string> names;
    std::string verify_level = "full";
    bool timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "run named verification suites (list, all, acceptance)");
    verify_cmd->add_option("suite", names, "suite names")->required();
    verify_cmd->add_option("--level", verify_level, "quick or full");
    verify_cmd->add_flag("--timing", timing, "include wall-clock seconds per check");
    verify_cmd->callback([&] { action = [&] { return cmd_verify(g, names, verify_level, timing); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (g.format == "csv" && app.got_subcommand("dims") == false)
            throw UsageError("--format csv is only available for dims");
        return action();
    } catch (const UsageError& e) {
        std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << Json{{"error", "malformed"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
