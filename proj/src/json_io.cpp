#include "hcyl/json_io.hpp"

#include "hcyl/error.hpp"

#include <cctype>

namespace hcyl {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Json mono_json(const Monomial& m)
{
    Json out = Json::array();
    for (auto i : m)
        out.push_back(static_cast<int>(i) + 1);
    return out;
}

[[noreturn]] void bad_json(const std::string& msg)
{
    throw Error(ErrorCode::malformed, "bad JSON: " + msg);
}

Rational coeff_of(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    bad_json("coefficient must be a string \"p/q\" or an integer");
}

// One signed term of a linear combination: text between top-level +/- signs.
struct SignedTerm {
    Rational coeff;
    std::string_view body;
    std::size_t offset;
};

std::vector<SignedTerm> split_terms(std::string_view text)
{
    std::vector<SignedTerm> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorCode::syntax, "position " + std::to_string(pos) + ": " + msg);
    };
    skip();
    if (pos == text.size())
        return out;
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!out.empty()) {
            fail("expected '+' or '-'");
        }
        Rational coeff = sign;
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > start) {
            std::size_t end = pos;
            skip();
            if (pos >= text.size() || text[pos] != '*')
                fail("expected '*' after coefficient");
            coeff *= parse_rational(text.substr(start, end - start));
            ++pos;
            skip();
        }
        start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == '[')
                ++depth;
            else if (c == ')' || c == ']')
                --depth;
            else if (depth == 0 && (c == '+' || c == '-'))
                break;
            ++pos;
        }
        std::string_view body = text.substr(start, pos - start);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
            body.remove_suffix(1);
        if (body.empty())
            fail("empty term");
        out.push_back({coeff, body, start});
    }
    return out;
}

int single_generator(std::string_view text, int rank, std::size_t offset)
{
    GroupWord g = parse_word(text, rank);
    if (g.length() != 1 || g.letters()[0].sign != 1)
        throw Error(ErrorCode::syntax, "position " + std::to_string(offset) + ": expected a single generator, got '" +
                                           std::string(text) + "'");
    return g.letters()[0].gen;
}

} // namespace

Json to_json(const NcSeries& s)
{
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back({{"mono", mono_json(m)}, {"coeff", to_string(c)}});
    return {{"rank", s.rank()}, {"cap", s.cap()}, {"terms", terms}};
}

Json to_json(const LieElement& u)
{
    Json terms = Json::array();
    for (const auto& [w, c] : u.terms())
        terms.push_back({{"basis", bracket_string(w)}, {"coeff", to_string(c)}});
    return {{"rank", u.rank()}, {"degree", u.degree()}, {"terms", terms}};
}

Json to_json(const HTensorLie& t)
{
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back({{"h", key.first + 1}, {"lie", bracket_string(key.second)}, {"coeff", to_string(c)}});
    return {{"rank", t.rank()}, {"degree", t.lie_degree()}, {"tensor", terms}};
}

Json to_json(const Diagram& d)
{
    Json legs = Json::array(), edges = Json::array(), cyclic = Json::array();
    for (int c : d.colors())
        legs.push_back({{"color", c + 1}});
    for (int h = 0; h < static_cast<int>(d.mate().size()); ++h)
        if (h < d.mate()[idx(h)])
            edges.push_back({h, d.mate()[idx(h)]});
    for (int v = 0; v < d.degree(); ++v)
        cyclic.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    return {{"verts", d.degree()}, {"legs", legs}, {"edges", edges}, {"cyclic", cyclic}};
}

Json to_json(const DiagramSum& s)
{
    Json terms = Json::array();
    for (const auto& [d, c] : s.terms())
        terms.push_back({{"diagram", to_json(d)}, {"text", describe(d)}, {"coeff", to_string(c)}});
    return {{"terms", terms}};
}

Json to_json(const FreeEndo& h)
{
    Json images = Json::array();
    for (const GroupWord& w : h.images())
        images.push_back(w.to_string());
    return {{"rank", h.rank()}, {"images", images}};
}

Json to_json(const StackingForm& s)
{
    Json rows = Json::array();
    for (const auto& row : s.matrix()) {
        Json r = Json::array();
        for (const Integer& x : row)
            r.push_back(x.get_si());
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const LcsWeight& w)
{
    switch (w.kind) {
    case LcsWeight::Kind::finite: return w.value;
    case LcsWeight::Kind::exceeds_cap: return "exceeds cap";
    case LcsWeight::Kind::infinite: return "infinite";
    }
    return nullptr;
}

HTensorLie tensor_from_json(const Json& j, int rank)
{
    const Json& terms = j.is_object() ? j.at("tensor") : j;
    if (!terms.is_array())
        bad_json("tensor must be an array of {h, lie, coeff}");
    int degree = j.is_object() && j.contains("degree") ? j.at("degree").get<int>() : -1;
    std::vector<std::pair<int, LieElement>> parts;
    for (const Json& t : terms) {
        const int h = t.at("h").get<int>() - 1;
        if (h < 0 || h >= rank)
            throw Error(ErrorCode::out_of_range, "h index " + std::to_string(h + 1) + " outside 1.." + std::to_string(rank));
        LieElement u = Rational(coeff_of(t.at("coeff"))) * parse_lie_bracket(t.at("lie").get<std::string>(), rank);
        if (degree < 0)
            degree = u.degree();
        if (u.degree() != degree)
            throw Error(ErrorCode::weight_mismatch, "tensor terms have mixed Lie degrees");
        parts.emplace_back(h, std::move(u));
    }
    HTensorLie out(rank, degree < 0 ? 1 : degree);
    for (const auto& [h, u] : parts)
        out.add_tensor(h, u);
    return out;
}

RawDiagram diagram_from_json(const Json& j)
{
    RawDiagram r;
    r.verts = j.at("verts").get<int>();
    for (const Json& l : j.at("legs"))
        r.colors.push_back(l.at("color").get<int>() - 1);
    if (j.contains("cyclic")) {
        for (const Json& c : j.at("cyclic"))
            r.cyclic.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
    } else {
        for (int v = 0; v < r.verts; ++v)
            r.cyclic.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    }
    r.mate.assign(idx(r.half_edges()), -1);
    for (const Json& e : j.at("edges")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= r.half_edges() || b >= r.half_edges())
            throw Error(ErrorCode::malformed, "edge [" + std::to_string(a) + "," + std::to_string(b) +
                                                  "] names a missing half-edge");
        r.mate[idx(a)] = b;
        r.mate[idx(b)] = a;
    }
    r.validate();
    return r;
}

DiagramSum diagram_sum_from_json(const Json& j)
{
    DiagramSum out;
    if (j.is_object() && j.contains("verts")) {
        out.add(diagram_from_json(j), 1);
        return out;
    }
    const Json& terms = j.is_object() ? j.at("terms") : j;
    for (const Json& t : terms)
        out.add(diagram_from_json(t.at("diagram")), t.contains("coeff") ? coeff_of(t.at("coeff")) : Rational(1));
    return out;
}

FreeEndo endo_from_json(const Json& j)
{
    const int rank = j.at("rank").get<int>();
    std::vector<GroupWord> images;
    for (const Json& w : j.at("images"))
        images.push_back(parse_word(w.get<std::string>(), rank));
    return FreeEndo(rank, std::move(images));
}

StackingForm stacking_from_json(const Json& j, int genus)
{
    if (!j.is_array())
        bad_json("stacking form must be an integer matrix");
    IntMatrix s;
    for (const Json& row : j) {
        std::vector<Integer> r;
        for (const Json& x : row)
            r.emplace_back(x.get<long>());
        s.push_back(std::move(r));
    }
    return StackingForm(genus, std::move(s));
}

DiagramSum parse_tripod_sum(std::string_view text, int rank)
{
    DiagramSum out;
    for (const SignedTerm& t : split_terms(text)) {
        std::string_view b = t.body;
        if (b.size() < 3 || b.substr(0, 2) != "Y(" || b.back() != ')')
            throw Error(ErrorCode::syntax, "position " + std::to_string(t.offset) + ": expected Y(a,b,c)");
        b = b.substr(2, b.size() - 3);
        std::vector<int> legs;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= b.size(); ++i)
            if (i == b.size() || b[i] == ',') {
                legs.push_back(single_generator(b.substr(start, i - start), rank, t.offset + 2 + start));
                start = i + 1;
            }
        if (legs.size() != 3)
            throw Error(ErrorCode::syntax, "position " + std::to_string(t.offset) + ": a tripod has three legs");
        out.add(tripod(legs[0], legs[1], legs[2]), t.coeff);
    }
    return out;
}

HTensorLie parse_tensor(std::string_view text, int rank)
{
    std::vector<std::pair<int, LieElement>> parts;
    for (const SignedTerm& t : split_terms(text)) {
        std::size_t cut = t.body.find("(x)");
        if (cut == std::string_view::npos)
            throw Error(ErrorCode::syntax, "position " + std::to_string(t.offset) + ": expected h(x)[...]");
        const int h = single_generator(t.body.substr(0, cut), rank, t.offset);
        parts.emplace_back(h, t.coeff * parse_lie_bracket(t.body.substr(cut + 3), rank));
    }
    if (parts.empty())
        throw Error(ErrorCode::syntax, "empty tensor");
    HTensorLie out(rank, parts.front().second.degree());
    for (const auto& [h, u] : parts) {
        if (u.degree() != out.lie_degree())
            throw Error(ErrorCode::weight_mismatch, "tensor terms have mixed Lie degrees");
        out.add_tensor(h, u);
    }
    return out;
}

} // namespace hcyl
