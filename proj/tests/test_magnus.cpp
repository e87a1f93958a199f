#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/error.hpp"
#include "hcyl/nc_series.hpp"

#include <map>
#include <random>

using namespace hcyl;

namespace {

// Independent oracle: series as map from index vectors to integers, built by
// multiplying out letter by letter with explicit truncation.
using Poly = std::map<std::vector<int>, long long>;

Poly poly_mul(const Poly& a, const Poly& b, int cap)
{
    Poly out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            if (x.size() + y.size() > static_cast<std::size_t>(cap))
                continue;
            std::vector<int> z = x;
            z.insert(z.end(), y.begin(), y.end());
            out[z] += cx * cy;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Poly letter_poly(int gen, int sign, int cap)
{
    Poly p{{{}, 1}};
    if (sign > 0) {
        p[{gen}] = 1;
    } else {
        std::vector<int> mono;
        for (int k = 1; k <= cap; ++k) {
            mono.push_back(gen);
            p[mono] = k % 2 ? -1 : 1;
        }
    }
    return p;
}

Poly oracle(const GroupWord& w, int cap)
{
    Poly acc{{{}, 1}};
    for (const Letter& l : w.letters())
        acc = poly_mul(acc, letter_poly(l.gen, l.sign, cap), cap);
    return acc;
}

bool agrees(const NcSeries& s, const Poly& p)
{
    if (s.terms().size() != p.size())
        return false;
    for (const auto& [m, c] : s.terms()) {
        std::vector<int> key(m.begin(), m.end());
        auto it = p.find(key);
        if (it == p.end() || c != Rational(static_cast<long>(it->second)))
            return false;
    }
    return true;
}

NcSeries series(int rank, int cap, std::initializer_list<std::pair<Monomial, int>> terms)
{
    NcSeries s(rank, cap);
    for (const auto& [m, c] : terms)
        s.add_term(m, c);
    return s;
}

} // namespace

TEST_CASE("series arithmetic")
{
    NcSeries a = series(1, 2, {{{}, 1}, {{0}, 1}});
    NcSeries b = series(1, 2, {{{}, 1}, {{0}, -1}, {{0, 0}, 1}});
    CHECK(a * b == NcSeries::one(1, 2));
    CHECK(a * NcSeries::one(1, 2) == a);
    NcSeries t1 = NcSeries::variable(2, 3, 0), t2 = NcSeries::variable(2, 3, 1);
    CHECK((t1 * t2).coefficient({0, 1}) == 1);
    CHECK((t1 * t2).coefficient({1, 0}) == 0);
    CHECK(t1 * t2 != t2 * t1);
    CHECK_THROWS_AS(series_mul(NcSeries(2, 3), NcSeries(2, 4)), Error);
    CHECK_THROWS_AS(series_add(NcSeries(2, 3), NcSeries(3, 3)), Error);
    CHECK(series_scale(t1, 0).is_zero());
}

TEST_CASE("expansion examples")
{
    CHECK(magnus_expand(parse_word("x1", 2), 3).to_string() == "1 + t1");
    CHECK(magnus_expand(parse_word("x1^-1", 2), 2).to_string() == "1 - t1 + t1 t1");
    CHECK(magnus_expand(parse_word("[g1,g2]", 2), 2).to_string() == "1 + t1 t2 - t2 t1");
    // under the symplectic names x2 is the third generator
    CHECK(magnus_expand(parse_word("[x1,x2]", 4), 2).to_string() == "1 + t1 t3 - t3 t1");
}

TEST_CASE("weights")
{
    CHECK(lcs_weight(parse_word("x1", 2), 4) == LcsWeight::finite(1));
    CHECK(lcs_weight(parse_word("[g1,g2]", 2), 4) == LcsWeight::finite(2));
    CHECK(lcs_weight(parse_word("[[g1,g2],g1]", 2), 4) == LcsWeight::finite(3));
    CHECK(lcs_weight(GroupWord(2), 4) == LcsWeight::infinite());
    CHECK(lcs_weight(parse_word("[[g1,g2],g1]", 2), 2) == LcsWeight::exceeds_cap());
    CHECK(LcsWeight::exceeds_cap().at_least(3, 2));
    CHECK_FALSE(LcsWeight::exceeds_cap().at_least(4, 2));
}

TEST_CASE("leading terms")
{
    LeadingTerm lt = leading_term(parse_word("[g1,g2]", 2), 4);
    CHECK(lt.degree == 2);
    CHECK(lt.term.to_string() == "t1 t2 - t2 t1");
    lt = leading_term(surface_relator(2), 5);
    CHECK(lt.degree == 2);
    CHECK(lt.term.to_string() == "t1 t2 - t2 t1 + t3 t4 - t4 t3");
    CHECK(leading_term(parse_word("x1", 2), 3).term.to_string() == "t1");
    CHECK_THROWS_AS(leading_term(GroupWord(2), 3), Error);
    try {
        leading_term(parse_word("[[g1,g2],g1]", 2), 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::exceeds_cap);
    }
}

TEST_CASE("oracle agreement and multiplicativity")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const int rank = 1 + static_cast<int>(rng() % 3), cap = 1 + static_cast<int>(rng() % 5);
        std::vector<Letter> lu, lv;
        for (int k = static_cast<int>(rng() % 7); k > 0; --k)
            lu.push_back({static_cast<int>(rng() % rank), rng() % 2 ? 1 : -1});
        for (int k = static_cast<int>(rng() % 7); k > 0; --k)
            lv.push_back({static_cast<int>(rng() % rank), rng() % 2 ? 1 : -1});
        const GroupWord u(rank, lu), v(rank, lv);
        CHECK(agrees(magnus_expand(u, cap), oracle(u, cap)));
        CHECK(magnus_expand(u * v, cap) == magnus_expand(u, cap) * magnus_expand(v, cap));
    }
}
