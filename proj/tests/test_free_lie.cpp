#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/error.hpp"
#include "hcyl/free_lie.hpp"

#include <random>

using namespace hcyl;

namespace {

// Brute force: aperiodic words strictly smaller than all their rotations.
long brute_lyndon(int m, int n)
{
    long count = 0;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (int r = 1; r < n && ok; ++r) {
            std::vector<int> rot(w.begin() + r, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + r);
            ok = w < rot;
        }
        count += ok;
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == m - 1)
            w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++w[static_cast<std::size_t>(i)];
    }
    return count;
}

// Recursive tensor expansion of a bracket string, independent of the library.
using Poly = std::map<std::vector<int>, long>;

Poly expand(const std::string& s, std::size_t& pos)
{
    if (s[pos] == 'g') {
        ++pos;
        int g = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            g = 10 * g + (s[pos++] - '0');
        return {{{g - 1}, 1}};
    }
    ++pos; // '['
    Poly a = expand(s, pos);
    ++pos; // ','
    Poly b = expand(s, pos);
    ++pos; // ']'
    Poly out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            auto xy = x, yx = y;
            xy.insert(xy.end(), y.begin(), y.end());
            yx.insert(yx.end(), x.begin(), x.end());
            out[xy] += cx * cy;
            out[yx] -= cx * cy;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool same(const NcSeries& s, const Poly& p)
{
    if (s.terms().size() != p.size())
        return false;
    for (const auto& [m, c] : s.terms()) {
        auto it = p.find(std::vector<int>(m.begin(), m.end()));
        if (it == p.end() || c != Rational(it->second))
            return false;
    }
    return true;
}

LieElement random_lie(std::mt19937_64& rng, int m, int n)
{
    LieElement u(m, n);
    for (const Word& w : lyndon_words(m, n))
        if (rng() % 2)
            u.add_term(w, static_cast<long>(rng() % 7) - 3);
    return u;
}

} // namespace

TEST_CASE("lyndon counts match brute force and the necklace formula")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 6; ++n) {
            const long b = brute_lyndon(m, n);
            CHECK(static_cast<long>(lyndon_words(m, n).size()) == b);
            CHECK(dim_lie(m, n) == b);
        }
    CHECK(dim_lie(2, 2) == 1);
    CHECK(dim_lie(2, 3) == 2);
    CHECK(dim_lie(4, 2) == 6);
    CHECK(dim_lie(4, 3) == 20);
}

TEST_CASE("lyndon words and factorization")
{
    CHECK(is_lyndon({0, 1}));
    CHECK_FALSE(is_lyndon({1, 0}));
    CHECK_FALSE(is_lyndon({0, 1, 0, 1}));
    for (const Word& w : lyndon_words(3, 5)) {
        CHECK(is_lyndon(w));
        auto [u, v] = standard_factorization(w);
        CHECK(is_lyndon(u));
        CHECK(is_lyndon(v));
        CHECK(u < v);
    }
    CHECK(bracket_string({0, 0, 1}) == "[g1,[g1,g2]]");
    CHECK(bracket_string({0, 1, 1}) == "[[g1,g2],g2]");
}

TEST_CASE("basis tensors agree with recursive expansion")
{
    for (int n = 1; n <= 5; ++n)
        for (const Word& w : lyndon_words(3, n)) {
            const std::string text = bracket_string(w);
            std::size_t pos = 0;
            CHECK(same(to_tensor(LieElement::basis(3, w)), expand(text, pos)));
            // the lexicographically smallest monomial is the word itself
            CHECK(lyndon_tensor(w).begin()->first == w);
            CHECK(lyndon_tensor(w).begin()->second == 1);
        }
}

TEST_CASE("bracket parsing and basis rewriting")
{
    const LieElement u = parse_lie_bracket("[g2,g1]", 2);
    CHECK(u.coefficient({0, 1}) == -1);
    const LieElement v = parse_lie_bracket("[[g1,g2],g1]", 2);
    CHECK(v.coefficient({0, 0, 1}) == -1);
    CHECK(v.terms().size() == 1);
    CHECK(parse_lie_bracket("[x1,y1]", 2) == LieElement::basis(2, {0, 1}));
    CHECK_THROWS_AS(parse_lie_bracket("[g1,", 2), Error);
    CHECK(lie_bracket(LieElement::generator(2, 0), LieElement::generator(2, 0)).is_zero());
}

TEST_CASE("lie identities on random elements")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 2);
        const int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 2),
                  c = 1 + static_cast<int>(rng() % 2);
        const LieElement x = random_lie(rng, m, a), y = random_lie(rng, m, b), z = random_lie(rng, m, c);
        CHECK(lie_bracket(x, y) + lie_bracket(y, x) == LieElement(m, a + b));
        const LieElement jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                               lie_bracket(z, lie_bracket(x, y));
        CHECK(jac.is_zero());
        const NcSeries tx = to_tensor(x), ty = to_tensor(y);
        CHECK(to_tensor(lie_bracket(x, y)) == tx.with_cap(a + b) * ty.with_cap(a + b) -
                                                  ty.with_cap(a + b) * tx.with_cap(a + b));
        CHECK(from_tensor(to_tensor(x), a) == x);
        if (!x.is_zero())
            CHECK(dynkin_projection(to_tensor(x), a) == to_tensor(x));
    }
}

TEST_CASE("non-lie polynomials are rejected")
{
    NcSeries s(2, 2);
    s.add_term({0, 1}, 1);
    CHECK_THROWS_AS(from_tensor(s, 2), Error);
    // Dynkin projection of t1 t2 is half the commutator
    NcSeries d = dynkin_projection(s, 2);
    CHECK(d.coefficient({0, 1}) == Rational(1, 2));
    CHECK(d.coefficient({1, 0}) == Rational(-1, 2));
}

TEST_CASE("group classes")
{
    CHECK(from_leading(parse_word("[[g1,g2],g1]", 2), 4) == parse_lie_bracket("[[g1,g2],g1]", 2));
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : lyndon_words(3, n)) {
            const GroupWord g = lyndon_word_lift(3, w);
            CHECK(from_leading(g, n + 1) == LieElement::basis(3, w));
        }
}
