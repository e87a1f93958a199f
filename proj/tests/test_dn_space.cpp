#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/dn_space.hpp"
#include "hcyl/error.hpp"

#include <random>

using namespace hcyl;

namespace {

// Kernel dimension from the rank of the contraction matrix built directly on
// tensor coordinates (a (x) b -> a b - b a in the tensor algebra).
int oracle_dim(int m, int n)
{
    const auto words = lyndon_words(m, n);
    std::vector<SparseVector> columns;
    std::map<Monomial, int> index;
    for (int h = 0; h < m; ++h)
        for (const Word& w : words) {
            SparseVector col;
            for (const auto& [mono, c] : lyndon_tensor(w)) {
                Monomial hl{static_cast<std::uint8_t>(h)}, lh = mono;
                hl.insert(hl.end(), mono.begin(), mono.end());
                lh.push_back(static_cast<std::uint8_t>(h));
                for (auto [key, sgn] : {std::pair{hl, 1}, std::pair{lh, -1}}) {
                    auto [it, _] = index.emplace(key, static_cast<int>(index.size()));
                    axpy(col, c * sgn, SparseVector{{it->second, 1}});
                }
            }
            columns.push_back(col);
        }
    return m * static_cast<int>(words.size()) - column_rank(columns);
}

} // namespace

TEST_CASE("kernel dimensions")
{
    CHECK(dn_basis(2, 1).basis.size() == 3);
    CHECK(dn_basis(2, 2).basis.size() == 0);
    CHECK(dn_basis(2, 3).basis.size() == 1);
    CHECK(dn_basis(4, 1).basis.size() == 10);
    CHECK(dn_basis(4, 2).basis.size() == 4);
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= (m == 4 ? 3 : 4); ++n)
            CHECK(static_cast<int>(dn_basis(m, n).basis.size()) == oracle_dim(m, n));
}

TEST_CASE("rank formula")
{
    // dim D_n = m dim L_n - dim L_{n+1} since the contraction is onto
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n)
            CHECK(static_cast<std::int64_t>(dn_basis(m, n).basis.size()) ==
                  m * dim_lie(m, n) - dim_lie(m, n + 1));
}

TEST_CASE("basis elements lie in the kernel and are independent")
{
    for (auto [m, n] : {std::pair{2, 3}, std::pair{4, 2}, std::pair{3, 3}}) {
        const DnBasis& b = dn_basis(m, n);
        HTensorCoordinates coords(m, n);
        EchelonBasis span;
        for (const HTensorLie& t : b.basis) {
            CHECK(dn_contains(t));
            CHECK(span.insert(coords.to_vector(t)));
            CHECK(coords.from_vector(coords.to_vector(t)) == t);
        }
    }
}

TEST_CASE("degree three example")
{
    const DnBasis& b = dn_basis(2, 3);
    HTensorLie t(2, 3);
    t.add_tensor(0, parse_lie_bracket("[[g1,g2],g2]", 2));
    t.add_tensor(1, parse_lie_bracket("[g1,[g1,g2]]", 2));
    CHECK(dn_contains(t));
    HTensorCoordinates coords(2, 3);
    EchelonBasis span;
    for (const HTensorLie& e : b.basis)
        span.insert(coords.to_vector(e));
    CHECK(span.contains(coords.to_vector(t)));
}

TEST_CASE("contraction")
{
    HTensorLie t(2, 1);
    t.add_term(0, {1}, 1);
    CHECK(bracket_contraction(t) == LieElement::basis(2, {0, 1}));
    t.add_term(1, {0}, 1);
    CHECK(bracket_contraction(t).is_zero());
    CHECK(dn_contains(t));
    HTensorLie u(2, 1);
    u.add_term(0, {1}, 1);
    u.add_term(1, {0}, -1);
    CHECK_FALSE(dn_contains(u));
}

TEST_CASE("random linear combinations of basis elements stay in the kernel")
{
    std::mt19937_64 rng(9);
    const DnBasis& b = dn_basis(4, 2);
    for (int trial = 0; trial < 30; ++trial) {
        HTensorLie t(4, 2);
        for (const HTensorLie& e : b.basis)
            t += Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)) * e;
        CHECK(dn_contains(t));
        CHECK((t - t).is_zero());
    }
}
