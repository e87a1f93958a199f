#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/error.hpp"
#include "hcyl/massey.hpp"

#include <random>

using namespace hcyl;

namespace {

// Coefficient of t_I counted directly: each letter g^{+1} contributes 1 + t,
// g^{-1} contributes sum_k (-t)^k; pick a block of consecutive index entries
// per letter.
long coefficient_oracle(const std::vector<Letter>& letters, std::size_t pos, const Monomial& index, std::size_t at)
{
    if (at == index.size())
        return 1;
    if (pos == letters.size())
        return 0;
    long total = coefficient_oracle(letters, pos + 1, index, at); // constant term of this letter
    const Letter& l = letters[pos];
    for (std::size_t k = 1; at + k <= index.size(); ++k) {
        if (index[at + k - 1] != l.gen)
            break;
        if (l.sign > 0 && k > 1)
            break;
        const long c = l.sign > 0 ? 1 : (k % 2 ? -1 : 1);
        total += c * coefficient_oracle(letters, pos + 1, index, at + k);
    }
    return total;
}

GroupWord random_commutator(std::mt19937_64& rng, int rank, int leaves)
{
    if (leaves == 1)
        return GroupWord::generator(rank, static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2 ? 1 : -1);
    const int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
    return commutator(random_commutator(rng, rank, left), random_commutator(rng, rank, leaves - left));
}

} // namespace

TEST_CASE("commutator values")
{
    const GroupWord w = parse_word("[g1,g2]", 2);
    CHECK(massey_eval({0, 1}, w, 2) == 1);
    CHECK(massey_eval({1, 0}, w, 2) == -1);
    CHECK(massey_eval({0, 0}, w, 2) == 0);
    try {
        massey_eval({0}, w, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::weight_mismatch);
    }
}

TEST_CASE("class reconstruction")
{
    CHECK(mu_hat(parse_word("[[g1,g2],g1]", 2), 4) == Rational(-1) * parse_lie_bracket("[g1,[g1,g2]]", 2));
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int rank = 2 + static_cast<int>(rng() % 2);
        const GroupWord w = random_commutator(rng, rank, 2 + static_cast<int>(rng() % 3));
        const LcsWeight lw = lcs_weight(w, 4);
        if (!lw.is_finite())
            continue;
        CHECK(mu_hat(w, 4) == from_leading(w, 4));
        // every Massey value agrees with direct counting
        const int n = lw.value;
        Monomial index(static_cast<std::size_t>(n), 0);
        for (;;) {
            CHECK(massey_eval(index, w, 4) == coefficient_oracle(w.letters(), 0, index, 0));
            int i = n - 1;
            while (i >= 0 && index[static_cast<std::size_t>(i)] == rank - 1)
                index[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
            ++index[static_cast<std::size_t>(i)];
        }
    }
}

TEST_CASE("mu elements")
{
    const HVector e1 = HVector::basis(2, 0), e2 = HVector::basis(2, 1);
    const GroupWord g1 = GroupWord::generator(2, 0), g2 = GroupWord::generator(2, 1);
    MuElement sym = mu_element({{e1, g2}, {e2, g1}}, 2, 3);
    CHECK(sym.in_dn);
    CHECK(sym.tensor.lie_degree() == 1);
    CHECK_FALSE(mu_element({{e1, g2}}, 2, 3).in_dn);
    MuElement empty = mu_element({}, 2, 3);
    CHECK(empty.in_dn);
    CHECK(empty.tensor.is_zero());
    CHECK(empty.tensor.lie_degree() == 1);
    // x (x) [x,y] + y (x) [y,x] ... a degree-2 element
    MuElement two = mu_element({{e1, parse_word("[g1,g2]", 2)}}, 2, 3);
    CHECK_FALSE(two.in_dn);
    CHECK_THROWS_AS(mu_element({{e1, g1}, {e2, parse_word("[g1,g2]", 2)}}, 2, 3), Error);
}
