#pragma once

#include "hcyl/free_group.hpp"
#include "hcyl/nc_series.hpp"
#include "hcyl/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hcyl {

/// Word over the ordered alphabet g_1 < g_2 < ... (0-based letters).
using Word = Monomial;

bool is_lyndon(const Word& w);

/// All Lyndon words of length n over m letters, lexicographically ordered
/// (Duval's algorithm).
std::vector<Word> lyndon_words(int m, int n);

/// w = u v with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Standard bracketing of a Lyndon word, e.g. "[g1,[g1,g2]]".
std::string bracket_string(const Word& w);

/// Parses a nested bracket string over g<i> (or x<i>/y<i> for the given
/// rank) into a word sequence of leaves and a bracketing tree. Used by the
/// CLI and JSON readers; see parse_lie_bracket.
class LieElement;
LieElement parse_lie_bracket(std::string_view text, int rank);

/// Dimension of L_n(Q^m) from the necklace formula (1/n) sum_{d|n} mu(d) m^{n/d}.
std::int64_t dim_lie(int m, int n);

/// Element of L_n(Q^m) in the Lyndon basis. Keys are Lyndon words of length
/// `degree`; the word stands for its standard bracketing.
class LieElement {
public:
    using Terms = std::map<Word, Rational>;

    LieElement(int rank, int degree);

    static LieElement basis(int rank, const Word& lyndon);
    static LieElement generator(int rank, int gen);

    int rank() const noexcept { return rank_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add_term(const Word& lyndon, const Rational& c);

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);

    std::string to_string() const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    int rank_;
    int degree_;
    Terms terms_;
};

LieElement operator+(LieElement a, const LieElement& b);
LieElement operator-(LieElement a, const LieElement& b);
LieElement operator*(const Rational& c, const LieElement& a);

/// Degrees add; the result is re-expressed in the Lyndon basis.
LieElement lie_bracket(const LieElement& u, const LieElement& v);

/// Embedding into homogeneous non-commutative polynomials, [p,q] -> pq - qp.
NcSeries to_tensor(const LieElement& u);

/// Tensor of the standard bracketing of one Lyndon word (memoized).
const NcSeries::Terms& lyndon_tensor(const Word& lyndon);

/// Inverse of to_tensor on its image. Every Lie polynomial has, as its
/// lexicographically smallest monomial, the Lyndon word of its smallest basis
/// component with the same coefficient, so the coordinates are peeled off one
/// basis tensor at a time. Throws Error(not_lie) outside the image.
LieElement from_tensor(const NcSeries& s, int degree);

/// Dynkin projection (1/n) sum_w c_w [w_1,[w_2,...,w_n]] of a homogeneous
/// polynomial of degree n >= 1, computed entirely in the tensor algebra.
/// Fixes exactly the Lie polynomials.
NcSeries dynkin_projection(const NcSeries& s, int degree);

/// The class of w in F_n/F_{n+1} = L_n(H), n = lcs weight of w.
LieElement from_leading(const GroupWord& w, int cap);

/// Literal nested commutator word for a Lyndon bracket: g_i -> g_i, [u,v] -> u v u^-1 v^-1.
GroupWord lyndon_word_lift(int rank, const Word& lyndon);

} // namespace hcyl
