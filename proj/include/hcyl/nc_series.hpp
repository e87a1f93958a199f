#pragma once

#include "hcyl/free_group.hpp"
#include "hcyl/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hcyl {

/// Index sequence I = (i_1, ..., i_r) naming the monomial t_I = t_{i_1} ... t_{i_r}.
/// Indices are 0-based generator numbers; the empty monomial is the constant 1.
using Monomial = std::vector<std::uint8_t>;

/// Truncated power series in non-commuting variables t_1..t_rank with exact
/// rational coefficients. Terms of length greater than `cap` are discarded by
/// every operation; no zero coefficient is ever stored. Terms iterate in
/// lexicographic order of their index sequences.
class NcSeries {
public:
    using Terms = std::map<Monomial, Rational>;

    NcSeries(int rank, int cap);

    static NcSeries one(int rank, int cap);
    static NcSeries variable(int rank, int cap, int gen);

    int rank() const noexcept { return rank_; }
    int cap() const noexcept { return cap_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Monomial& mono) const;

    /// Adds `coeff * t_mono`; silently drops monomials beyond the cap.
    void add_term(const Monomial& mono, const Rational& coeff);

    NcSeries homogeneous_part(int degree) const;

    /// Lowest degree >= 1 carrying a nonzero coefficient, or -1 if none.
    int lowest_positive_degree() const;

    /// Same terms under a different cap (terms beyond the new cap are dropped).
    NcSeries with_cap(int cap) const;

    std::string to_string() const;

    friend bool operator==(const NcSeries&, const NcSeries&) = default;

private:
    int rank_;
    int cap_;
    Terms terms_;
};

NcSeries series_add(const NcSeries& p, const NcSeries& q);
NcSeries series_sub(const NcSeries& p, const NcSeries& q);
NcSeries series_scale(const NcSeries& p, const Rational& c);
NcSeries series_mul(const NcSeries& p, const NcSeries& q);

inline NcSeries operator+(const NcSeries& p, const NcSeries& q) { return series_add(p, q); }
inline NcSeries operator-(const NcSeries& p, const NcSeries& q) { return series_sub(p, q); }
inline NcSeries operator*(const NcSeries& p, const NcSeries& q) { return series_mul(p, q); }
inline NcSeries operator*(const Rational& c, const NcSeries& p) { return series_scale(p, c); }

/// Magnus expansion: the multiplicative map x_i -> 1 + t_i, truncated at `cap`.
NcSeries magnus_expand(const GroupWord& w, int cap);

/// Position of a word in the lower central series as seen through a Magnus cap.
struct LcsWeight {
    enum class Kind { finite, exceeds_cap, infinite };

    Kind kind = Kind::finite;
    int value = 0; ///< only meaningful for Kind::finite

    static LcsWeight finite(int n) { return {Kind::finite, n}; }
    static LcsWeight exceeds_cap() { return {Kind::exceeds_cap, 0}; }
    static LcsWeight infinite() { return {Kind::infinite, 0}; }

    bool is_finite() const noexcept { return kind == Kind::finite; }
    /// True when the weight is certainly >= n (unknown weights above the cap
    /// count as >= n only when n <= cap + 1).
    bool at_least(int n, int cap) const noexcept;

    std::string to_string() const;

    friend bool operator==(const LcsWeight&, const LcsWeight&) = default;
};

/// Largest n with w in F_n, read off as the lowest degree of magnus(w) - 1.
LcsWeight lcs_weight(const GroupWord& w, int cap);

struct LeadingTerm {
    int degree;
    NcSeries term; ///< homogeneous of `degree`
};

/// The image of the class of w in F_n/F_{n+1}. Throws Error(infinite_weight)
/// for the identity and Error(exceeds_cap) when the weight is above `cap`.
LeadingTerm leading_term(const GroupWord& w, int cap);

} // namespace hcyl
