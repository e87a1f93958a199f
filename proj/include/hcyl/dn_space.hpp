#pragma once

#include "hcyl/free_lie.hpp"
#include "hcyl/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hcyl {

/// Vector of H = Q^rank in the generator basis.
struct HVector {
    int rank = 1;
    std::vector<Rational> coords;

    static HVector basis(int rank, int gen);
    bool is_zero() const;

    friend bool operator==(const HVector&, const HVector&) = default;
};

/// Element of H (x) L_n(H), keyed by (generator index of the H factor,
/// Lyndon word of the L_n factor).
class HTensorLie {
public:
    using Key = std::pair<int, Word>;
    using Terms = std::map<Key, Rational>;

    HTensorLie(int rank, int lie_degree);

    int rank() const noexcept { return rank_; }
    int lie_degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int h, const Word& w) const;

    void add_term(int h, const Word& lyndon, const Rational& c);
    /// Adds h (x) u for an arbitrary Lie element u.
    void add_tensor(const HVector& h, const LieElement& u);
    void add_tensor(int h, const LieElement& u, const Rational& c = 1);

    HTensorLie& operator+=(const HTensorLie& other);
    HTensorLie& operator-=(const HTensorLie& other);

    std::string to_string() const;

    friend bool operator==(const HTensorLie&, const HTensorLie&) = default;

private:
    int rank_;
    int degree_;
    Terms terms_;
};

HTensorLie operator+(HTensorLie a, const HTensorLie& b);
HTensorLie operator-(HTensorLie a, const HTensorLie& b);
HTensorLie operator*(const Rational& c, const HTensorLie& a);

/// a (x) b -> [a, b], landing in L_{n+1}.
LieElement bracket_contraction(const HTensorLie& theta);

bool dn_contains(const HTensorLie& theta);

/// Coordinates of H (x) L_n(H): column h * dim L_n + (index of the Lyndon word).
class HTensorCoordinates {
public:
    HTensorCoordinates(int rank, int lie_degree);

    int size() const noexcept { return static_cast<int>(words_.size()) * rank_; }
    int column(int h, const Word& w) const;
    SparseVector to_vector(const HTensorLie& theta) const;
    HTensorLie from_vector(const SparseVector& v) const;

private:
    int rank_;
    int degree_;
    std::vector<Word> words_;
    std::map<Word, int> index_;
};

/// Reduced-echelon basis of D_n(Q^m) = ker(H (x) L_n -> L_{n+1}).
struct DnBasis {
    int rank;
    int degree;
    std::vector<HTensorLie> basis;
};

/// Memoized; the returned reference stays valid for the program lifetime.
const DnBasis& dn_basis(int m, int n);

} // namespace hcyl
