#pragma once

#include "hcyl/dn_space.hpp"
#include "hcyl/free_group.hpp"

#include <vector>

namespace hcyl {

/// Endomorphism of the free group given by the images of its generators.
class FreeEndo {
public:
    FreeEndo(int rank, std::vector<GroupWord> images);

    static FreeEndo identity(int rank);

    int rank() const noexcept { return rank_; }
    const std::vector<GroupWord>& images() const noexcept { return images_; }
    const GroupWord& image(int gen) const { return images_[static_cast<std::size_t>(gen)]; }

    friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

private:
    int rank_;
    std::vector<GroupWord> images_;
};

GroupWord apply(const FreeEndo& h, const GroupWord& w);
/// (h1 o h2)(w) = h1(h2(w))
FreeEndo compose(const FreeEndo& h1, const FreeEndo& h2);

/// Matrix of the induced map on H_1: column j holds the exponent sums of h(g_j).
std::vector<std::vector<Integer>> abelianization(const FreeEndo& h);

Integer determinant(std::vector<std::vector<Integer>> m);

/// True iff h induces an automorphism of H_1 over Z, which by Stallings'
/// theorem makes h an automorphism of every F/F_n. Requires n >= 2.
bool is_automorphism_mod(const FreeEndo& h, int n);

/// Automorphism of F/F_n whose lift fixes omega_g modulo F_{n+1}.
bool is_A0(const FreeEndo& h, int n);

/// D_n(h) = sum_i x_i (x) psi(y_i) - y_i (x) psi(x_i), where a^-1 h(a) has
/// class psi(a) in L_n. Throws Error(precondition) naming the offending
/// generator when h is not the identity on F/F_n or not in A_0(F/F_{n+1}).
HTensorLie johnson_map(const FreeEndo& h, int n);

/// How the Lie coefficients of theta become words.
enum class LiftStyle {
    forward,     ///< [u,v] -> u v u^-1 v^-1, terms concatenated in basis order
    alternative, ///< [u,v] -> u^-1 v^-1 u v, terms concatenated in reverse order, then
                 ///< L -> L [L, g_j] for the first generator with a nontrivial commutator
};

/// Group word whose class in F_n/F_{n+1} is u. Coefficients must be integers
/// (Error(not_integral) otherwise).
GroupWord lift_lie(const LieElement& u, LiftStyle style = LiftStyle::forward);

/// Endomorphism with johnson_map(h, n) = theta for theta in D_n(H), rank 2g.
/// Writing theta = sum_i x_i (x) a_i - y_i (x) b_i, it sends x_i -> x_i B_i and
/// y_i -> y_i A_i, where A_i, B_i lift a_i, b_i.
FreeEndo realize(const HTensorLie& theta, LiftStyle style = LiftStyle::forward);

/// Largest n <= cap with a^-1 h(a) in F_n for every generator a (cap when
/// every defect vanishes up to the cap).
int weight_level(const FreeEndo& h, int cap);

} // namespace hcyl
