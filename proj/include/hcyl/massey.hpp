#pragma once

#include "hcyl/dn_space.hpp"
#include "hcyl/free_group.hpp"

#include <utility>
#include <vector>

namespace hcyl {

/// Value of the length-|I| universal Massey product <u_I> on the class of w,
/// i.e. the coefficient of t_I in the Magnus expansion. Throws
/// Error(weight_mismatch) unless w has weight exactly |I|.
Integer massey_eval(const Monomial& index, const GroupWord& w, int cap);

/// The class of w rebuilt from Massey values: sum_I <u_I>(w) t_I, read back in
/// the Lyndon basis.
LieElement mu_hat(const GroupWord& w, int cap);

struct MuElement {
    HTensorLie tensor;
    bool in_dn;
};

/// sum u (x) class(w) over the pairs, all w of one weight n, and whether the
/// result lies in D_n(H). An empty list gives 0 in degree 1.
MuElement mu_element(const std::vector<std::pair<HVector, GroupWord>>& pairs, int rank, int cap);

} // namespace hcyl
