#pragma once

#include "hcyl/diagram.hpp"
#include "hcyl/dn_space.hpp"

namespace hcyl {

/// Lie element read off a tree rooted at one of its legs. At a vertex reached
/// through slot s, the subtrees behind slots s+1 and s+2 (cyclically) give
/// [left, right]; legs give their colors. Degree is tree degree + 1.
LieElement rooted_to_lie(const Diagram& tree, int root_leg, int rank);

/// Sum over legs l of color(l) (x) rooted_to_lie(tree, l). Throws
/// Error(precondition) unless the input is a connected tree.
HTensorLie psi(const Diagram& tree, int rank);

/// Linear extension; every term must be a tree of the given degree.
HTensorLie psi(const DiagramSum& s, int rank, int degree);

/// a (x) b  ->  the binary tree of the standard bracketing of b, rooted at a
/// leg colored a, with the orientation convention of rooted_to_lie.
DiagramSum rooted_embed(const HTensorLie& theta);

/// Rank of psi restricted to the basis of tree_space(degree, rank).
int psi_rank(int degree, int rank);

} // namespace hcyl
