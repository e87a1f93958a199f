#pragma once

#include "hcyl/diagram.hpp"

#include <vector>

namespace hcyl {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Intersection form J of H = Z^{2g}: J(x_i, y_i) = 1 = -J(y_i, x_i).
IntMatrix intersection_matrix(int genus);

/// Integer bilinear form s(a,b) on basis vectors with s - s^T = J.
class StackingForm {
public:
    /// Throws Error(precondition) unless s - s^T = J and s is 2g x 2g.
    StackingForm(int genus, IntMatrix s);

    static bool is_valid(int genus, const IntMatrix& s);

    int genus() const noexcept { return genus_; }
    int rank() const noexcept { return 2 * genus_; }
    const IntMatrix& matrix() const noexcept { return s_; }
    const Integer& operator()(int a, int b) const { return s_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

private:
    int genus_;
    IntMatrix s_;
};

/// s(x_i, y_i) = 1, every other entry 0.
StackingForm default_stacking(int genus);

/// Antisymmetric rational form c = -c^T.
class SkewForm {
public:
    SkewForm(int rank, RatMatrix c);

    int rank() const noexcept { return static_cast<int>(c_.size()); }
    const RatMatrix& matrix() const noexcept { return c_; }
    const Rational& operator()(int a, int b) const { return c_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

private:
    RatMatrix c_;
};

/// The form omega(a,b) = a . b, i.e. J as a skew form.
SkewForm symplectic_form(int genus);

/// Sum over single contractions (leg of a term of g, leg of a term of h),
/// weighted by c(color, color').
DiagramSum contraction_bracket(const DiagramSum& g, const DiagramSum& h, const SkewForm& c);

/// Stacking product: over every partial matching between the legs of the two
/// factors (each matching counted once), (-1)^l prod s(a_i, b_i) times the
/// glued diagram. l = 0 is the disjoint union; the empty diagram is the unit.
DiagramSum star(const DiagramSum& g, const DiagramSum& h, const StackingForm& s);

/// g * h - h * g
DiagramSum stack_bracket(const DiagramSum& g, const DiagramSum& h, const StackingForm& s);

/// Drops every diagram of positive loop rank.
DiagramSum project_trees(const DiagramSum& g);

} // namespace hcyl
