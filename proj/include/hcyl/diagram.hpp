#pragma once

#include "hcyl/dn_space.hpp"
#include "hcyl/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hcyl {

/// Unreduced encoding of a uni-trivalent vertex-oriented graph.
///
/// Trivalent vertex v owns the three half-edges listed in cyclic[v], in
/// counterclockwise order; together the triples partition 0..3*verts-1.
/// Leg j (a univalent vertex) owns half-edge 3*verts + j. `mate` is the edge
/// involution on all half-edges. Colors are 0-based generator indices of H.
struct RawDiagram {
    int verts = 0;
    std::vector<std::array<int, 3>> cyclic;
    std::vector<int> mate;
    std::vector<int> colors;

    int legs() const noexcept { return static_cast<int>(colors.size()); }
    int half_edges() const noexcept { return 3 * verts + legs(); }
    int leg_half_edge(int leg) const noexcept { return 3 * verts + leg; }

    /// Throws Error(malformed) unless the structural invariants hold.
    void validate() const;
};

struct Canonical;
Canonical canonicalize(const RawDiagram& raw);

/// Canonically labeled diagram. Vertex v owns half-edges 3v, 3v+1, 3v+2 in
/// that cyclic order; leg j owns half-edge 3*degree()+j. Isomorphic oriented
/// diagrams have identical canonical forms up to a global sign, which
/// canonicalize() reports separately.
class Diagram {
public:
    Diagram() = default; ///< the empty diagram, unit of the star product

    int degree() const noexcept { return verts_; }
    int legs() const noexcept { return static_cast<int>(colors_.size()); }
    const std::vector<int>& mate() const noexcept { return mate_; }
    const std::vector<int>& colors() const noexcept { return colors_; }

    int components() const;
    /// First Betti number.
    int loop_rank() const;
    bool is_connected() const { return components() <= 1; }
    bool is_tree() const { return verts_ >= 1 && components() == 1 && loop_rank() == 0; }
    bool is_empty() const noexcept { return verts_ == 0 && colors_.empty(); }

    /// Trivalent vertex owning the half-edge the leg is glued to.
    int leg_vertex(int leg) const { return mate_[static_cast<std::size_t>(3 * verts_ + leg)] / 3; }

    RawDiagram raw() const;

    friend auto operator<=>(const Diagram&, const Diagram&) = default;
    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    friend Canonical canonicalize(const RawDiagram&);

    int verts_ = 0;
    std::vector<int> mate_;
    std::vector<int> colors_;
};

/// Result of canonical labeling. `sign` relates the input to `diagram`
/// (input = sign * diagram); `zero` is set when an automorphism reverses an
/// odd number of vertex orientations, so the input equals minus itself.
struct Canonical {
    Diagram diagram;
    int sign = 1;
    bool zero = false;
};

/// Finite rational combination of canonical diagrams modulo AS.
class DiagramSum {
public:
    using Terms = std::map<Diagram, Rational>;

    DiagramSum() = default;
    static DiagramSum of(const Diagram& d, const Rational& c = 1);
    static DiagramSum of(const RawDiagram& raw, const Rational& c = 1);
    /// The empty diagram with coefficient 1.
    static DiagramSum unit();

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Diagram& d) const;

    /// `d` must already be canonical (as returned by canonicalize).
    void add(const Diagram& d, const Rational& c);
    /// Canonicalizes, folds the sign into the coefficient, drops AS-zero input.
    void add(const RawDiagram& raw, const Rational& c);

    DiagramSum& operator+=(const DiagramSum& other);
    DiagramSum& operator-=(const DiagramSum& other);

    std::string to_string() const;

    friend bool operator==(const DiagramSum&, const DiagramSum&) = default;

private:
    Terms terms_;
};

DiagramSum operator+(DiagramSum a, const DiagramSum& b);
DiagramSum operator-(DiagramSum a, const DiagramSum& b);
DiagramSum operator*(const Rational& c, const DiagramSum& a);

/// Degree-1 tree with legs a, b, c listed clockwise (stored counterclockwise
/// as a, c, b). With this reading psi(tripod(a,b,c)) = a(x)[c,b] + c(x)[b,a] + b(x)[a,c].
RawDiagram tripod(int a, int b, int c);

/// Human-readable one-line form, e.g. "Y(x1,x2,y2)" for tripods and a
/// half-edge listing otherwise.
std::string describe(const Diagram& d, int rank = 0);

/// Disjoint union of a and b with leg pairs (leg of a, leg of b) fused into
/// edges. Legs that are not glued keep their relative order (a's first).
RawDiagram glue(const Diagram& a, const Diagram& b, const std::vector<std::pair<int, int>>& pairs);

/// A diagram shape whose legs carry arbitrary vectors of H.
struct ColoredShape {
    RawDiagram shape; ///< colors ignored
    std::vector<HVector> leg_colors;
};

/// Multilinear expansion into basis-colored diagrams.
DiagramSum expand_multilinear(const ColoredShape& d);

/// Connected uni-trivalent shapes (all legs colored 0) with `degree` trivalent
/// vertices, up to isomorphism. Loop diagrams are included unless trees_only.
std::vector<Diagram> enumerate_shapes(int degree, bool trees_only);

/// All canonical basis colorings of the connected shapes of a degree,
/// including AS-degenerate ones (flagged in the returned Canonical).
std::vector<Canonical> enumerate_colored(int degree, int rank, bool trees_only);

/// Jacobi-form IHX relators, T1 + T2 + T3 = 0, one per internal edge (joining
/// two distinct trivalent vertices) of every enumerated colored diagram.
/// With u = (e, A, B) and v = (e, C, D) the terms are the graphs where u
/// carries (A, B), (B, C), (C, A) and v carries the remaining end next to D.
std::vector<DiagramSum> ihx_relators(int degree, int rank, bool trees_only);

/// The three raw terms of the relator at one internal edge, before
/// canonical folding. `half_edge` names one side of the edge.
std::array<RawDiagram, 3> ihx_terms(const RawDiagram& d, int half_edge);

/// Tree space A^t_n(Q^m): degree-n colored trees modulo AS and IHX.
struct TreeSpace {
    int degree;
    int rank;
    std::vector<Diagram> trees;         ///< AS-nonzero canonical trees, sorted; coordinate i = trees[i]
    EchelonBasis relations;             ///< echelon form of the IHX relator span in those coordinates
    std::vector<Diagram> basis;         ///< trees whose coordinate is not a relator pivot

    int dimension() const noexcept { return static_cast<int>(basis.size()); }
    SparseVector to_vector(const DiagramSum& s) const;
    /// Normal form modulo IHX: a combination of `basis` trees.
    DiagramSum reduce(const DiagramSum& s) const;
    bool equal_mod_ihx(const DiagramSum& a, const DiagramSum& b) const;
};

/// Supported for degree 1..3 and rank <= 6; throws Error(bounds) beyond.
const TreeSpace& tree_space(int degree, int rank);

} // namespace hcyl
