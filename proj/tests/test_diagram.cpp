#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/diagram.hpp"
#include "hcyl/error.hpp"

#include <random>

using namespace hcyl;

namespace {

// Tripod oracle: some automorphism reverses the orientation exactly when two
// legs share a color (the transposition swapping them).
bool tripod_degenerate(int a, int b, int c) { return a == b || b == c || a == c; }

// Relabels vertices and legs of a raw diagram and rotates each vertex's
// cyclic triple; the diagram is unchanged up to orientation.
RawDiagram shuffle(const RawDiagram& d, std::mt19937_64& rng)
{
    const int v = d.verts, k = d.legs();
    std::vector<int> vperm(static_cast<std::size_t>(v)), lperm(static_cast<std::size_t>(k));
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(lperm.begin(), lperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    // half-edge map: vertex half-edges keep their slot, leg half-edges follow the leg
    std::vector<int> hmap(static_cast<std::size_t>(d.half_edges()));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < 3; ++j)
            hmap[static_cast<std::size_t>(3 * i + j)] = 3 * vperm[static_cast<std::size_t>(i)] + j;
    for (int j = 0; j < k; ++j)
        hmap[static_cast<std::size_t>(3 * v + j)] = 3 * v + lperm[static_cast<std::size_t>(j)];
    RawDiagram out;
    out.verts = v;
    out.cyclic.assign(static_cast<std::size_t>(v), {});
    out.mate.assign(static_cast<std::size_t>(d.half_edges()), 0);
    out.colors = d.colors;
    for (int i = 0; i < v; ++i) {
        auto t = d.cyclic[static_cast<std::size_t>(i)];
        const int r = static_cast<int>(rng() % 3);
        std::rotate(t.begin(), t.begin() + r, t.end());
        for (int& h : t)
            h = hmap[static_cast<std::size_t>(h)];
        out.cyclic[static_cast<std::size_t>(vperm[static_cast<std::size_t>(i)])] = t;
    }
    for (int h = 0; h < d.half_edges(); ++h)
        out.mate[static_cast<std::size_t>(hmap[static_cast<std::size_t>(h)])] =
            hmap[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])];
    return out;
}

int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

} // namespace

TEST_CASE("tripods: antisymmetry and cyclic invariance")
{
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                const Canonical t = canonicalize(tripod(a, b, c));
                CHECK(t.zero == tripod_degenerate(a, b, c));
                if (t.zero)
                    continue;
                CHECK(DiagramSum::of(tripod(b, c, a)) == DiagramSum::of(tripod(a, b, c)));
                CHECK(DiagramSum::of(tripod(b, a, c)) == Rational(-1) * DiagramSum::of(tripod(a, b, c)));
            }
    CHECK(DiagramSum::of(tripod(0, 0, 1)).is_zero());
    CHECK(describe(canonicalize(tripod(0, 2, 3)).diagram, 4).rfind("Y(", 0) == 0);
}

TEST_CASE("validation")
{
    RawDiagram bad = tripod(0, 1, 2);
    bad.mate[0] = 1;
    CHECK_THROWS_AS(bad.validate(), Error);
    RawDiagram strut;
    strut.colors = {0, 1};
    strut.mate = {1, 0};
    CHECK_THROWS_AS(strut.validate(), Error);
}

TEST_CASE("shape counts")
{
    CHECK(enumerate_shapes(1, true).size() == 1);
    CHECK(enumerate_shapes(2, true).size() == 1);
    CHECK(enumerate_shapes(3, true).size() == 1);
    CHECK(enumerate_shapes(4, true).size() == 2);
    // degree 2 connected graphs: the H tree and the one-loop graph with two legs
    // (theta-shaped graphs need degree 2 with no legs)
    for (const Diagram& d : enumerate_shapes(2, false))
        CHECK(d.is_connected());
    for (const Diagram& d : enumerate_shapes(3, true)) {
        CHECK(d.is_tree());
        CHECK(d.legs() == 5);
    }
}

TEST_CASE("canonical form is invariant under relabeling")
{
    std::mt19937_64 rng(21);
    for (int degree = 1; degree <= 3; ++degree)
        for (const Canonical& c : enumerate_colored(degree, 3, false)) {
            const RawDiagram raw = c.diagram.raw();
            for (int rep = 0; rep < 4; ++rep) {
                const RawDiagram s = shuffle(raw, rng);
                s.validate();
                const Canonical cs = canonicalize(s);
                CHECK(cs.diagram == c.diagram);
                CHECK(cs.zero == c.zero);
            }
        }
}

TEST_CASE("reversing one vertex orientation flips the sign")
{
    std::mt19937_64 rng(4);
    for (const Canonical& c : enumerate_colored(3, 4, true)) {
        if (c.zero)
            continue;
        RawDiagram raw = c.diagram.raw();
        const int v = static_cast<int>(rng() % static_cast<unsigned>(raw.verts));
        std::swap(raw.cyclic[static_cast<std::size_t>(v)][1], raw.cyclic[static_cast<std::size_t>(v)][2]);
        const Canonical flipped = canonicalize(raw);
        CHECK(flipped.diagram == c.diagram);
        CHECK(flipped.sign == -canonicalize(c.diagram.raw()).sign);
    }
}

TEST_CASE("tree space dimensions")
{
    for (int m = 2; m <= 6; ++m)
        CHECK(tree_space(1, m).dimension() == binomial(m, 3));
    CHECK(tree_space(2, 2).dimension() == 1);
    CHECK(tree_space(2, 3).dimension() == 6);
    CHECK_THROWS_AS(tree_space(4, 2), Error);
}

TEST_CASE("IHX relators vanish in the quotient")
{
    const TreeSpace& ts = tree_space(2, 3);
    for (const DiagramSum& r : ihx_relators(2, 3, true))
        CHECK(ts.reduce(r).is_zero());
    // reduce is idempotent and lands in the basis
    for (const Diagram& d : ts.trees) {
        const DiagramSum once = ts.reduce(DiagramSum::of(d));
        CHECK(ts.reduce(once) == once);
        for (const auto& [b, c] : once.terms())
            CHECK(std::binary_search(ts.basis.begin(), ts.basis.end(), b));
        CHECK(ts.equal_mod_ihx(once, DiagramSum::of(d)));
    }
}

TEST_CASE("gluing and multilinear expansion")
{
    const Diagram a = canonicalize(tripod(0, 1, 2)).diagram;
    const Diagram b = canonicalize(tripod(1, 2, 3)).diagram;
    const Canonical g = canonicalize(glue(a, b, {{0, 0}}));
    CHECK(g.diagram.degree() == 2);
    CHECK(g.diagram.legs() == 4);
    CHECK(g.diagram.is_tree());
    const Canonical loop = canonicalize(glue(a, b, {{0, 0}, {1, 1}}));
    CHECK(loop.diagram.loop_rank() == 1);
    const Diagram disjoint = canonicalize(glue(a, b, {})).diagram;
    CHECK(disjoint.components() == 2);

    // raw legs of tripod(a, b, c) are a, c, b
    ColoredShape shape{tripod(0, 0, 0), {}};
    HVector u{3, {1, 1, 0}}, w{3, {0, 0, 1}}, e2 = HVector::basis(3, 1);
    shape.leg_colors = {u, w, e2};
    // Y(g1+g2, g2, g3) = Y(g1, g2, g3)
    CHECK(expand_multilinear(shape) == DiagramSum::of(tripod(0, 1, 2)));
}
