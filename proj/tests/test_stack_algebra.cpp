#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/error.hpp"
#include "hcyl/stack_algebra.hpp"

#include <random>

using namespace hcyl;

namespace {

Diagram canon(const RawDiagram& raw) { return canonicalize(raw).diagram; }

// Oracle: enumerate partial matchings as (subset of left legs, injection
// into right legs) using bitmasks, independent of the library recursion.
void matchings(int left, int right, int i, unsigned used, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out)
{
    if (i == left) {
        out.push_back(cur);
        return;
    }
    matchings(left, right, i + 1, used, cur, out);
    for (int j = 0; j < right; ++j)
        if (!(used & (1u << j))) {
            cur.emplace_back(i, j);
            matchings(left, right, i + 1, used | (1u << j), cur, out);
            cur.pop_back();
        }
}

DiagramSum star_oracle(const Diagram& a, const Diagram& b, const StackingForm& s)
{
    std::vector<std::vector<std::pair<int, int>>> all;
    std::vector<std::pair<int, int>> cur;
    matchings(a.legs(), b.legs(), 0, 0, cur, all);
    DiagramSum out;
    for (const auto& m : all) {
        Rational w = m.size() % 2 ? -1 : 1;
        for (auto [i, j] : m)
            w *= Rational(s(a.colors()[static_cast<std::size_t>(i)], b.colors()[static_cast<std::size_t>(j)]));
        if (w != 0)
            out.add(glue(a, b, m), w);
    }
    return out;
}

std::vector<Diagram> sample(int rank)
{
    std::vector<Diagram> out;
    for (int degree = 1; degree <= 2; ++degree)
        for (const Canonical& c : enumerate_colored(degree, rank, false))
            if (!c.zero && c.diagram.legs() <= 4)
                out.push_back(c.diagram);
    return out;
}

} // namespace

TEST_CASE("stacking forms")
{
    CHECK(StackingForm::is_valid(1, {{0, 1}, {0, 0}}));
    CHECK(StackingForm::is_valid(1, {{2, 3}, {2, -1}}));
    CHECK_FALSE(StackingForm::is_valid(1, {{0, 1}, {1, 0}}));
    CHECK_FALSE(StackingForm::is_valid(1, {{0, 1, 0}, {0, 0, 0}}));
    CHECK_THROWS_AS(StackingForm(1, {{0, 0}, {1, 0}}), Error);
    const StackingForm s = default_stacking(2);
    CHECK(s(0, 1) == 1);
    CHECK(s(1, 0) == 0);
    CHECK(s(2, 3) == 1);
    CHECK(StackingForm::is_valid(2, s.matrix()));
    const IntMatrix j = intersection_matrix(2);
    CHECK(j[0][1] == 1);
    CHECK(j[1][0] == -1);
    CHECK(j[0][2] == 0);
}

TEST_CASE("unit")
{
    const StackingForm s = default_stacking(1);
    for (const Diagram& d : sample(2)) {
        CHECK(star(DiagramSum::unit(), DiagramSum::of(d), s) == DiagramSum::of(d));
        CHECK(star(DiagramSum::of(d), DiagramSum::unit(), s) == DiagramSum::of(d));
    }
}

TEST_CASE("agrees with matching oracle")
{
    for (int genus = 1; genus <= 2; ++genus) {
        IntMatrix m = default_stacking(genus).matrix();
        m[0][0] = 2;
        const std::vector<StackingForm> forms = {default_stacking(genus), StackingForm(genus, m)};
        const auto diagrams = sample(2 * genus);
        std::mt19937_64 rng(static_cast<unsigned>(genus));
        for (int trial = 0; trial < 150; ++trial) {
            const Diagram& a = diagrams[rng() % diagrams.size()];
            const Diagram& b = diagrams[rng() % diagrams.size()];
            for (const StackingForm& f : forms)
                CHECK(star(DiagramSum::of(a), DiagramSum::of(b), f) == star_oracle(a, b, f));
        }
    }
}

TEST_CASE("two tripods in genus two")
{
    const StackingForm s = default_stacking(2);
    // x1 = g1, y1 = g2, x2 = g3, y2 = g4
    const DiagramSum a = DiagramSum::of(tripod(0, 2, 3)), b = DiagramSum::of(tripod(1, 2, 3));
    const DiagramSum p = star(a, b, s);
    // disjoint union, the x1-y1 edge, the x2-y2 edge, and the double gluing
    CHECK(p.size() == 4);
    int loops = 0, trees = 0, disconnected = 0;
    for (const auto& [d, c] : p.terms()) {
        loops += d.loop_rank() > 0;
        trees += d.is_tree();
        disconnected += d.components() == 2;
    }
    CHECK(loops == 1);
    CHECK(trees == 2);
    CHECK(disconnected == 1);
}

TEST_CASE("associativity on a random sample")
{
    const StackingForm s = default_stacking(1);
    const auto diagrams = sample(2);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const DiagramSum a = DiagramSum::of(diagrams[rng() % diagrams.size()]);
        const DiagramSum b = DiagramSum::of(diagrams[rng() % diagrams.size()]);
        const DiagramSum c = DiagramSum::of(diagrams[rng() % diagrams.size()]);
        CHECK(star(star(a, b, s), c, s) == star(a, star(b, c, s), s));
    }
}

TEST_CASE("tree part of the bracket")
{
    const StackingForm s = default_stacking(2);
    const SkewForm omega = symplectic_form(2);
    std::vector<Diagram> tripods;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                tripods.push_back(canon(tripod(a, b, c)));
    for (const Diagram& x : tripods)
        for (const Diagram& y : tripods) {
            const DiagramSum dx = DiagramSum::of(x), dy = DiagramSum::of(y);
            CHECK(project_trees(stack_bracket(dx, dy, s)) == Rational(-1) * contraction_bracket(dx, dy, omega));
        }
}

TEST_CASE("contraction bracket")
{
    const SkewForm omega = symplectic_form(2);
    CHECK(omega(0, 1) == 1);
    CHECK(omega(1, 0) == -1);
    const DiagramSum a = DiagramSum::of(tripod(0, 2, 3)), b = DiagramSum::of(tripod(1, 2, 3));
    const DiagramSum c = contraction_bracket(a, b, omega);
    // one contraction per pair of legs with nonzero pairing: x1-y1, x2-y2, y2-x2
    CHECK(c.size() == 3);
    CHECK(contraction_bracket(a, b, omega) == Rational(-1) * contraction_bracket(b, a, omega));
    CHECK_THROWS_AS(SkewForm(2, {{1, 0}, {0, 0}}), Error);
}
