#include "hcyl/stack_algebra.hpp"

#include "hcyl/error.hpp"

#include <utility>

namespace hcyl {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_colors(const DiagramSum& g, int rank)
{
    for (const auto& [d, c] : g.terms())
        for (int color : d.colors())
            if (color >= rank)
                throw Error(ErrorCode::rank_mismatch, "leg color g" + std::to_string(color + 1) +
                                                          " exceeds the form's rank " + std::to_string(rank));
}

// Product of two basis diagrams under one form. Leg pairs are matched in
// increasing order of the left leg, so each matching is visited once.
DiagramSum star_diagrams(const Diagram& a, const Diagram& b, const StackingForm& s)
{
    DiagramSum out;
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> used(idx(b.legs()), false);
    auto rec = [&](auto&& self, int la, const Integer& weight) -> void {
        if (la == a.legs()) {
            const Rational sign = pairs.size() % 2 ? -1 : 1;
            out.add(glue(a, b, pairs), sign * Rational(weight));
            return;
        }
        self(self, la + 1, weight);
        const int ca = a.colors()[idx(la)];
        for (int lb = 0; lb < b.legs(); ++lb) {
            if (used[idx(lb)])
                continue;
            const Integer& f = s(ca, b.colors()[idx(lb)]);
            if (f == 0)
                continue;
            used[idx(lb)] = true;
            pairs.emplace_back(la, lb);
            self(self, la + 1, Integer(weight * f));
            pairs.pop_back();
            used[idx(lb)] = false;
        }
    };
    rec(rec, 0, Integer(1));
    return out;
}

} // namespace

IntMatrix intersection_matrix(int genus)
{
    if (genus < 0)
        throw Error(ErrorCode::out_of_range, "genus must be non-negative");
    IntMatrix j(idx(2 * genus), std::vector<Integer>(idx(2 * genus), 0));
    for (int i = 0; i < genus; ++i) {
        j[idx(2 * i)][idx(2 * i + 1)] = 1;
        j[idx(2 * i + 1)][idx(2 * i)] = -1;
    }
    return j;
}

bool StackingForm::is_valid(int genus, const IntMatrix& s)
{
    if (genus < 1 || static_cast<int>(s.size()) != 2 * genus)
        return false;
    for (const auto& row : s)
        if (row.size() != s.size())
            return false;
    const IntMatrix j = intersection_matrix(genus);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b)
            if (s[a][b] - s[b][a] != j[a][b])
                return false;
    return true;
}

StackingForm::StackingForm(int genus, IntMatrix s)
    : genus_(genus), s_(std::move(s))
{
    if (!is_valid(genus, s_))
        throw Error(ErrorCode::precondition,
                    "stacking form must be a " + std::to_string(2 * genus) + "x" + std::to_string(2 * genus) +
                        " integer matrix with s - s^T equal to the intersection form");
}

StackingForm default_stacking(int genus)
{
    IntMatrix s(idx(2 * genus), std::vector<Integer>(idx(2 * genus), 0));
    for (int i = 0; i < genus; ++i)
        s[idx(2 * i)][idx(2 * i + 1)] = 1;
    return StackingForm(genus, std::move(s));
}

SkewForm::SkewForm(int rank, RatMatrix c)
    : c_(std::move(c))
{
    bool ok = static_cast<int>(c_.size()) == rank;
    for (std::size_t a = 0; ok && a < c_.size(); ++a) {
        ok = c_[a].size() == c_.size();
        for (std::size_t b = 0; ok && b <= a; ++b)
            ok = c_[a][b] == -c_[b][a];
    }
    if (!ok)
        throw Error(ErrorCode::precondition, "skew form must be an antisymmetric " + std::to_string(rank) + "x" +
                                                 std::to_string(rank) + " matrix");
}

SkewForm symplectic_form(int genus)
{
    IntMatrix j = intersection_matrix(genus);
    RatMatrix c(j.size());
    for (std::size_t a = 0; a < j.size(); ++a)
        for (const Integer& x : j[a])
            c[a].emplace_back(x);
    return SkewForm(2 * genus, std::move(c));
}

DiagramSum contraction_bracket(const DiagramSum& g, const DiagramSum& h, const SkewForm& c)
{
    check_colors(g, c.rank());
    check_colors(h, c.rank());
    DiagramSum out;
    for (const auto& [a, ca] : g.terms())
        for (const auto& [b, cb] : h.terms())
            for (int la = 0; la < a.legs(); ++la)
                for (int lb = 0; lb < b.legs(); ++lb) {
                    const Rational& f = c(a.colors()[idx(la)], b.colors()[idx(lb)]);
                    if (f != 0)
                        out.add(glue(a, b, {{la, lb}}), ca * cb * f);
                }
    return out;
}

DiagramSum star(const DiagramSum& g, const DiagramSum& h, const StackingForm& s)
{
    check_colors(g, s.rank());
    check_colors(h, s.rank());
    DiagramSum out;
    for (const auto& [a, ca] : g.terms())
        for (const auto& [b, cb] : h.terms())
            out += (ca * cb) * star_diagrams(a, b, s);
    return out;
}

DiagramSum stack_bracket(const DiagramSum& g, const DiagramSum& h, const StackingForm& s)
{
    return star(g, h, s) - star(h, g, s);
}

DiagramSum project_trees(const DiagramSum& g)
{
    DiagramSum out;
    for (const auto& [d, c] : g.terms())
        if (d.loop_rank() == 0)
            out.add(d, c);
    return out;
}

} // namespace hcyl
