#include "hcyl/psi.hpp"

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Value of the subtree hanging off half-edge `h` (seen from its mate).
LieElement subtree_value(const Diagram& d, int h, int rank)
{
    const int k = d.degree();
    if (h >= 3 * k)
        return LieElement::generator(rank, d.colors()[idx(h - 3 * k)]);
    const int v = h / 3, s = h % 3;
    const int left = d.mate()[idx(3 * v + (s + 1) % 3)];
    const int right = d.mate()[idx(3 * v + (s + 2) % 3)];
    return lie_bracket(subtree_value(d, left, rank), subtree_value(d, right, rank));
}

void require_tree(const Diagram& d)
{
    if (!d.is_tree())
        throw Error(ErrorCode::precondition, "psi is defined on connected trees only, got " + describe(d));
}

} // namespace

LieElement rooted_to_lie(const Diagram& tree, int root_leg, int rank)
{
    require_tree(tree);
    if (root_leg < 0 || root_leg >= tree.legs())
        throw Error(ErrorCode::out_of_range, "root " + std::to_string(root_leg) + " is not a leg (tree has " +
                                                 std::to_string(tree.legs()) + ")");
    for (int c : tree.colors())
        if (c >= rank)
            throw Error(ErrorCode::rank_mismatch, "leg color exceeds rank " + std::to_string(rank));
    return subtree_value(tree, tree.mate()[idx(3 * tree.degree() + root_leg)], rank);
}

HTensorLie psi(const Diagram& tree, int rank)
{
    require_tree(tree);
    HTensorLie out(rank, tree.degree() + 1);
    for (int l = 0; l < tree.legs(); ++l)
        out.add_tensor(tree.colors()[idx(l)], rooted_to_lie(tree, l, rank));
    return out;
}

HTensorLie psi(const DiagramSum& s, int rank, int degree)
{
    HTensorLie out(rank, degree + 1);
    for (const auto& [d, c] : s.terms()) {
        if (d.degree() != degree)
            throw Error(ErrorCode::weight_mismatch, "expected degree " + std::to_string(degree) + ", got " + describe(d));
        out += c * psi(d, rank);
    }
    return out;
}

DiagramSum rooted_embed(const HTensorLie& theta)
{
    if (theta.lie_degree() < 2)
        throw Error(ErrorCode::out_of_range, "rooted_embed needs Lie degree >= 2 (degree-0 trees are excluded)");
    DiagramSum out;
    for (const auto& [key, c] : theta.terms()) {
        const auto& [h, word] = key;
        RawDiagram r;
        r.verts = static_cast<int>(word.size()) - 1;
        r.cyclic.resize(idx(r.verts));
        for (int v = 0; v < r.verts; ++v)
            r.cyclic[idx(v)] = {3 * v, 3 * v + 1, 3 * v + 2};
        r.mate.assign(idx(3 * r.verts + static_cast<int>(word.size()) + 1), -1);
        int next_vertex = 0;
        // Builds the subtree of a Lyndon word and returns the half-edge that
        // points toward the root.
        auto build = [&](auto&& self, const Word& w) -> int {
            if (w.size() == 1) {
                r.colors.push_back(w[0]);
                return -static_cast<int>(r.colors.size()); // leg, resolved below
            }
            auto [u, v] = standard_factorization(w);
            const int vert = next_vertex++;
            int left = self(self, u);
            int right = self(self, v);
            auto attach = [&](int slot, int end) {
                const int here = 3 * vert + slot;
                const int there = end < 0 ? 3 * r.verts + (-end - 1) : end;
                r.mate[idx(here)] = there;
                r.mate[idx(there)] = here;
            };
            attach(1, left);
            attach(2, right);
            return 3 * vert;
        };
        r.colors.push_back(h);
        const int top = build(build, word);
        const int root = 3 * r.verts;
        const int there = top < 0 ? 3 * r.verts + (-top - 1) : top;
        r.mate[idx(root)] = there;
        r.mate[idx(there)] = root;
        out.add(r, c);
    }
    return out;
}

int psi_rank(int degree, int rank)
{
    const TreeSpace& ts = tree_space(degree, rank);
    HTensorCoordinates coords(rank, degree + 1);
    std::vector<SparseVector> columns;
    columns.reserve(ts.basis.size());
    for (const Diagram& t : ts.basis)
        columns.push_back(coords.to_vector(psi(t, rank)));
    return column_rank(columns);
}

} // namespace hcyl
