#include "hcyl/linalg.hpp"

namespace hcyl {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (a == 0)
        return;
    for (const auto& [col, val] : x) {
        auto [it, inserted] = y.try_emplace(col, a * val);
        if (!inserted) {
            it->second += a * val;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

SparseVector EchelonBasis::reduce(SparseVector v) const
{
    // Rows are fully reduced, so subtracting one never reintroduces another
    // pivot column; a single ascending sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Rational factor = it->second;
        int col = it->first;
        axpy(v, -factor, row->second);
        it = v.upper_bound(col);
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    int pivot = v.begin()->first;
    Rational lead = v.begin()->second;
    if (lead != 1)
        for (auto& [col, val] : v)
            val /= lead;
    for (auto& [p, row] : rows_) {
        auto hit = row.find(pivot);
        if (hit != row.end()) {
            Rational factor = hit->second;
            axpy(row, -factor, v);
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVector> EchelonBasis::rows() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_)
        out.push_back(row);
    return out;
}

std::vector<int> EchelonBasis::pivots() const
{
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_)
        out.push_back(p);
    return out;
}

namespace {

std::vector<SparseVector> transpose(const std::vector<SparseVector>& columns)
{
    std::map<int, SparseVector> rows;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        for (const auto& [i, val] : columns[j])
            rows[i].emplace(j, val);
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (auto& [i, row] : rows)
        out.push_back(std::move(row));
    return out;
}

} // namespace

int column_rank(const std::vector<SparseVector>& columns)
{
    EchelonBasis e;
    for (const auto& c : columns)
        e.insert(c);
    return e.rank();
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns)
{
    EchelonBasis rref;
    for (auto& row : transpose(columns))
        rref.insert(std::move(row));
    const int n = static_cast<int>(columns.size());
    std::vector<SparseVector> pivot_rows = rref.rows();
    std::vector<int> pivots = rref.pivots();
    EchelonBasis kernel;
    for (int f = 0; f < n; ++f) {
        if (rref.is_pivot(f))
            continue;
        SparseVector k;
        k.emplace(f, 1);
        for (std::size_t r = 0; r < pivot_rows.size(); ++r) {
            auto hit = pivot_rows[r].find(f);
            if (hit != pivot_rows[r].end())
                k.emplace(pivots[r], -hit->second);
        }
        kernel.insert(std::move(k));
    }
    return kernel.rows();
}

} // namespace hcyl
