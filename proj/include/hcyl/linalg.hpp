#pragma once

#include "hcyl/rational.hpp"

#include <map>
#include <vector>

namespace hcyl {

/// Sparse exact vector, column index -> nonzero value.
using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Incrementally maintained reduced row echelon form over Q.
///
/// Rows are kept fully reduced: every row has leading coefficient 1 at its
/// pivot and no other row has a nonzero entry in that column. The result is
/// independent of insertion order, so two echelon bases of the same span
/// compare equal row by row.
class EchelonBasis {
public:
    /// Reduces `v` against the current rows. The remainder is zero iff v lies
    /// in the span.
    SparseVector reduce(SparseVector v) const;

    /// Adds `v` to the span; returns false if it was already contained.
    bool insert(SparseVector v);

    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    bool is_pivot(int col) const { return rows_.count(col) != 0; }

    /// Rows sorted by pivot column.
    std::vector<SparseVector> rows() const;
    std::vector<int> pivots() const;

private:
    std::map<int, SparseVector> rows_; // pivot -> row
};

/// Rank of the matrix whose columns are given.
int column_rank(const std::vector<SparseVector>& columns);

/// Reduced echelon basis of { x : sum_j x_j columns[j] = 0 } in Q^{columns.size()}.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

} // namespace hcyl
