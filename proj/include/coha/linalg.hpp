#pragma once

#include "coha/rational.hpp"

#include <vector>

namespace coha {

/// Fully reduced row-echelon form over Q with deterministic pivoting
/// (leftmost nonzero column, rows in input order).
struct RowReduceResult {
    std::vector<std::vector<Rational>> rows; // RREF basis of the row space
    std::vector<int> pivots;                 // pivot column per row, increasing
    int ncols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
    bool operator==(const RowReduceResult& other) const {
        return ncols == other.ncols && pivots == other.pivots && rows == other.rows;
    }
};

/// Incremental RREF builder: rows can be inserted one at a time and the
/// basis stays reduced, so dependent rows are detected as they arrive.
class RrefBuilder {
public:
    explicit RrefBuilder(int ncols) : ncols_(ncols) {}

    /// Reduces `row` against the current basis in place; returns the residue.
    std::vector<Rational> residue(std::vector<Rational> row) const;

    /// Inserts a row; returns true if it increased the rank.
    bool insert(std::vector<Rational> row);

    /// Reduces a vector modulo the row space (same as residue).
    std::vector<Rational> reduce(std::vector<Rational> v) const { return residue(std::move(v)); }

    bool contains(const std::vector<Rational>& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    RowReduceResult result() const { return RowReduceResult{rows_, pivots_, ncols_}; }

private:
    int ncols_;
    std::vector<std::vector<Rational>> rows_; // kept in RREF, sorted by pivot
    std::vector<int> pivots_;
};

RowReduceResult row_reduce(const std::vector<std::vector<Rational>>& rows);

} // namespace coha
