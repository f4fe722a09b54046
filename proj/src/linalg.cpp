#include "coha/linalg.hpp"

#include <algorithm>

namespace coha {

std::vector<Rational> RrefBuilder::residue(std::vector<Rational> row) const {
    if (static_cast<int>(row.size()) != ncols_)
        throw CohaError("row length mismatch in row reduction");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = row[pivots_[k]];
        if (c == 0)
            continue;
        Rational factor = c; // basis rows have pivot entry 1
        for (int j = pivots_[k]; j < ncols_; ++j)
            if (rows_[k][j] != 0)
                row[j] -= factor * rows_[k][j];
    }
    return row;
}

bool RrefBuilder::insert(std::vector<Rational> row) {
    row = residue(std::move(row));
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0)
        return false;
    Rational lead = row[pivot];
    for (int j = pivot; j < ncols_; ++j)
        if (row[j] != 0)
            row[j] /= lead;
    // back-substitute into existing rows to keep the basis fully reduced
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = rows_[k][pivot];
        if (c == 0)
            continue;
        Rational factor = c;
        for (int j = pivot; j < ncols_; ++j)
            if (row[j] != 0)
                rows_[k][j] -= factor * row[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool RrefBuilder::contains(const std::vector<Rational>& v) const {
    auto r = residue(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& c) { return c == 0; });
}

RowReduceResult row_reduce(const std::vector<std::vector<Rational>>& rows) {
    int ncols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    RrefBuilder builder(ncols);
    for (const auto& row : rows)
        builder.insert(row);
    return builder.result();
}

} // namespace coha
