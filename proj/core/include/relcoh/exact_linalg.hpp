#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace relcoh {

/// Row-major sparse integer matrix. Entries within a row may come in any
/// order; repeated columns are summed.
struct SparseIntMatrix {
    using Entry = std::pair<std::int32_t, std::int64_t>;

    std::int32_t cols = 0;
    std::vector<std::vector<Entry>> rows;

    explicit SparseIntMatrix(std::int32_t column_count = 0) : cols(column_count) {}

    std::int32_t row_count() const noexcept { return static_cast<std::int32_t>(rows.size()); }
    void add_row(std::vector<Entry> entries) { rows.push_back(std::move(entries)); }
};

/// Rank over the rationals, computed in exact integer arithmetic.
std::int64_t exact_rank(const SparseIntMatrix& m);

struct SmithForm {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion; // invariant factors greater than 1, ascending
};

/// Rank and nontrivial invariant factors of the Smith normal form over the integers.
SmithForm smith_form(const SparseIntMatrix& m);

} // namespace relcoh
