#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "syzygy/fp.hpp"

namespace syzygy {

// Sparse matrix over F_p.  Rows hold (col, value) pairs sorted by column,
// no stored zeros.  Immutable once built; rank/kernel are pure functions.
class SparseMat {
public:
    using Entry = std::pair<uint32_t, uint32_t>; // (col, value)

    SparseMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    // Entries must arrive with strictly increasing columns per row.
    void push(size_t r, uint32_t c, uint32_t v) {
        if (v) data_[r].emplace_back(c, v);
    }
    void set_row(size_t r, std::vector<Entry> row) { data_[r] = std::move(row); }
    const std::vector<Entry>& row(size_t r) const { return data_[r]; }

    size_t nnz() const {
        size_t t = 0;
        for (auto& r : data_) t += r.size();
        return t;
    }

    SparseMat transpose() const;

    // y = M * x  (x has cols() entries)
    std::vector<uint32_t> apply(const FpField& F, const std::vector<uint32_t>& x) const;

private:
    size_t rows_, cols_;
    std::vector<std::vector<Entry>> data_;
};

// Rank over F_p.  Left-looking elimination: each row is expanded into a
// 64-bit accumulator, reduced against the pivot rows found so far, and either
// dies or becomes a new pivot.  Pivot rows start sparse and switch to a dense
// tail once fill-in passes a threshold.  Deterministic, single-threaded.
size_t rank(const FpField& F, const SparseMat& M);

// Right kernel basis, reduced-echelon pivoting: RREF the rows, then one
// kernel vector per free column (unit there, minus the RREF column above the
// pivots).  Returns cols - rank vectors of length cols.
std::vector<std::vector<uint32_t>> kernel_basis(const FpField& F, const SparseMat& M);

// Same basis through forward echelon + back-substitution; used automatically
// for large inputs where the RREF buffer would not fit.
std::vector<std::vector<uint32_t>> kernel_basis_echelon(const FpField& F, const SparseMat& M);

// Dense row-echelon workhorse shared by kernel/RREF paths.
struct Rref {
    size_t rank = 0;
    std::vector<int> pivot_col;              // per echelon row
    std::vector<int> col_pivot;              // per column: echelon row or -1
    std::vector<std::vector<uint32_t>> rows; // RREF rows, dense
    size_t cols = 0;
};
Rref rref(const FpField& F, const SparseMat& M);

// Coordinates of v in the row space of an RREF basis; throws if v is outside.
std::vector<uint32_t> subspace_coords(const FpField& F, const Rref& basis,
                                      const std::vector<uint32_t>& v);

} // namespace syzygy
