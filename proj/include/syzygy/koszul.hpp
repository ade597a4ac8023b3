#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "syzygy/curve.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/sections.hpp"

namespace syzygy {

// Koszul differential  /\^p V (x) W_q  ->  /\^{p-1} V (x) W_{q+1}  in the
// colex subset order, sign (-1)^{j+1} on deleting the j-th (1-based,
// ascending) index:
//   d(e_{i_1<...<i_p} (x) w) = sum_j (-1)^{j+1} e_{..^i_j..} (x) x_{i_j} w.
// Columns are subset_rank * dimW + w, rows subset_rank * dimT + t.
// The tensor must have dim1 == dimV (first factor multiplies by V).
SparseMat koszul_differential(const FpField& F, int dimV, int p, const MultTensor& T);

// The W_0-side companion  /\^{p+1} V -> /\^p V (x) V  (w = constants).
SparseMat koszul_w0_differential(const FpField& F, int dimV, int p);

struct BettiStrand {
    int genus = 0;
    uint32_t prime = 0;
    std::vector<long> b; // b[p] = b_{p,1} for p = 0..g-2 (b[0] unused, = 0)
};

// b_{p,1} for one p: dim - rank(into W2) - rank(from W0).
long strand_entry(const FpField& F, int dimV, int p, const MultTensor& VxV_to_W2);

// Full linear strand of the canonical model (q = 1 row).
BettiStrand strand_dims(const FpField& F, const CurveModel& C, int threads = 1);
BettiStrand strand_dims(const FpField& F, const CurveModel& C, const MultTensor& T,
                        int threads);

struct BettiTable {
    int genus = 0;
    // entries[q][i], q = 0..3, i = 0..g-2
    std::vector<std::vector<long>> entries;
};

// Rows 0 and 3 from the resolution shape, row 1 computed, row 2 deduced from
// the Hilbert-series relation; throws if a deduced entry is negative.
BettiTable betti_table(const FpField& F, const CurveModel& C, const BettiStrand& strand);

// sum_i (-1)^i binom(g, i) h0(w^(j-i)); h0 means the canonical-ring Hilbert
// function 1, g, 3g-3, 5g-5, ...
long hilbert_rhs(int g, int j);

// Alternating sum along the degree-j antidiagonal of a table.
long table_diagonal_sum(const BettiTable& T, int j);

struct ExtremalReport {
    int genus = 0, k = 0, m = 0;
    long b_extremal = 0;      // b_{g-k,1}
    long predicted = 0;       // m (g-k)
    bool equal = false;
    long b_past_end = 0;      // b_{g-k+1,1}
    bool strand_length_ok = false;
    std::string note;         // assumption notes
};

ExtremalReport extremal_check(const FpField& F, const CurveModel& C, int k, int m,
                              int threads = 1);
ExtremalReport extremal_check(const FpField& F, const CurveModel& C, const MultTensor& T,
                              int k, int m, int threads);

std::string render_table(const BettiTable& T);

long h0_canonical_power(int g, int m);

} // namespace syzygy
