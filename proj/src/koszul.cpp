#include "syzygy/koszul.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "syzygy/binom.hpp"

namespace syzygy {

SparseMat koszul_differential(const FpField& F, int dimV, int p, const MultTensor& T) {
    if (p < 0 || p > dimV) throw std::invalid_argument("koszul_differential: p out of range");
    if (T.dim1 != static_cast<size_t>(dimV))
        throw std::invalid_argument("koszul_differential: tensor first factor is not V");
    size_t dimW = T.dim2, dimT = T.target_dim;
    size_t nsub = static_cast<size_t>(binom(dimV, p));
    size_t nsub1 = p >= 1 ? static_cast<size_t>(binom(dimV, p - 1)) : 0;
    size_t ncols = nsub * dimW, nrows = nsub1 * dimT;
    if (p == 0) return SparseMat(nrows, ncols); // zero-column convention

    // Build by rows: bucket triplets per target subset block.
    std::vector<std::vector<SparseMat::Entry>> rows(nrows);
    auto S = subset_first_colex(p);
    size_t srank = 0;
    std::vector<int> Tsub(p - 1);
    do {
        for (int j = 0; j < p; ++j) {
            // delete j-th index (0-based position), sign (-1)^j
            int out = 0;
            for (int i = 0; i < p; ++i)
                if (i != j) Tsub[out++] = S[i];
            uint64_t trank = subset_rank_colex(Tsub);
            bool negative = (j % 2) == 1;
            int xi = S[j];
            for (size_t w = 0; w < dimW; ++w) {
                uint64_t col = srank * dimW + w;
                for (auto& [t, v] : T.at(xi, w)) {
                    uint32_t val = negative ? F.neg(v) : v;
                    rows[trank * dimT + t].emplace_back(static_cast<uint32_t>(col), val);
                }
            }
        }
        ++srank;
    } while (subset_next_colex(dimV, S));

    SparseMat M(nrows, ncols);
    for (size_t r = 0; r < nrows; ++r) {
        auto& row = rows[r];
        std::sort(row.begin(), row.end(),
                  [](const SparseMat::Entry& a, const SparseMat::Entry& b) { return a.first < b.first; });
        // merge duplicate columns (possible when reduction vectors collide)
        std::vector<SparseMat::Entry> merged;
        for (auto& e : row) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second = F.add(merged.back().second, e.second);
            else
                merged.push_back(e);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const SparseMat::Entry& e) { return e.second == 0; }),
                     merged.end());
        M.set_row(r, std::move(merged));
    }
    return M;
}

SparseMat koszul_w0_differential(const FpField& F, int dimV, int p) {
    // /\^{p+1} V -> /\^p V (x) V with the same sign convention.
    MultTensor T;
    T.dim1 = dimV;
    T.dim2 = 1;
    T.target_dim = dimV;
    T.entry.assign(dimV, std::vector<std::vector<std::pair<uint32_t, uint32_t>>>(1));
    for (int i = 0; i < dimV; ++i) T.entry[i][0] = {{static_cast<uint32_t>(i), 1u}};
    return koszul_differential(F, dimV, p + 1, T);
}

long strand_entry(const FpField& F, int dimV, int p, const MultTensor& VxV_to_W2) {
    if (p < 1 || p > dimV - 1) return 0;
    size_t mid = static_cast<size_t>(binom(dimV, p)) * VxV_to_W2.dim2;
    SparseMat d1 = koszul_differential(F, dimV, p, VxV_to_W2);
    size_t r1 = rank(F, d1);
    SparseMat d0 = koszul_w0_differential(F, dimV, p);
    size_t r0 = rank(F, d0);
    return static_cast<long>(mid) - static_cast<long>(r1) - static_cast<long>(r0);
}

BettiStrand strand_dims(const FpField& F, const CurveModel& C, int threads) {
    Twist w = C.canonical_twist();
    return strand_dims(F, C, mult_tensor(F, C, w, w), threads);
}

BettiStrand strand_dims(const FpField& F, const CurveModel& C, const MultTensor& T,
                        int threads) {
    int g = C.arithmetic_genus();
    if (T.dim1 != static_cast<size_t>(g))
        throw std::runtime_error("strand_dims: dim H^0(w) != arithmetic genus");

    BettiStrand S;
    S.genus = g;
    S.prime = F.p();
    S.b.assign(std::max(0, g - 1), 0);
    std::vector<int> ps;
    for (int p = 1; p <= g - 2; ++p) ps.push_back(p);
    if (threads <= 1) {
        for (int p : ps) S.b[p] = strand_entry(F, g, p, T);
    } else {
        std::vector<std::future<long>> futs(ps.size());
        size_t next = 0;
        while (next < ps.size()) {
            size_t batch = std::min<size_t>(threads, ps.size() - next);
            for (size_t i = 0; i < batch; ++i)
                futs[next + i] = std::async(std::launch::async, [&, i, next] {
                    return strand_entry(F, g, ps[next + i], T);
                });
            for (size_t i = 0; i < batch; ++i) S.b[ps[next + i]] = futs[next + i].get();
            next += batch;
        }
    }
    return S;
}

long h0_canonical_power(int g, int m) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    if (m == 1) return g;
    return static_cast<long>(2 * m - 1) * (g - 1);
}

long hilbert_rhs(int g, int j) {
    long acc = 0;
    for (int i = 0; i <= g && i <= j; ++i) {
        long term = static_cast<long>(binom(g, i)) * h0_canonical_power(g, j - i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

BettiTable betti_table(const FpField& F, const CurveModel& C, const BettiStrand& strand) {
    int g = strand.genus;
    if (g < 3) throw std::invalid_argument("betti_table: genus < 3");
    BettiTable T;
    T.genus = g;
    T.entries.assign(4, std::vector<long>(g - 1, 0));
    T.entries[0][0] = 1;
    T.entries[3][g - 2] = 1;
    for (int p = 1; p <= g - 2; ++p) T.entries[1][p] = strand.b[p];
    // Hilbert relation: sum_l (-1)^l b_{l, j-l} = hilbert_rhs(g, j).  On the
    // diagonal j = i+2 only rows 1 and 2 contribute for 0 <= i <= g-2.
    for (int i = 0; i <= g - 2; ++i) {
        long b_next = (i + 1 <= g - 2) ? strand.b[i + 1] : 0;
        long h = hilbert_rhs(g, i + 2);
        long v = b_next + ((i % 2 == 0) ? h : -h);
        if (v < 0)
            throw std::runtime_error("betti_table: negative deduced entry b_{" +
                                     std::to_string(i) + ",2} = " + std::to_string(v) +
                                     " (rank bug)");
        T.entries[2][i] = v;
    }
    return T;
}

long table_diagonal_sum(const BettiTable& T, int j) {
    long acc = 0;
    for (int q = 0; q <= 3; ++q) {
        int i = j - q;
        if (i < 0 || i > T.genus - 2) continue;
        long v = T.entries[q][i];
        acc += (i % 2 == 0) ? v : -v;
    }
    return acc;
}

ExtremalReport extremal_check(const FpField& F, const CurveModel& C, int k, int m, int threads) {
    Twist w = C.canonical_twist();
    return extremal_check(F, C, mult_tensor(F, C, w, w), k, m, threads);
}

ExtremalReport extremal_check(const FpField& F, const CurveModel& C, const MultTensor& T,
                              int k, int m, int threads) {
    int g = C.arithmetic_genus();
    ExtremalReport R;
    R.genus = g;
    R.k = k;
    R.m = m;
    R.predicted = static_cast<long>(m) * (g - k);
    int pe = g - k;
    if (threads >= 2) {
        auto fut = std::async(std::launch::async,
                              [&] { return strand_entry(F, g, pe + 1, T); });
        R.b_extremal = strand_entry(F, g, pe, T);
        R.b_past_end = fut.get();
    } else {
        R.b_extremal = strand_entry(F, g, pe, T);
        R.b_past_end = strand_entry(F, g, pe + 1, T);
    }
    R.equal = (R.b_extremal == R.predicted);
    R.strand_length_ok = (R.b_past_end == 0);
    R.note = "linear growth condition assumed from the construction, not verified";
    return R;
}

std::string render_table(const BettiTable& T) {
    int g = T.genus;
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= g - 2; ++i) os << std::setw(6) << i;
    os << "\n";
    for (int q = 0; q <= 3; ++q) {
        os << "q=" << q << " | ";
        for (int i = 0; i <= g - 2; ++i) {
            long v = T.entries[q][i];
            if (v == 0) os << std::setw(6) << ".";
            else os << std::setw(6) << v;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace syzygy
