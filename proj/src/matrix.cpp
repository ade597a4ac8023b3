#include "syzygy/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace syzygy {

SparseMat SparseMat::transpose() const {
    SparseMat T(cols_, rows_);
    std::vector<size_t> count(cols_, 0);
    for (auto& r : data_)
        for (auto& e : r) ++count[e.first];
    for (size_t c = 0; c < cols_; ++c) T.data_[c].reserve(count[c]);
    for (size_t r = 0; r < rows_; ++r)
        for (auto& e : data_[r]) T.data_[e.first].emplace_back(static_cast<uint32_t>(r), e.second);
    return T;
}

std::vector<uint32_t> SparseMat::apply(const FpField& F, const std::vector<uint32_t>& x) const {
    std::vector<uint32_t> y(rows_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (auto& e : data_[r]) {
            acc += static_cast<uint64_t>(e.second) * x[e.first];
            if (acc >= (1ull << 62)) acc %= F.p();
        }
        y[r] = F.reduce_u64(acc);
    }
    return y;
}

namespace {

// Pivot row storage: normalized (leading 1), from the pivot column onward.
// Sparse list while short, dense uint16 tail once fill-in exceeds the
// threshold -- the dense-block fallback for badly filled regions.
struct PivotRow {
    uint32_t lead = 0;
    bool dense = false;
    std::vector<std::pair<uint32_t, uint16_t>> sp; // (col, val), col > lead
    std::vector<uint16_t> dn;                      // values at lead+1 .. cols-1
};

constexpr double kDenseFrac = 0.25;

class Eliminator {
public:
    Eliminator(const FpField& F, size_t cols) : F_(F), cols_(cols), col_pivot_(cols, -1), buf_(cols, 0) {}

    // Feed one row; returns true if it produced a new pivot.
    bool feed(const std::vector<SparseMat::Entry>& row) {
        if (row.empty()) return false;
        std::fill(buf_.begin(), buf_.end(), 0);
        uint32_t lo = row.front().first;
        for (auto& e : row) buf_[e.first] = e.second;
        return sweep(lo);
    }

    size_t rank() const { return pivots_.size(); }

    // Kernel vector with 1 at the free column and 0 at the other free
    // columns, solved by back-substitution through the forward echelon.
    std::vector<std::vector<uint32_t>> kernel() const {
        const uint32_t p = F_.p();
        std::vector<uint32_t> piv_cols;
        for (size_t c = 0; c < cols_; ++c)
            if (col_pivot_[c] >= 0) piv_cols.push_back(static_cast<uint32_t>(c));
        std::vector<std::vector<uint32_t>> out;
        for (size_t f = 0; f < cols_; ++f) {
            if (col_pivot_[f] >= 0) continue;
            std::vector<uint32_t> v(cols_, 0);
            v[f] = 1;
            for (size_t i = piv_cols.size(); i-- > 0;) {
                uint32_t c = piv_cols[i];
                if (c > f) continue; // pivot row entries live at columns >= c only
                const PivotRow& P = pivots_[col_pivot_[c]];
                uint64_t acc = 0;
                if (P.dense) {
                    for (size_t j = 0; j < P.dn.size(); ++j) {
                        if (!P.dn[j]) continue;
                        acc += static_cast<uint64_t>(P.dn[j]) * v[c + 1 + j];
                        if (acc >= (1ull << 62)) acc %= p;
                    }
                } else {
                    for (auto& e : P.sp) {
                        acc += static_cast<uint64_t>(e.second) * v[e.first];
                        if (acc >= (1ull << 62)) acc %= p;
                    }
                }
                v[c] = F_.neg(static_cast<uint32_t>(acc % p));
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    bool sweep(uint32_t from) {
        const uint32_t p = F_.p();
        for (uint32_t c = from; c < cols_; ++c) {
            uint32_t v = static_cast<uint32_t>(buf_[c] % p);
            if (!v) continue;
            int pr = col_pivot_[c];
            if (pr < 0) {
                store_pivot(c, v);
                return true;
            }
            // buf -= v * pivot  (as buf += (p-v) * pivot; accumulator safe:
            // each axpy adds < 2^30 and there are < 2^15 of them)
            uint32_t f = p - v;
            const PivotRow& P = pivots_[pr];
            buf_[c] += static_cast<uint64_t>(f) * 1u;
            if (P.dense) {
                const uint16_t* d = P.dn.data();
                uint64_t* b = buf_.data() + c + 1;
                size_t n = cols_ - c - 1;
                for (size_t j = 0; j < n; ++j) b[j] += static_cast<uint64_t>(f) * d[j];
            } else {
                for (auto& e : P.sp) buf_[e.first] += static_cast<uint64_t>(f) * e.second;
            }
        }
        return false;
    }

    void store_pivot(uint32_t c, uint32_t v) {
        const uint32_t p = F_.p();
        uint32_t inv = F_.inv(v);
        PivotRow P;
        P.lead = c;
        size_t tail = cols_ - c - 1;
        size_t nz = 0;
        for (size_t j = c + 1; j < cols_; ++j)
            if (buf_[j] % p) ++nz;
        if (tail > 64 && nz > kDenseFrac * tail) {
            P.dense = true;
            P.dn.resize(tail);
            for (size_t j = 0; j < tail; ++j)
                P.dn[j] = static_cast<uint16_t>(F_.mul(static_cast<uint32_t>(buf_[c + 1 + j] % p), inv));
        } else {
            P.sp.reserve(nz);
            for (size_t j = c + 1; j < cols_; ++j) {
                uint32_t w = static_cast<uint32_t>(buf_[j] % p);
                if (w) P.sp.emplace_back(static_cast<uint32_t>(j),
                                         static_cast<uint16_t>(F_.mul(w, inv)));
            }
        }
        col_pivot_[c] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(P));
    }

    const FpField& F_;
    size_t cols_;
    std::vector<int> col_pivot_;
    std::vector<uint64_t> buf_;
    std::vector<PivotRow> pivots_;
};

} // namespace

size_t rank(const FpField& F, const SparseMat& M) {
    // Orient so pivot storage lives on the short side.
    if (M.cols() > M.rows()) return rank(F, M.transpose());
    Eliminator E(F, M.cols());
    for (size_t r = 0; r < M.rows(); ++r) E.feed(M.row(r));
    return E.rank();
}

Rref rref(const FpField& F, const SparseMat& M) {
    const uint32_t p = F.p();
    size_t nr = M.rows(), nc = M.cols();
    Rref R;
    R.cols = nc;
    R.col_pivot.assign(nc, -1);
    // Forward left-looking pass with fully reduced pivot rows, then a
    // backward pass clearing above-pivot entries.
    std::vector<std::vector<uint32_t>> piv; // dense rows
    std::vector<uint64_t> buf(nc);
    for (size_t r = 0; r < nr; ++r) {
        const auto& row = M.row(r);
        if (row.empty()) continue;
        std::fill(buf.begin(), buf.end(), 0);
        for (auto& e : row) buf[e.first] = e.second;
        for (size_t c = 0; c < nc; ++c) {
            uint32_t v = static_cast<uint32_t>(buf[c] % p);
            if (!v) continue;
            int pr = R.col_pivot[c];
            if (pr < 0) {
                uint32_t inv = F.inv(v);
                std::vector<uint32_t> nrow(nc, 0);
                for (size_t j = c; j < nc; ++j)
                    nrow[j] = F.mul(static_cast<uint32_t>(buf[j] % p), inv);
                R.col_pivot[c] = static_cast<int>(piv.size());
                R.pivot_col.push_back(static_cast<int>(c));
                piv.push_back(std::move(nrow));
                break;
            }
            uint32_t f = p - v;
            const auto& P = piv[pr];
            for (size_t j = c; j < nc; ++j) buf[j] += static_cast<uint64_t>(f) * P[j];
        }
    }
    R.rank = piv.size();
    // Jordan sweep in descending pivot-column order: by the time column c is
    // processed its pivot row is already clean at every larger pivot column,
    // so clearing c cannot disturb finished columns.
    std::vector<size_t> order(R.rank);
    for (size_t i = 0; i < R.rank; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return R.pivot_col[a] > R.pivot_col[b]; });
    for (size_t oi : order) {
        size_t c = R.pivot_col[oi];
        for (size_t k = 0; k < R.rank; ++k) {
            if (k == oi) continue;
            uint32_t v = piv[k][c];
            if (!v) continue;
            uint32_t f = F.neg(v);
            for (size_t j = c; j < nc; ++j)
                piv[k][j] = F.add(piv[k][j], F.mul(f, piv[oi][j]));
        }
    }
    // Present rows sorted by pivot column.
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return R.pivot_col[a] < R.pivot_col[b]; });
    std::vector<std::vector<uint32_t>> rows_sorted;
    std::vector<int> pc_sorted;
    rows_sorted.reserve(R.rank);
    for (size_t oi : order) {
        pc_sorted.push_back(R.pivot_col[oi]);
        rows_sorted.push_back(std::move(piv[oi]));
    }
    R.pivot_col = std::move(pc_sorted);
    R.rows = std::move(rows_sorted);
    for (size_t i = 0; i < R.rank; ++i) R.col_pivot[R.pivot_col[i]] = static_cast<int>(i);
    return R;
}

std::vector<std::vector<uint32_t>> kernel_basis_echelon(const FpField& F, const SparseMat& M) {
    Eliminator E(F, M.cols());
    for (size_t r = 0; r < M.rows(); ++r) E.feed(M.row(r));
    return E.kernel();
}

std::vector<std::vector<uint32_t>> kernel_basis(const FpField& F, const SparseMat& M) {
    // Large matrices: forward echelon + back-substitution (same basis as the
    // RREF route, far less memory).
    if (M.rows() * M.cols() > 30000000ull) return kernel_basis_echelon(F, M);
    Rref R = rref(F, M);
    size_t nc = M.cols();
    std::vector<std::vector<uint32_t>> ker;
    ker.reserve(nc - R.rank);
    for (size_t c = 0; c < nc; ++c) {
        if (R.col_pivot[c] >= 0) continue;
        std::vector<uint32_t> v(nc, 0);
        v[c] = 1;
        for (size_t i = 0; i < R.rank; ++i) {
            uint32_t w = R.rows[i][c];
            if (w) v[R.pivot_col[i]] = F.neg(w);
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

std::vector<uint32_t> subspace_coords(const FpField& F, const Rref& basis,
                                      const std::vector<uint32_t>& v) {
    if (v.size() != basis.cols) throw std::invalid_argument("subspace_coords: length mismatch");
    std::vector<uint32_t> coords(basis.rank);
    std::vector<uint32_t> resid = v;
    for (size_t i = 0; i < basis.rank; ++i) {
        uint32_t c = coords[i] = resid[basis.pivot_col[i]];
        if (!c) continue;
        uint32_t f = F.neg(c);
        for (size_t j = 0; j < basis.cols; ++j)
            resid[j] = F.add(resid[j], F.mul(f, basis.rows[i][j]));
    }
    for (uint32_t x : resid)
        if (x) throw std::domain_error("subspace_coords: vector not in subspace");
    return coords;
}

} // namespace syzygy
