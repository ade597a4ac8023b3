#include "syzygy/scrolls.hpp"

#include <algorithm>
#include <stdexcept>

#include "syzygy/binom.hpp"

namespace syzygy {

std::vector<uint32_t> sym2_product(const FpField& F, const std::vector<uint32_t>& s,
                                   const std::vector<uint32_t>& t) {
    size_t n = s.size();
    std::vector<uint32_t> out(sym2_dim(n), 0);
    for (size_t a = 0; a < n; ++a) {
        if (!s[a]) continue;
        for (size_t b = 0; b < n; ++b) {
            if (!t[b]) continue;
            size_t idx = sym2_index(a, b);
            out[idx] = F.add(out[idx], F.mul(s[a], t[b]));
        }
    }
    return out;
}

ScrollData scroll_from_columns(const FpField& F, size_t dimV,
                               std::vector<std::vector<uint32_t>> top,
                               std::vector<std::vector<uint32_t>> bot) {
    if (top.size() != bot.size()) throw std::invalid_argument("scroll_from_columns: row mismatch");
    ScrollData X;
    X.f = static_cast<int>(top.size());
    X.dimV = dimV;
    X.top = std::move(top);
    X.bot = std::move(bot);
    for (int i = 0; i < X.f; ++i)
        for (int j = i + 1; j < X.f; ++j) {
            auto m = sym2_product(F, X.top[i], X.bot[j]);
            auto m2 = sym2_product(F, X.top[j], X.bot[i]);
            for (size_t c = 0; c < m.size(); ++c) m[c] = F.sub(m[c], m2[c]);
            X.minors.push_back(std::move(m));
        }
    return X;
}

ScrollData scroll_matrix(const FpField& F, const CurveModel& C, const Pencil& pencil) {
    int g = C.arithmetic_genus(), k = pencil.degree;
    Twist w = C.canonical_twist();
    Twist wy = w - C.pencil_twist(pencil);
    SectionSpace V = section_space(F, C, w);
    SectionSpace Y = section_space(F, C, wy);
    if (Y.dim() != static_cast<size_t>(g + 1 - k))
        throw std::runtime_error("scroll_matrix: h^0(w - L) = " + std::to_string(Y.dim()) +
                                 ", expected g+1-k = " + std::to_string(g + 1 - k));
    auto [u, v] = C.pencil_sections(pencil);
    std::vector<std::vector<uint32_t>> top, bot;
    for (size_t j = 0; j < Y.dim(); ++j) {
        MultiForm yj = Y.section_rep(j);
        top.push_back(V.reduce_form(F, multiply(F, u, yj)));
        bot.push_back(V.reduce_form(F, multiply(F, v, yj)));
    }
    ScrollData X = scroll_from_columns(F, V.dim(), std::move(top), std::move(bot));

    // Every minor vanishes on the curve: image zero under Sym^2 V -> W_2.
    SectionSpace W2 = section_space(F, C, w * 2);
    MultTensor T = mult_tensor(F, V, V, W2);
    for (auto& m : X.minors) {
        std::vector<uint32_t> img(W2.dim(), 0);
        for (size_t a = 0; a < V.dim(); ++a)
            for (size_t b = a; b < V.dim(); ++b) {
                uint32_t c = m[sym2_index(a, b)];
                if (!c) continue;
                for (auto& [t, val] : T.at(a, b)) img[t] = F.add(img[t], F.mul(c, val));
            }
        for (uint32_t x : img)
            if (x) throw std::runtime_error("scroll_matrix: minor does not vanish on the curve");
    }
    return X;
}

ScrollData synthetic_scroll(const FpField& F, int f) {
    if (f < 1) throw std::invalid_argument("synthetic_scroll: f >= 1");
    int e1 = (f + 1) / 2, e2 = f - e1;
    size_t dimV = static_cast<size_t>(f) + 2;
    auto unit = [&](size_t i) {
        std::vector<uint32_t> v(dimV, 0);
        v[i] = 1;
        return v;
    };
    // Variables x_0..x_{e1}, y_0..y_{e2}; columns (x_i, x_{i+1}), (y_j, y_{j+1}).
    std::vector<std::vector<uint32_t>> top, bot;
    for (int i = 0; i < e1; ++i) { top.push_back(unit(i)); bot.push_back(unit(i + 1)); }
    for (int j = 0; j < e2; ++j) {
        top.push_back(unit(e1 + 1 + j));
        bot.push_back(unit(e1 + 1 + j + 1));
    }
    return scroll_from_columns(F, dimV, std::move(top), std::move(bot));
}

long en_strand_formula(int f, int p) {
    if (p < 1 || p > f - 1) return 0;
    return static_cast<long>(p) * static_cast<long>(binom(f, p + 1));
}

Rref minor_span(const FpField& F, const ScrollData& X) {
    SparseMat M(X.minors.size(), sym2_dim(X.dimV));
    for (size_t r = 0; r < X.minors.size(); ++r) {
        std::vector<SparseMat::Entry> row;
        for (size_t c = 0; c < X.minors[r].size(); ++c)
            if (X.minors[r][c]) row.emplace_back(static_cast<uint32_t>(c), X.minors[r][c]);
        M.set_row(r, std::move(row));
    }
    return rref(F, M);
}

namespace {

// Tensor V x V -> Sym^2 V / span(minors), coordinates on non-pivot Sym^2
// monomials of the minor RREF.
MultTensor quotient_tensor(const FpField& F, size_t dimV, const Rref& R) {
    size_t s2 = sym2_dim(dimV);
    std::vector<int> comp;       // non-pivot Sym^2 indices
    std::vector<int> comp_pos(s2, -1);
    for (size_t c = 0; c < s2; ++c)
        if (R.col_pivot.empty() || R.col_pivot[c] < 0) {
            comp_pos[c] = static_cast<int>(comp.size());
            comp.push_back(static_cast<int>(c));
        }
    MultTensor T;
    T.dim1 = T.dim2 = dimV;
    T.target_dim = comp.size();
    T.entry.assign(dimV, std::vector<std::vector<std::pair<uint32_t, uint32_t>>>(dimV));
    for (size_t a = 0; a < dimV; ++a)
        for (size_t b = 0; b < dimV; ++b) {
            size_t idx = sym2_index(a, b);
            std::vector<std::pair<uint32_t, uint32_t>> vec;
            int pr = R.col_pivot.empty() ? -1 : R.col_pivot[idx];
            if (pr < 0) {
                vec.emplace_back(static_cast<uint32_t>(comp_pos[idx]), 1u);
            } else {
                for (size_t j = 0; j < comp.size(); ++j) {
                    uint32_t v = R.rows[pr][comp[j]];
                    if (v) vec.emplace_back(static_cast<uint32_t>(j), F.neg(v));
                }
            }
            T.entry[a][b] = std::move(vec);
        }
    return T;
}

} // namespace

SparseMat scroll_koszul_differential(const FpField& F, const ScrollData& X, int p,
                                     const Rref& minor_rref) {
    MultTensor T = quotient_tensor(F, X.dimV, minor_rref);
    return koszul_differential(F, static_cast<int>(X.dimV), p, T);
}

std::vector<long> scroll_strand(const FpField& F, const ScrollData& X) {
    Rref R = minor_span(F, X);
    MultTensor T = quotient_tensor(F, X.dimV, R);
    int n = static_cast<int>(X.dimV);
    std::vector<long> b(std::max(1, X.f), 0);
    for (int p = 1; p <= X.f - 1; ++p) {
        long v = strand_entry(F, n, p, T);
        long want = en_strand_formula(X.f, p);
        if (v != want)
            throw std::runtime_error("scroll_strand: b_{" + std::to_string(p) + ",1} = " +
                                     std::to_string(v) + " but Eagon-Northcott gives " +
                                     std::to_string(want) + " (convention bug)");
        b[p] = v;
    }
    return b;
}

std::vector<std::vector<uint32_t>> scroll_extremal_classes(const FpField& F,
                                                           const ScrollData& X, int p) {
    Rref R = minor_span(F, X);
    SparseMat dX = scroll_koszul_differential(F, X, p, R);
    auto ker = kernel_basis(F, dX);

    // Complement of im(d_{p+1}) inside the kernel: echelonize the boundary
    // images, then keep the kernel vectors that still add pivots.
    int n = static_cast<int>(X.dimV);
    SparseMat dW0 = koszul_w0_differential(F, n, p);
    SparseMat bimages = dW0.transpose(); // rows = boundary images
    size_t amb = static_cast<size_t>(binom(n, p)) * X.dimV;
    Rref acc = rref(F, bimages);
    std::vector<std::vector<uint32_t>> rows = acc.rows;
    std::vector<int> colpiv(amb, -1);
    for (size_t i = 0; i < acc.pivot_col.size(); ++i) colpiv[acc.pivot_col[i]] = static_cast<int>(i);
    std::vector<std::vector<uint32_t>> chosen;
    for (auto& kv : ker) {
        std::vector<uint32_t> v = kv;
        for (size_t c = 0; c < amb; ++c) {
            if (!v[c]) continue;
            int pr = colpiv[c];
            if (pr < 0) {
                uint32_t inv = F.inv(v[c]);
                std::vector<uint32_t> nr(amb, 0);
                for (size_t j = c; j < amb; ++j) nr[j] = F.mul(v[j], inv);
                colpiv[c] = static_cast<int>(rows.size());
                rows.push_back(std::move(nr));
                chosen.push_back(kv);
                break;
            }
            uint32_t f = F.neg(v[c]);
            const auto& P = rows[pr];
            for (size_t j = c; j < amb; ++j) v[j] = F.add(v[j], F.mul(f, P[j]));
        }
    }
    return chosen;
}

JReport restriction_span_dim(const FpField& F, const CurveModel& C,
                             const std::vector<Pencil>& pencils) {
    if (pencils.empty()) throw std::invalid_argument("restriction_span_dim: no pencils");
    int g = C.arithmetic_genus();
    int k = pencils.front().degree;
    for (auto& p : pencils)
        if (p.degree != k)
            throw std::invalid_argument("restriction_span_dim: pencils of unequal degree");
    int p = g - k;
    JReport R;
    R.genus = g;
    R.k = k;
    R.p = p;
    R.expected_injective = static_cast<long>(pencils.size()) * (g - k);

    Twist w = C.canonical_twist();
    MultTensor T = mult_tensor(F, C, w, w);
    R.b_curve = strand_entry(F, g, p, T);

    SparseMat dW0 = koszul_w0_differential(F, g, p);
    size_t rank_b = rank(F, dW0);
    size_t amb = static_cast<size_t>(binom(g, p)) * g;

    std::vector<std::vector<std::vector<uint32_t>>> kers;
    for (auto& pen : pencils) {
        ScrollData X = scroll_matrix(F, C, pen);
        Rref mr = minor_span(F, X);
        SparseMat dX = scroll_koszul_differential(F, X, p, mr);
        kers.push_back(kernel_basis(F, dX));
        R.scroll_dims.push_back(static_cast<long>(kers.back().size()) -
                                static_cast<long>(rank_b));
    }
    size_t total = 0;
    for (auto& kk : kers) total += kk.size();
    SparseMat stack(total, amb);
    size_t r = 0;
    for (auto& kk : kers)
        for (auto& v : kk) {
            std::vector<SparseMat::Entry> row;
            for (size_t c = 0; c < amb; ++c)
                if (v[c]) row.emplace_back(static_cast<uint32_t>(c), v[c]);
            stack.set_row(r++, std::move(row));
        }
    size_t sum_dim = rank(F, stack); // boundary space is inside each kernel
    R.span_dim = static_cast<long>(sum_dim) - static_cast<long>(rank_b);
    R.injective = (R.span_dim == R.expected_injective);
    R.isomorphism = R.injective && (R.span_dim == R.b_curve);
    return R;
}

} // namespace syzygy
