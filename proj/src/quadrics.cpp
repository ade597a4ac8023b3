#include "syzygy/quadrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "syzygy/binom.hpp"
#include "syzygy/rng.hpp"

namespace syzygy {

namespace {

// Rational points of C by scanning fibers of the first ruling (second
// coordinate scanned over F_p per fiber); affine chart only.
std::vector<Point> rational_points(const FpField& F, const CurveModel& C, size_t want,
                                   uint64_t seed) {
    if (C.amb != Ambient::P1xP1)
        throw std::invalid_argument("rational_points: P1xP1 models only");
    Rng rng(seed, "projection-center");
    std::vector<Point> out;
    std::set<std::pair<uint32_t, uint32_t>> seen;
    MultiForm fx = partial(F, C.F, 1), fy = partial(F, C.F, 3);
    size_t fiber_tries = 0;
    while (out.size() < want && fiber_tries < 4 * F.p()) {
        ++fiber_tries;
        uint32_t x = rng.below(F.p());
        for (uint32_t y = 0; y < F.p() && out.size() < want; ++y) {
            Point P{1, x, 1, y};
            if (evaluate(F, C.F, P) != 0) continue;
            if (!seen.insert({x, y}).second) continue;
            // require a smooth curve point
            if (evaluate(F, fx, P) == 0 && evaluate(F, fy, P) == 0) continue;
            out.push_back(P);
            break; // at most one point per fiber keeps conditions spread out
        }
    }
    if (out.size() < want)
        throw std::runtime_error(
            "projection_center: only " + std::to_string(out.size()) + " of " +
            std::to_string(want) + " rational points found; use a larger prime");
    return out;
}

std::vector<uint32_t> eval_sections_at(const FpField& F, const SectionSpace& S,
                                       const Point& P) {
    std::vector<uint32_t> v(S.dim());
    for (size_t i = 0; i < S.dim(); ++i) v[i] = evaluate(F, S.section_rep(i), P);
    return v;
}

} // namespace

ProjectionCenter projection_center(const FpField& F, const CurveModel& C, size_t count,
                                   uint64_t seed) {
    SectionSpace V = section_space(F, C, C.canonical_twist());
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Point> pts =
            count ? rational_points(F, C, count, seed + 1000003ull * attempt)
                  : std::vector<Point>{};
        SparseMat ev(count, V.dim());
        for (size_t r = 0; r < pts.size(); ++r) {
            auto row = eval_sections_at(F, V, pts[r]);
            for (size_t c = 0; c < row.size(); ++c) ev.push(r, static_cast<uint32_t>(c), row[c]);
        }
        if (count && rank(F, ev) != count) continue; // dependent conditions: resample
        auto ker = kernel_basis(F, ev);
        SparseMat kmat(ker.size(), V.dim());
        for (size_t r = 0; r < ker.size(); ++r)
            for (size_t c = 0; c < V.dim(); ++c)
                if (ker[r][c]) kmat.push(r, static_cast<uint32_t>(c), ker[r][c]);
        ProjectionCenter PC;
        PC.points = pts;
        PC.W = rref(F, kmat);
        PC.dimW = PC.W.rank;
        return PC;
    }
    throw std::runtime_error("projection_center: points kept imposing dependent conditions");
}

std::vector<uint32_t> QuadricForm::flat() const {
    std::vector<uint32_t> v;
    for (auto& row : M)
        for (uint32_t x : row) v.push_back(x);
    return v;
}

long quadric_rank(const FpField& F, const QuadricForm& Q) {
    SparseMat M(Q.dim(), Q.dim());
    for (size_t r = 0; r < Q.dim(); ++r)
        for (size_t c = 0; c < Q.dim(); ++c)
            if (Q.M[r][c]) M.push(r, static_cast<uint32_t>(c), Q.M[r][c]);
    return static_cast<long>(rank(F, M));
}

QuadricForm pencil_quadric(const FpField& F, const CurveModel& C, const Pencil& pencil,
                           const ProjectionCenter& center) {
    int g = C.arithmetic_genus(), k = pencil.degree;
    Twist w = C.canonical_twist();
    SectionSpace V = section_space(F, C, w);
    SectionSpace Y = section_space(F, C, w - C.pencil_twist(pencil));
    SectionSpace W2 = section_space(F, C, w * 2);
    if (center.points.size() != static_cast<size_t>(g - 1 - k))
        throw std::invalid_argument("pencil_quadric: center has wrong point count");

    // {s,t}: basis of sections of w - L vanishing on the center.
    SparseMat ev(center.points.size(), Y.dim());
    for (size_t r = 0; r < center.points.size(); ++r) {
        auto row = eval_sections_at(F, Y, center.points[r]);
        for (size_t c = 0; c < row.size(); ++c) ev.push(r, static_cast<uint32_t>(c), row[c]);
    }
    auto st = kernel_basis(F, ev);
    if (st.size() != 2)
        throw std::runtime_error("pencil_quadric: h^0(w - L - D) = " + std::to_string(st.size()) +
                                 ", expected 2 (degenerate pencil/center configuration, resample)");
    auto rep_of = [&](const std::vector<uint32_t>& coords) {
        MultiForm f;
        f.amb = C.amb;
        f.deg = Y.twist();
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i]) f = add(F, f, scale(F, Y.section_rep(i), coords[i]));
        return f;
    };
    MultiForm s = rep_of(st[0]), t = rep_of(st[1]);
    auto [u, v] = C.pencil_sections(pencil);

    std::vector<uint32_t> us = V.reduce_form(F, multiply(F, u, s));
    std::vector<uint32_t> ut = V.reduce_form(F, multiply(F, u, t));
    std::vector<uint32_t> vs = V.reduce_form(F, multiply(F, v, s));
    std::vector<uint32_t> vt = V.reduce_form(F, multiply(F, v, t));

    // Membership: us*vt - ut*vs maps to zero in W_2.
    {
        MultTensor T = mult_tensor(F, V, V, W2);
        auto q = sym2_product(F, us, vt);
        auto q2 = sym2_product(F, ut, vs);
        for (size_t c = 0; c < q.size(); ++c) q[c] = F.sub(q[c], q2[c]);
        std::vector<uint32_t> img(W2.dim(), 0);
        for (size_t a = 0; a < V.dim(); ++a)
            for (size_t b = a; b < V.dim(); ++b) {
                uint32_t cc = q[sym2_index(a, b)];
                if (!cc) continue;
                for (auto& [tt, val] : T.at(a, b)) img[tt] = F.add(img[tt], F.mul(cc, val));
            }
        for (uint32_t x : img)
            if (x) throw std::runtime_error("pencil_quadric: quadric does not vanish on the curve");
    }

    // All four entries vanish on the center, so they lie in W.
    auto wc = [&](const std::vector<uint32_t>& x) { return subspace_coords(F, center.W, x); };
    std::vector<uint32_t> a1 = wc(us), a2 = wc(vt), b1 = wc(ut), b2 = wc(vs);
    size_t n = center.dimW;
    QuadricForm Q;
    Q.M.assign(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint32_t val = F.add(F.mul(a1[i], a2[j]), F.mul(a1[j], a2[i]));
            val = F.sub(val, F.add(F.mul(b1[i], b2[j]), F.mul(b1[j], b2[i])));
            Q.M[i][j] = val;
        }
    long rk = quadric_rank(F, Q);
    if (rk != 4)
        throw std::runtime_error("pencil_quadric: rank " + std::to_string(rk) +
                                 " != 4 (degenerate pencil/center configuration, resample)");
    return Q;
}

bool general_position_check(const FpField& F, const std::vector<QuadricForm>& quadrics) {
    if (quadrics.empty()) return true;
    size_t n = quadrics.front().dim();
    SparseMat M(quadrics.size(), n * n);
    for (size_t r = 0; r < quadrics.size(); ++r) {
        auto f = quadrics[r].flat();
        for (size_t c = 0; c < f.size(); ++c)
            if (f[c]) M.push(r, static_cast<uint32_t>(c), f[c]);
    }
    return rank(F, M) == quadrics.size();
}

ProjectedClass ehbauer_project(const FpField& F, const CurveModel& C,
                               const SectionSpace& W2, const ProjectedClass& cls,
                               const Point& x) {
    if (evaluate(F, C.F, x) != 0)
        throw std::invalid_argument("ehbauer_project: point is not on the curve");
    size_t n = cls.reps.size();
    int p = cls.p;
    std::vector<uint32_t> phi(n);
    for (size_t i = 0; i < n; ++i) phi[i] = evaluate(F, cls.reps[i], x);
    size_t jstar = n;
    for (size_t i = 0; i < n; ++i)
        if (phi[i]) { jstar = i; break; }
    if (jstar == n) throw std::runtime_error("ehbauer_project: x is a base point of the system");
    uint32_t inv = F.inv(phi[jstar]);

    // Adapted sections: w_i = v_i - (phi_i/phi_j*) v_j*, all vanishing at x.
    ProjectedClass out;
    out.p = p - 1;
    std::vector<size_t> old_of_new;
    std::vector<int> new_of_old(n, -1);
    for (size_t i = 0; i < n; ++i) {
        if (i == jstar) continue;
        uint32_t c = F.mul(phi[i], inv);
        MultiForm wi = c ? add(F, cls.reps[i], scale(F, cls.reps[jstar], F.neg(c)))
                         : cls.reps[i];
        new_of_old[i] = static_cast<int>(old_of_new.size());
        old_of_new.push_back(i);
        out.reps.push_back(std::move(wi));
    }
    size_t nw = out.reps.size();
    size_t nsub_out = static_cast<size_t>(binom(static_cast<int>(nw), p - 1));
    out.coeff.assign(nsub_out * nw, 0);

    // e-coefficients of the old basis vectors: v_i = w_i + c_i e, v_j* = e.
    std::vector<uint32_t> ecoef(n);
    for (size_t i = 0; i < n; ++i) ecoef[i] = i == jstar ? 1 : F.mul(phi[i], inv);

    // Track the (T ^ e) (x) e component; it must vanish for honest cocycles.
    std::vector<uint32_t> e_tensor_e(nsub_out, 0);

    auto S = subset_first_colex(p);
    size_t srank = 0;
    std::vector<int> Tsub(p - 1);
    do {
        // Decompose e_S into (T ^ e) pieces with coefficients.
        // j* in S at position q: T = S\j*, sign (-1)^(p-1-q).
        // j* not in S: for each position q, T = S\S[q], coefficient
        // c_{S[q]} * (-1)^(p-1-q).
        struct Piece { uint64_t trank; uint32_t coef; };
        std::vector<Piece> pieces;
        int pos_jstar = -1;
        for (int q = 0; q < p; ++q)
            if (S[q] == static_cast<int>(jstar)) { pos_jstar = q; break; }
        auto new_rank = [&](const std::vector<int>& T) {
            std::vector<int> mapped(T.size());
            for (size_t i = 0; i < T.size(); ++i) mapped[i] = new_of_old[T[i]];
            return subset_rank_colex(mapped);
        };
        if (pos_jstar >= 0) {
            int outp = 0;
            for (int i = 0; i < p; ++i)
                if (i != pos_jstar) Tsub[outp++] = S[i];
            uint32_t sign = ((p - 1 - pos_jstar) % 2) ? F.neg(1) : 1;
            pieces.push_back({new_rank(Tsub), sign});
        } else {
            for (int q = 0; q < p; ++q) {
                uint32_t c = ecoef[S[q]];
                if (!c) continue;
                int outp = 0;
                for (int i = 0; i < p; ++i)
                    if (i != q) Tsub[outp++] = S[i];
                uint32_t coefv = ((p - 1 - q) % 2) ? F.neg(c) : c;
                pieces.push_back({new_rank(Tsub), coefv});
            }
        }
        if (!pieces.empty()) {
            for (size_t t = 0; t < n; ++t) {
                uint32_t gamma = cls.coeff[srank * n + t];
                if (!gamma) continue;
                int tn = new_of_old[t]; // -1 when t = j*
                uint32_t te = ecoef[t];
                for (auto& pc : pieces) {
                    if (tn >= 0) {
                        size_t idx = pc.trank * nw + tn;
                        out.coeff[idx] = F.add(out.coeff[idx], F.mul(gamma, pc.coef));
                    }
                    if (te) {
                        uint32_t add_e = F.mul(gamma, F.mul(pc.coef, te));
                        e_tensor_e[pc.trank] = F.add(e_tensor_e[pc.trank], add_e);
                    }
                }
            }
        }
        ++srank;
    } while (subset_next_colex(static_cast<int>(n), S));

    // A cocycle contracts cleanly: the (T ^ e) (x) e part cancels.  (It is
    // the contraction of the second-factor evaluation, killed by d(cls)=0.)
    for (uint32_t v : e_tensor_e)
        if (v) throw std::runtime_error("ehbauer_project: class is not a cocycle (e(x)e residue)");

    // Verify the output is a cocycle for the projected model.
    if (p - 1 >= 1) {
        std::vector<std::vector<std::vector<uint32_t>>> mult(
            nw, std::vector<std::vector<uint32_t>>(nw));
        auto red = [&](size_t i, size_t j) -> const std::vector<uint32_t>& {
            if (mult[i][j].empty())
                mult[i][j] = W2.reduce_form(F, multiply(F, out.reps[i], out.reps[j]));
            return mult[i][j];
        };
        size_t dsub = static_cast<size_t>(binom(static_cast<int>(nw), p - 2));
        std::vector<std::vector<uint32_t>> resid(dsub,
                                                 std::vector<uint32_t>(W2.dim(), 0));
        auto T2 = subset_first_colex(p - 1);
        size_t trank = 0;
        std::vector<int> U(p - 2);
        do {
            for (size_t t = 0; t < nw; ++t) {
                uint32_t gamma = out.coeff[trank * nw + t];
                if (!gamma) continue;
                for (int j = 0; j < p - 1; ++j) {
                    int outp = 0;
                    for (int i = 0; i < p - 1; ++i)
                        if (i != j) U[outp++] = T2[i];
                    uint64_t urank = subset_rank_colex(U);
                    uint32_t sgn = (j % 2) ? F.neg(gamma) : gamma;
                    const auto& mv = red(T2[j], t);
                    auto& row = resid[urank];
                    for (size_t c = 0; c < mv.size(); ++c)
                        if (mv[c]) row[c] = F.add(row[c], F.mul(sgn, mv[c]));
                }
            }
            ++trank;
        } while (subset_next_colex(static_cast<int>(nw), T2));
        for (auto& row : resid)
            for (uint32_t v : row)
                if (v)
                    throw std::runtime_error(
                        "ehbauer_project: image is not a cocycle for the projected model");
    }
    return out;
}

ScalarReport iterated_projection_to_quadric(const FpField& F, const CurveModel& C,
                                            const std::vector<Pencil>& pencils,
                                            const ProjectionCenter& center) {
    int g = C.arithmetic_genus();
    int k = pencils.front().degree;
    int p = g - k;
    Twist w = C.canonical_twist();
    SectionSpace V = section_space(F, C, w);
    SectionSpace W2 = section_space(F, C, w * 2);

    ScalarReport R;
    R.p_start = p;
    for (auto& pen : pencils) {
        QuadricForm Q = pencil_quadric(F, C, pen, center);
        std::vector<uint32_t> qflat = Q.flat();

        ScrollData X = scroll_matrix(F, C, pen);
        auto classes = scroll_extremal_classes(F, X, p);
        std::vector<long> scal;
        bool nonzero_seen = false;
        for (auto& cvec : classes) {
            ProjectedClass cls;
            cls.p = p;
            for (size_t i = 0; i < V.dim(); ++i) cls.reps.push_back(V.section_rep(i));
            cls.coeff = cvec;
            for (const Point& z : center.points) cls = ehbauer_project(F, C, W2, cls, z);

            // Now p = 1: class is an n x n matrix over the final reps;
            // symmetrize and move to the center's W coordinates.
            size_t nw = cls.reps.size();
            std::vector<std::vector<uint32_t>> B; // rows: final reps in W coords
            for (auto& rep : cls.reps)
                B.push_back(subspace_coords(F, center.W, V.reduce_form(F, rep)));
            size_t n = center.dimW;
            std::vector<std::vector<uint32_t>> A(nw, std::vector<uint32_t>(nw, 0));
            for (size_t i = 0; i < nw; ++i)
                for (size_t j = 0; j < nw; ++j) {
                    uint32_t vv = F.add(cls.coeff[i * nw + j], cls.coeff[j * nw + i]);
                    A[i][j] = vv;
                }
            // Qc = B^T A B
            std::vector<uint32_t> qc(n * n, 0);
            for (size_t i = 0; i < nw; ++i)
                for (size_t j = 0; j < nw; ++j) {
                    if (!A[i][j]) continue;
                    for (size_t a = 0; a < n; ++a) {
                        uint32_t f1 = F.mul(A[i][j], B[i][a]);
                        if (!f1) continue;
                        for (size_t b = 0; b < n; ++b)
                            qc[a * n + b] = F.add(qc[a * n + b], F.mul(f1, B[j][b]));
                    }
                }
            bool zero = std::all_of(qc.begin(), qc.end(), [](uint32_t x) { return x == 0; });
            if (zero) {
                scal.push_back(0);
                R.any_class_dropped_to_zero = true;
                continue;
            }
            nonzero_seen = true;
            // Membership in span(Q): find c with qc = c * qflat.
            size_t lead = 0;
            while (lead < qflat.size() && !qflat[lead]) ++lead;
            long c = -1;
            if (lead < qflat.size() && qc[lead]) {
                uint32_t cand = F.div(qc[lead], qflat[lead]);
                bool match = true;
                for (size_t idx = 0; idx < qflat.size(); ++idx)
                    if (qc[idx] != F.mul(cand, qflat[idx])) { match = false; break; }
                if (match) c = static_cast<long>(cand);
            }
            if (c < 0) R.all_in_span = false;
            scal.push_back(c);
        }
        R.scalars.push_back(std::move(scal));
        R.scroll_has_nonzero.push_back(nonzero_seen);
    }
    return R;
}

} // namespace syzygy
