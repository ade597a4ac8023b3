#include "syzygy/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/rng.hpp"

namespace syzygy {

namespace {

// ---- univariate polynomials over F_p, coefficients ascending -------------

using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; } // -1 for zero

uint32_t eval_poly(const FpField& F, const Poly& f, uint32_t t) {
    uint64_t acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = (acc * t + f[i]) % F.p();
    return static_cast<uint32_t>(acc);
}

Poly derivative(const FpField& F, const Poly& f) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], F.reduce(static_cast<int64_t>(i))));
    trim(d);
    return d;
}

Poly poly_gcd(const FpField& F, Poly a, Poly b) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead_inv = F.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = F.mul(a.back(), lead_inv);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
        trim(b);
    }
    if (!a.empty()) { // monic for determinism
        uint32_t inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

// Exact division; throws if the remainder is nonzero.
Poly poly_div_exact(const FpField& F, Poly num, const Poly& den) {
    if (den.empty()) throw std::domain_error("poly_div_exact: zero divisor");
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    uint32_t lead_inv = F.inv(den.back());
    while (num.size() >= den.size() && !num.empty()) {
        uint32_t c = F.mul(num.back(), lead_inv);
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] = F.sub(num[shift + i], F.mul(c, den[i]));
        trim(num);
        if (!num.empty() && num.size() < den.size())
            throw std::domain_error("poly_div_exact: inexact");
    }
    if (!num.empty()) throw std::domain_error("poly_div_exact: inexact");
    trim(q);
    return q;
}

// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const FpField& F, const std::vector<uint32_t>& xs,
                 const std::vector<uint32_t>& ys) {
    size_t n = xs.size();
    Poly acc(n, 0);
    Poly master{1}; // prod (t - x_i)
    for (size_t i = 0; i < n; ++i) {
        Poly next(master.size() + 1, 0);
        for (size_t j = 0; j < master.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], master[j]);
            next[j] = F.sub(next[j], F.mul(master[j], xs[i]));
        }
        master = std::move(next);
    }
    for (size_t i = 0; i < n; ++i) {
        // basis_i = master / (t - x_i), scaled to hit ys[i] at xs[i]
        Poly den{F.neg(xs[i]), 1};
        Poly basis = poly_div_exact(F, master, den);
        uint32_t scale = F.div(ys[i], eval_poly(F, basis, xs[i]));
        for (size_t j = 0; j < basis.size(); ++j)
            acc[j] = F.add(acc[j], F.mul(scale, basis[j]));
    }
    trim(acc);
    return acc;
}

uint32_t dense_det(const FpField& F, std::vector<std::vector<uint32_t>> M) {
    size_t n = M.size();
    uint32_t det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) { std::swap(M[piv], M[c]); det = F.neg(det); }
        det = F.mul(det, M[c][c]);
        uint32_t inv = F.inv(M[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (!M[r][c]) continue;
            uint32_t f = F.mul(M[r][c], inv);
            for (size_t j = c; j < n; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(f, M[c][j]));
        }
    }
    return det;
}

// Coefficients of F as a polynomial in the fiber variable of the given axis:
// out[i] = coefficient of (fiber)^i, a univariate Poly in the base variable
// (affine charts x0 = 1 resp. y0 = 1 on both factors).
std::vector<Poly> fiber_coefficients(const CurveModel& C, RulingAxis axis) {
    int fib_deg = axis == RulingAxis::First ? C.deg.n : C.deg.m;
    int base_deg = axis == RulingAxis::First ? C.deg.m : C.deg.n;
    std::vector<Poly> out(fib_deg + 1, Poly(base_deg + 1, 0));
    for (auto& [e, v] : C.F.coeff) {
        int fib_e = axis == RulingAxis::First ? e[3] : e[1];  // y1 resp. x1 exponent
        int base_e = axis == RulingAxis::First ? e[1] : e[3];
        out[fib_e][base_e] = v;
    }
    return out;
}

} // namespace

Pencil CurveModel::ruling_pencil(RulingAxis axis) const {
    if (amb != Ambient::P1xP1)
        throw std::invalid_argument("ruling_pencil: plane ambient has no ruling projections");
    return {axis, axis == RulingAxis::First ? deg.n : deg.m};
}

std::pair<MultiForm, MultiForm> CurveModel::pencil_sections(const Pencil& p) const {
    Twist t = pencil_twist(p);
    if (p.axis == RulingAxis::First)
        return {monomial_form(amb, t, {1, 0, 0, 0}), monomial_form(amb, t, {0, 1, 0, 0})};
    return {monomial_form(amb, t, {0, 0, 1, 0}), monomial_form(amb, t, {0, 0, 0, 1})};
}

uint64_t CurveModel::content_hash() const {
    uint64_t h = 1469598103934665603ull; // FNV-1a over the canonical serialization
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) { h ^= (x >> (8 * i)) & 0xff; h *= 1099511628211ull; }
    };
    mix(static_cast<uint64_t>(amb == Ambient::P1xP1 ? 0 : 1));
    mix(static_cast<uint64_t>(deg.m)); mix(static_cast<uint64_t>(deg.n));
    mix(prime);
    for (auto& [e, v] : F.coeff) {
        for (int i = 0; i < 4; ++i) mix(static_cast<uint64_t>(e[i]));
        mix(v);
    }
    for (auto& n : nodes)
        for (int i = 0; i < 4; ++i) mix(n[i]);
    return h;
}

CurveModel random_curve(Ambient amb, Twist deg, uint32_t prime, uint64_t seed) {
    if (amb == Ambient::P1xP1) {
        if (deg.m < 3 || deg.n < 3)
            throw std::invalid_argument("random_curve: bidegree components must be >= 3");
    } else if (deg.m < 4) {
        throw std::invalid_argument("random_curve: plane degree must be >= 4");
    }
    FpField F(prime);
    Rng rng(seed, "curve-coeffs");
    CurveModel C;
    C.amb = amb;
    C.deg = deg;
    C.prime = prime;
    C.seed = seed;
    C.F.amb = amb;
    C.F.deg = deg;
    for (auto& e : monomial_basis(amb, deg)) {
        uint32_t v = F.reduce_u64(rng.next() >> 2); // prime-independent integral draw
        C.F.set(e, v);
    }
    if (C.F.is_zero()) C.F.set(monomial_basis(amb, deg).front(), 1);
    return C;
}

std::vector<Point> random_node_points(Ambient amb, size_t count, uint32_t prime, uint64_t seed) {
    FpField F(prime);
    Rng rng(seed, "node-points");
    std::set<std::pair<uint32_t, uint32_t>> seen;
    std::vector<Point> pts;
    while (pts.size() < count) {
        uint32_t x = 1 + rng.below(prime - 1), y = 1 + rng.below(prime - 1);
        if (!seen.insert({x, y}).second) continue;
        if (amb == Ambient::P1xP1) pts.push_back({1, x, 1, y});
        else pts.push_back({1, x, y, 0});
    }
    return pts;
}

CurveModel impose_nodes(Ambient amb, Twist deg, const std::vector<Point>& node_points,
                        uint32_t prime, uint64_t seed) {
    if (node_points.empty()) {
        return random_curve(amb, deg, prime, seed);
    }
    FpField F(prime);
    auto basis = monomial_basis(amb, deg);
    // Conditions: F(P) = 0 and both affine partials vanish at P.  In the
    // affine chart the Euler relations make the remaining partials vanish too.
    int v1 = 1, v2 = amb == Ambient::P1xP1 ? 3 : 2;
    SparseMat cond(3 * node_points.size(), basis.size());
    for (size_t j = 0; j < node_points.size(); ++j) {
        const Point& P = node_points[j];
        for (size_t c = 0; c < basis.size(); ++c) {
            MultiForm mono = monomial_form(amb, deg, basis[c]);
            cond.push(3 * j + 0, c, evaluate(F, mono, P));
        }
        for (size_t c = 0; c < basis.size(); ++c)
            cond.push(3 * j + 1, c, evaluate(F, partial(F, monomial_form(amb, deg, basis[c]), v1), P));
        for (size_t c = 0; c < basis.size(); ++c)
            cond.push(3 * j + 2, c, evaluate(F, partial(F, monomial_form(amb, deg, basis[c]), v2), P));
    }
    auto ker = kernel_basis(F, cond);
    if (ker.empty())
        throw std::runtime_error("impose_nodes: node conditions leave no curve (too many nodes)");

    Rng rng(seed, "node-combination");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<uint32_t> v(basis.size(), 0);
        for (auto& kv : ker) {
            uint32_t c = F.reduce_u64(rng.next());
            for (size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], F.mul(c, kv[i]));
        }
        CurveModel C;
        C.amb = amb;
        C.deg = deg;
        C.prime = prime;
        C.seed = seed;
        C.nodes = node_points;
        C.F = from_coeff_vector(amb, deg, basis, v);
        if (C.F.is_zero()) continue;
        bool ok = true;
        for (const Point& P : node_points) {
            if (evaluate(F, C.F, P) != 0) throw std::logic_error("impose_nodes: containment failed");
            MultiForm f1 = partial(F, C.F, v1), f2 = partial(F, C.F, v2);
            if (evaluate(F, f1, P) != 0 || evaluate(F, f2, P) != 0)
                throw std::logic_error("impose_nodes: partials nonzero at node");
            // Ordinary node: nondegenerate quadratic part.
            uint32_t h11 = evaluate(F, partial(F, f1, v1), P);
            uint32_t h12 = evaluate(F, partial(F, f1, v2), P);
            uint32_t h22 = evaluate(F, partial(F, f2, v2), P);
            uint32_t det = F.sub(F.mul(h11, h22), F.mul(h12, h12));
            if (det == 0) { ok = false; break; }
        }
        if (ok) return C;
    }
    throw std::runtime_error("impose_nodes: no ordinary-node member found within retry budget");
}

BranchReport certify_smooth_ordinary(const CurveModel& C, RulingAxis axis) {
    if (C.amb != Ambient::P1xP1)
        throw std::invalid_argument("certify_smooth_ordinary: ruling projections need P1xP1");
    FpField F(C.prime);
    auto cs = fiber_coefficients(C, axis);
    int k = static_cast<int>(cs.size()) - 1;          // fiber degree = pencil degree
    int base_deg = axis == RulingAxis::First ? C.deg.m : C.deg.n;
    int res_deg = base_deg * (2 * k - 1);             // Res(f, f') as a form on the base

    // Derivative coefficients: d_i = (i+1) c_{i+1}.
    std::vector<Poly> ds(k);
    for (int i = 0; i < k; ++i) {
        ds[i] = cs[i + 1];
        for (auto& x : ds[i]) x = F.mul(x, F.reduce(i + 1));
    }

    // Sample the Sylvester determinant at res_deg + 1 base points and
    // interpolate; the formal (k, k-1) resultant specializes at every point.
    if (static_cast<uint32_t>(res_deg + 1) >= F.p())
        throw std::runtime_error("certify_smooth_ordinary: prime too small for interpolation");
    std::vector<uint32_t> xs, ys;
    size_t n = 2 * k - 1;
    for (int t = 0; t <= res_deg; ++t) {
        std::vector<std::vector<uint32_t>> S(n, std::vector<uint32_t>(n, 0));
        std::vector<uint32_t> cv(k + 1), dv(k);
        for (int i = 0; i <= k; ++i) cv[i] = eval_poly(F, cs[i], t);
        for (int i = 0; i < k; ++i) dv[i] = eval_poly(F, ds[i], t);
        for (int r = 0; r < k - 1; ++r)
            for (int i = 0; i <= k; ++i) S[r][r + i] = cv[k - i];
        for (int r = 0; r < k; ++r)
            for (int i = 0; i < k; ++i) S[k - 1 + r][r + i] = dv[k - 1 - i];
        xs.push_back(t);
        ys.push_back(dense_det(F, S));
    }
    Poly res = interpolate(F, xs, ys);
    if (res.empty())
        throw std::runtime_error("certify_smooth_ordinary: non-reduced fiber (discriminant vanishes identically)");

    // disc = Res(f, f') / lc(f), exact as binary forms of degrees
    // base*(2k-1) and base.
    Poly lead = cs[k];
    trim(lead);
    if (lead.empty())
        throw std::runtime_error("certify_smooth_ordinary: leading fiber coefficient vanishes identically");
    Poly disc = poly_div_exact(F, res, lead);
    int disc_form_deg = res_deg - base_deg; // = base*(2k-2) = 2 p_a - 2 + 2k
    int inf_mult = disc_form_deg - degree(disc);

    Poly g = poly_gcd(F, disc, derivative(F, disc));
    bool sf = degree(g) <= 0 && inf_mult <= 1;
    int branch = degree(disc) - degree(g) + (inf_mult >= 1 ? 1 : 0);

    BranchReport R;
    R.discriminant_degree = disc_form_deg;
    R.squarefree = sf;
    R.branch_count = branch;
    R.pencil_degree = k;
    R.expected_branching = 2 * C.arithmetic_genus() - 2 + 2 * k;
    return R;
}

std::string curve_to_json(const CurveModel& C) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["ambient"] = C.amb == Ambient::P1xP1 ? "P1xP1" : "P2";
    j["degree"] = C.amb == Ambient::P1xP1 ? std::vector<int>{C.deg.m, C.deg.n}
                                          : std::vector<int>{C.deg.m};
    j["prime"] = C.prime;
    j["seed"] = C.seed;
    auto coeffs = nlohmann::ordered_json::array();
    for (auto& [e, v] : C.F.coeff)
        coeffs.push_back({e[0], e[1], e[2], e[3], v});
    j["coefficients"] = coeffs;
    auto nodes = nlohmann::ordered_json::array();
    for (auto& n : C.nodes) nodes.push_back({n[0], n[1], n[2], n[3]});
    j["nodes"] = nodes;
    return j.dump();
}

CurveModel curve_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CurveModel C;
    std::string amb = j.at("ambient");
    C.amb = amb == "P1xP1" ? Ambient::P1xP1 : Ambient::P2;
    auto d = j.at("degree");
    C.deg.m = d.at(0);
    C.deg.n = C.amb == Ambient::P1xP1 ? static_cast<int>(d.at(1)) : 0;
    C.prime = j.at("prime");
    C.seed = j.at("seed");
    C.F.amb = C.amb;
    C.F.deg = C.deg;
    for (auto& row : j.at("coefficients")) {
        Expo e{static_cast<int16_t>(row.at(0)), static_cast<int16_t>(row.at(1)),
               static_cast<int16_t>(row.at(2)), static_cast<int16_t>(row.at(3))};
        C.F.set(e, row.at(4));
    }
    for (auto& row : j.at("nodes"))
        C.nodes.push_back({row.at(0), row.at(1), row.at(2), row.at(3)});
    return C;
}

} // namespace syzygy
