#include "syzygy/hurcalc.hpp"

#include <sstream>
#include <stdexcept>

namespace syzygy {

BigInt big_binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

std::string HurClass::str() const {
    auto term = [](const Rat& c, const char* name) -> std::string {
        if (c == 0) return "";
        std::ostringstream os;
        os << c << "*" << name;
        return os.str();
    };
    std::string out;
    for (auto& t : {term(lam, "lambda"), term(d0, "D0"), term(d2, "D2"), term(d3, "D3")}) {
        if (t.empty()) continue;
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out.empty() ? "0" : out;
}

HurClass mumford_pushforward(long n, long k) {
    (void)k;
    if (n == 0) return {};
    if (n == 1) return {1, 0, 0, 0};
    return {Rat(6 * n * n - 6 * n + 1), -Rat(n * n - n, 2), 0, 0};
}

HurClass c1_D(long j, long k) {
    // D^{[k-2-j, 2+j]}[1] = /\^{k-2-j}(push w) (x) push(w^{2+j});
    // c1(/\^i E) = C(r-1, i-1) c1(E), c1(E (x) F) = rk F c1(E) + rk E c1(F),
    // with r = rk(push w) = 2k-1 and rk push(w^n) = (2n-1)(2k-2) for n >= 2.
    long n = 2 + j;
    Rat wedge_rank(big_binom(2 * k - 1, k - 2 - j));
    Rat wedge_c1(big_binom(2 * k - 2, k - 3 - j));
    Rat f_rank = Rat((2 * n - 1) * (2 * k - 2));
    HurClass push = mumford_pushforward(n, k);
    HurClass out = push * wedge_rank;          // rk(/\ E) * c1(F)
    out.lam += f_rank * wedge_c1;              // rk(F) * c1(/\ E)
    return out;
}

HurClass alternating_sum_closed_form(long k) {
    Rat pref = Rat(k + 1) / Rat((2 * k - 3) * (2 * k - 1));
    Rat lam = pref * (Rat((2 * k - 1) * (4 * k - 3)) * Rat(big_binom(2 * k - 2, k - 3)) +
                      Rat(8 * k - 3) * Rat(big_binom(2 * k - 1, k - 2)));
    Rat d0 = -Rat(k * (k + 1)) / Rat(2 * (2 * k - 1) * (2 * k - 3)) *
             Rat(big_binom(2 * k - 1, k - 2));
    return {lam, d0, 0, 0};
}

IdentityReport verify_alternating_sum(long k) {
    if (k < 3) throw std::invalid_argument("verify_alternating_sum: k >= 3");
    HurClass lhs{};
    for (long j = 0; j <= k - 2; ++j) {
        HurClass t = c1_D(j, k);
        lhs = (j % 2 == 0) ? lhs + t : lhs - t;
    }
    IdentityReport rep;
    rep.id = "alternating-sum";
    rep.k = k;
    rep.residual = lhs - alternating_sum_closed_form(k);
    rep.ok = rep.residual.is_zero();
    return rep;
}

HurClass bundle_sum_rhs(long k) {
    return {Rat(2 * k) * Rat(big_binom(2 * k - 2, k - 2)), 0, 0, 0};
}

IdentityReport verify_bundle_sum(long k) {
    if (k < 3) throw std::invalid_argument("verify_bundle_sum: k >= 3");
    // c1(B^{[k-1,1]}) - c1(B^{[k,0]}) with B^{[i,j]} = /\^i(push w) (x) push(w^j):
    // push(w^0) = O (rank 1, c1 = 0), push(w^1) = push w.
    Rat b_k11 = Rat(2 * k - 1) * Rat(big_binom(2 * k - 2, k - 2)) // rk(push w) c1(/\^{k-1})
                + Rat(big_binom(2 * k - 1, k - 1));               // rk(/\^{k-1}) c1(push w)
    Rat b_k0 = Rat(big_binom(2 * k - 2, k - 1));                  // c1(/\^k(push w))
    HurClass lhs{b_k11 - b_k0, 0, 0, 0};
    IdentityReport rep;
    rep.id = "bundle-sum";
    rep.k = k;
    rep.residual = lhs - bundle_sum_rhs(k);
    rep.ok = rep.residual.is_zero();
    return rep;
}

bool verify_rank_identity(long k, long m, RankInfo* info) {
    if (k < 2) throw std::invalid_argument("verify_rank_identity: k >= 2");
    BigInt lhs = BigInt(4 * k - 2) * big_binom(2 * k - 2, k);
    BigInt rhs = BigInt(2 * k - 2) * big_binom(2 * k - 1, k);
    if (info) {
        info->lhs = lhs;
        info->rhs = rhs;
        info->common_rank = lhs - BigInt(m) * (k - 1);
        info->aux_gamma_k11 = BigInt(m - 1) * (2 * k - 1) * big_binom(2 * k - 1, k - 1);
        info->aux_gamma_k0 = BigInt(m - 1) * big_binom(2 * k - 1, k);
    }
    return lhs == rhs;
}

HurClass lambda_relation(long k) {
    if (k < 3) throw std::invalid_argument("lambda_relation: k >= 3");
    // Equate K = (1/2)[-(6k-3)/(6k-5) D0 - 4/(6k-5) D2 + (6k-11)/(6k-5) D3]
    // with K = 8 lambda + D3/6 - 3 D0/2 and solve for lambda.
    Rat q(6 * k - 5);
    Rat d0 = (Rat(-(6 * k - 3)) / (2 * q) + Rat(3, 2)) / 8;
    Rat d2 = (Rat(-4) / (2 * q)) / 8;
    Rat d3 = (Rat(6 * k - 11) / (2 * q) - Rat(1, 6)) / 8;
    return {0, d0, d2, d3};
}

HurClass substitute_lambda(const HurClass& c, long k) {
    HurClass L = lambda_relation(k);
    HurClass out = L * c.lam;
    out.d0 += c.d0;
    out.d2 += c.d2;
    out.d3 += c.d3;
    return out;
}

HurClass normal_bundle_class(long k) {
    (void)k;
    return {-5, Rat(-1, 2), 0, Rat(1, 6)};
}

HurClass atilde_c1(long k) {
    HurClass base{3, Rat(1, 4), 0, Rat(-1, 12)};
    return base * Rat(k - 1);
}

IdentityReport normal_bundle_identity(long k) {
    if (k < 3) throw std::invalid_argument("normal_bundle_identity: k >= 3");
    // c1(A~ (x) lambda^*) + c1(A~) = 2 c1(A~) - rk(A~) lambda, rk(A~) = k-1.
    HurClass lhs = atilde_c1(k) * 2;
    lhs.lam -= Rat(k - 1);
    HurClass rhs = normal_bundle_class(k) * Rat(-(k - 1));
    IdentityReport rep;
    rep.id = "normal-bundle";
    rep.k = k;
    rep.residual = lhs - rhs;
    rep.ok = rep.residual.is_zero();
    return rep;
}

HurClass derive_hur_class(long k, IdentityReport* base_case) {
    if (k < 3) throw std::invalid_argument("derive_hur_class: k >= 3");
    HurClass hur =
        (alternating_sum_closed_form(k) - bundle_sum_rhs(k)) * Rat(1, k - 1);
    if (base_case) {
        // W[1] - V[1] = c1(C^{[k-2,2]}) + [2 c1(A~) - (k-1) lambda]
        //               - [c1(A^{[k-2,2]}) + c1(A~)]
        // must equal (k-1)(hur - N_pi).
        HurClass wv = alternating_sum_closed_form(k);
        wv = wv + atilde_c1(k) * 2;
        wv.lam -= Rat(k - 1);
        wv = wv - bundle_sum_rhs(k) - atilde_c1(k);
        HurClass target = (hur - normal_bundle_class(k)) * Rat(k - 1);
        base_case->id = "divisor-computation-base-case";
        base_case->k = k;
        base_case->residual = wv - target;
        base_case->ok = base_case->residual.is_zero();
    }
    return hur;
}

std::vector<Reading> grr_readings(long k) {
    Rat b(6 * k - 4);
    Rat bm10 = b - 10;
    HurClass p2_printed{-36 / bm10, 4 / bm10, -1 / bm10, 0};
    std::vector<Reading> out;
    out.push_back({"as-printed",
                   {Rat(18) * b / 10, -2 * b / bm10, b / (2 * bm10), 0},
                   p2_printed});
    out.push_back({"lambda-b-minus-10",
                   {Rat(18) * b / bm10, -2 * b / bm10, b / (2 * bm10), 0},
                   p2_printed});
    // D0 coefficient solved so the chain closes; the lambda reading above is
    // forced by the D3 component, this additionally fixes D0.
    out.push_back({"d0-solved",
                   {Rat(18) * b / bm10, -(b * b + 20) / (6 * bm10), b / (2 * bm10), 0},
                   p2_printed});
    return out;
}

Reading grr_reading_by_name(long k, const std::string& name) {
    for (auto& r : grr_readings(k))
        if (r.name == name) return r;
    throw std::invalid_argument("unknown grr reading: " + name);
}

IdentityReport verify_grr_chain(long k, const Reading& reading) {
    if (k < 3) throw std::invalid_argument("verify_grr_chain: k >= 3");
    // c1(A~) = (k-1) lambda + c1(R^{k-1}h_*((1-k)H)) and relative duality
    // turn the chain into (k-1) lambda - 1/2 P1 - (2k-1)/2 P2.
    HurClass chain{Rat(k - 1), 0, 0, 0};
    chain = chain - reading.P1 * Rat(1, 2) - reading.P2 * Rat(2 * k - 1, 2);
    HurClass resid = chain - atilde_c1(k);
    IdentityReport rep;
    rep.id = "grr-chain[" + reading.name + "]";
    rep.k = k;
    rep.residual = substitute_lambda(resid, k);
    rep.ok = rep.residual.is_zero();
    return rep;
}

} // namespace syzygy
