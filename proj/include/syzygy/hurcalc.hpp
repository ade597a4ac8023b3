#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace syzygy {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt big_binom(long n, long k);

// Exact-rational divisor class on the admissible-cover space in the basis
// (lambda, D0, D2, D3), parameterized by k with g = 2k-1, b = 6k-4.
struct HurClass {
    Rat lam, d0, d2, d3;

    HurClass operator+(const HurClass& o) const { return {lam + o.lam, d0 + o.d0, d2 + o.d2, d3 + o.d3}; }
    HurClass operator-(const HurClass& o) const { return {lam - o.lam, d0 - o.d0, d2 - o.d2, d3 - o.d3}; }
    HurClass operator*(const Rat& s) const { return {lam * s, d0 * s, d2 * s, d3 * s}; }
    bool is_zero() const { return lam == 0 && d0 == 0 && d2 == 0 && d3 == 0; }
    bool operator==(const HurClass& o) const {
        return lam == o.lam && d0 == o.d0 && d2 == o.d2 && d3 == o.d3;
    }
    std::string str() const;
};

struct IdentityReport {
    std::string id;
    long k = 0;
    HurClass residual;
    bool ok = false;
    std::vector<std::string> notes;
};

// c1 of the pushforward of the n-th relative dualizing power:
// (6n^2-6n+1) lambda - (n^2-n)/2 D0 for n >= 2; lambda at n = 1; 0 at n = 0.
HurClass mumford_pushforward(long n, long k);

// c1 of /\^{k-2-j}(push of w) (x) push(w^{2+j}), rank bookkeeping with
// rank(push w) = 2k-1 and c1 = lambda.
HurClass c1_D(long j, long k);

// Alternating sum over j of c1_D against the closed form.
IdentityReport verify_alternating_sum(long k);
HurClass alternating_sum_closed_form(long k);

// c1(A^{[k-2,2]} + A~) = 2k C(2k-2, k-2) lambda via the two exact sequences.
IdentityReport verify_bundle_sum(long k);
HurClass bundle_sum_rhs(long k);

struct RankInfo {
    BigInt lhs, rhs;       // (4k-2) C(2k-2,k) and (2k-2) C(2k-1,k)
    BigInt common_rank;    // either side minus m(k-1)
    BigInt aux_gamma_k11;  // (m-1)(2k-1) C(2k-1,k-1)
    BigInt aux_gamma_k0;   // (m-1) C(2k-1,k)
};
bool verify_rank_identity(long k, long m, RankInfo* info = nullptr);

// lambda as a rational combination of D0, D2, D3, extracted from equating
// the two displayed forms of the canonical class (lam field is zero).
HurClass lambda_relation(long k);

// 2 c1(A~) - (k-1) lambda == -(k-1) N_pi with the stated N_pi and c1(A~).
IdentityReport normal_bundle_identity(long k);
HurClass normal_bundle_class(long k); // N_pi = -5 lambda - D0/2 + D3/6
HurClass atilde_c1(long k);           // (k-1)(3 lambda + D0/4 - D3/12)

// hur = [alternating-sum closed form - bundle-sum RHS] / (k-1); also checks
// the base-case identity W[1]-V[1] = (k-1)(hur - N_pi).
HurClass derive_hur_class(long k, IdentityReport* base_case = nullptr);

// Candidate readings of the two pushforward classes feeding the
// Grothendieck-Riemann-Roch chain for c1(A~).
struct Reading {
    std::string name;
    HurClass P1; // mu_* c1^2(E_f)
    HurClass P2; // mu_*(c1(w_mu) . c1(E_f))
};
std::vector<Reading> grr_readings(long k);
Reading grr_reading_by_name(long k, const std::string& name);

// Chain: (k-1) lambda - 1/2 P1 - (2k-1)/2 P2, residual against the target
// c1(A~) after substituting the boundary lambda relation.
IdentityReport verify_grr_chain(long k, const Reading& reading);

// Substitute lambda -> lambda_relation(k) into a class.
HurClass substitute_lambda(const HurClass& c, long k);

} // namespace syzygy
