#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace syzygy {

// Lattice Z[C] + Z[E1] + Z[E2] with the two-elliptic-pencil intersection
// matrix ((2g-2, k, k), (k, 0, 2), (k, 2, 0)).
struct LatticeData {
    long g = 0, k = 0;
    long gram[3][3];

    LatticeData(long g_, long k_) : g(g_), k(k_) {
        long m[3][3] = {{2 * g - 2, k, k}, {k, 0, 2}, {k, 2, 0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gram[i][j] = m[i][j];
    }
};

struct LatticeClass {
    long a = 0, b1 = 0, b2 = 0; // coefficients on (C, E1, E2)
};

long pair(const LatticeData& L, const LatticeClass& x, const LatticeClass& y);
inline long self(const LatticeData& L, const LatticeClass& x) { return pair(L, x, x); }

// det(Gram) = 4(k^2 + 2 - 2g).
long discriminant(const LatticeData& L);

// Eigenvalue signs (+,-,-), decided by exact Descartes counts on the
// characteristic polynomial (all roots real).
bool signature_check(const LatticeData& L);

struct SearchBox {
    long a_lo, a_hi, b_lo, b_hi;
};

struct LatticeCertificate {
    std::string claim;
    long g = 0, k = 0;
    bool hypotheses_met = false;
    bool success = false;
    SearchBox box{0, 0, 0, 0};
    std::vector<LatticeClass> violators;
    std::vector<std::string> notes;
    long cliff = -1; // clifford_certificate only
};

enum class NefTarget { E1, E2, C };

// Searches the box for (-2)-classes satisfying the effectivity-necessary
// pairing inequalities extracted from the nefness proofs; success iff none
// pair negatively with the target.  `scale` widens the box (robustness).
LatticeCertificate nef_certificate(const LatticeData& L, NefTarget target, int scale = 1);

// Decomposition search C = M + N with M^2, N^2 >= 0 and (M.N) <= k; success
// iff the survivors are exactly {E1, E2, C-E1, C-E2}; then Cliff(C) = k-2.
LatticeCertificate clifford_certificate(const LatticeData& L, int scale = 1);

// No (-2)-class R with (R . C-2E_i) < 0 and C-2E_i-R effective-necessary.
LatticeCertificate h1_certificate(const LatticeData& L, int which_e, int scale = 1);

// Conjunction: ranges, signature, nef (E1, E2, C), clifford, h1 (both E_i);
// also records the Coppens range and non-maximal-gonality annotations.
LatticeCertificate bpf_certificate(long g, long k, int scale = 1);

// Excluded cover types in the Mumford--Keem gonality ranges (advisory only).
std::vector<std::string> keem_advisory(long g, long k, std::string* note);

} // namespace syzygy
