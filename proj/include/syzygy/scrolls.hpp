#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syzygy/curve.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/sections.hpp"

namespace syzygy {

// Index of v_a v_b (a <= b) in the Sym^2 V basis.
inline size_t sym2_index(size_t a, size_t b) {
    if (a > b) std::swap(a, b);
    return b * (b + 1) / 2 + a;
}
inline size_t sym2_dim(size_t n) { return n * (n + 1) / 2; }

// Sym^2 coordinates of the product of two V-vectors.
std::vector<uint32_t> sym2_product(const FpField& F, const std::vector<uint32_t>& s,
                                   const std::vector<uint32_t>& t);

// The determinantal data of the scroll swept out by a pencil: the 2 x f
// matrix of linear forms u*y_j, v*y_j in V-coordinates and its 2x2 minors.
struct ScrollData {
    int f = 0;       // number of columns = g + 1 - k
    size_t dimV = 0;
    std::vector<std::vector<uint32_t>> top, bot;    // V-coordinates
    std::vector<std::vector<uint32_t>> minors;      // Sym^2 V coordinates
};

// Builds ScrollData from explicit column pairs (used by the synthetic
// rational-normal-scroll oracle and the degenerate one-column case).
ScrollData scroll_from_columns(const FpField& F, size_t dimV,
                               std::vector<std::vector<uint32_t>> top,
                               std::vector<std::vector<uint32_t>> bot);

// Scroll of a ruling pencil; checks h^0(w - L) == g+1-k and that every minor
// vanishes on the curve (maps to zero in W_2).
ScrollData scroll_matrix(const FpField& F, const CurveModel& C, const Pencil& pencil);

// Rational normal surface scroll S(e1, e2), e1 + e2 = f, in P^{f+1}.
ScrollData synthetic_scroll(const FpField& F, int f);

// Eagon-Northcott linear strand of a degree-f scroll: p * binom(f, p+1),
// zero outside 1 <= p <= f-1.
long en_strand_formula(int f, int p);

// Koszul strand of the scroll coordinate ring (degree-2 part Sym^2 V / minors).
// Throws if it disagrees with en_strand_formula.
std::vector<long> scroll_strand(const FpField& F, const ScrollData& X);

// Differential /\^p V (x) V -> /\^{p-1} V (x) (Sym^2 V / minors).
SparseMat scroll_koszul_differential(const FpField& F, const ScrollData& X, int p,
                                     const Rref& minor_rref);

Rref minor_span(const FpField& F, const ScrollData& X);

struct JReport {
    int genus = 0, k = 0, p = 0;
    long b_curve = 0;
    std::vector<long> scroll_dims; // per scroll: dim ker - dim im(d_{p+1}), expected g-k
    long span_dim = 0;             // dim of the summed scroll syzygy space in K_{p,1}(C)
    long expected_injective = 0;   // m (g-k)
    bool injective = false;
    bool isomorphism = false;
};

// Extremal syzygy spaces of the scrolls inside the curve's Koszul space:
// scroll kernels share the ambient /\^p V (x) V with nested kernels.
JReport restriction_span_dim(const FpField& F, const CurveModel& C,
                             const std::vector<Pencil>& pencils);

// Cocycle-level basis of K_{g-k,1}(X) for one scroll: a complement of
// im(d_{p+1}) inside ker(d_p^X), as vectors in /\^p V (x) V.
std::vector<std::vector<uint32_t>> scroll_extremal_classes(const FpField& F,
                                                           const ScrollData& X, int p);

} // namespace syzygy
