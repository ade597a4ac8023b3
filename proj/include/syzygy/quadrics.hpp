#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syzygy/curve.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/scrolls.hpp"
#include "syzygy/sections.hpp"

namespace syzygy {

// g-1-k distinct rational curve points with independent conditions on V;
// W is the subspace of canonical sections vanishing at all of them.
struct ProjectionCenter {
    std::vector<Point> points;
    Rref W;               // RREF basis of W inside V-coordinates
    size_t dimW = 0;      // = k+1 when conditions are independent
};

// Rational points found by scanning ruling fibers over F_p; throws with a
// larger-prime hint if the scan cannot find enough.
ProjectionCenter projection_center(const FpField& F, const CurveModel& C, size_t count,
                                   uint64_t seed);

// Symmetric (k+1)x(k+1) matrix over F_p in the W basis.
struct QuadricForm {
    std::vector<std::vector<uint32_t>> M;
    size_t dim() const { return M.size(); }
    std::vector<uint32_t> flat() const;
};

long quadric_rank(const FpField& F, const QuadricForm& Q);

// The rank-4 quadric us*vt - ut*vs of a pencil with respect to the center;
// checks rank exactly 4 and vanishing in W_2, else throws (resample).
QuadricForm pencil_quadric(const FpField& F, const CurveModel& C, const Pencil& pencil,
                           const ProjectionCenter& center);

// True iff the span of the symmetric matrices has dimension m.
bool general_position_check(const FpField& F, const std::vector<QuadricForm>& quadrics);

// A Koszul class in /\^p(span of reps) (x) (span of reps); reps are ambient
// forms giving the current (projected) model's sections of w(-z_1-...-z_j).
struct ProjectedClass {
    int p = 0;
    std::vector<MultiForm> reps;
    // dense coefficients: subset_rank * reps.size() + t
    std::vector<uint32_t> coeff;
};

// One Ehbauer step: contract the class along a curve point x.  The output
// lives on sections vanishing at x; verified to be a cocycle for the
// projected model (annihilated into W_2).  Throws if x is not on the curve.
ProjectedClass ehbauer_project(const FpField& F, const CurveModel& C,
                               const SectionSpace& W2, const ProjectedClass& cls,
                               const Point& x);

struct ScalarReport {
    int p_start = 0;
    // per scroll, per class: scalar c with image = c * Q_i, or -1 if the
    // image fell outside span(Q_i)
    std::vector<std::vector<long>> scalars;
    std::vector<bool> scroll_has_nonzero;
    bool all_in_span = true;
    bool any_class_dropped_to_zero = false;
};

// Iterated single-point projection of each scroll's extremal classes along
// the center; images compared against the corresponding pencil quadric.
ScalarReport iterated_projection_to_quadric(const FpField& F, const CurveModel& C,
                                            const std::vector<Pencil>& pencils,
                                            const ProjectionCenter& center);

} // namespace syzygy
