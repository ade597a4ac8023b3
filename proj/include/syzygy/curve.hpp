#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/fp.hpp"
#include "syzygy/multiform.hpp"

namespace syzygy {

// Ruling projections of P1xP1.  First: (x,y) -> x, fibers cut in y, pencil
// degree = bidegree.n; Second: (x,y) -> y, pencil degree = bidegree.m.
enum class RulingAxis { First, Second };

struct Pencil {
    RulingAxis axis;
    int degree;
};

// A curve cut by one (bi)homogeneous form, with optional prescribed nodes.
struct CurveModel {
    Ambient amb = Ambient::P1xP1;
    Twist deg;          // bidegree (a,b), or plane degree in deg.m
    uint32_t prime = 0;
    uint64_t seed = 0;
    MultiForm F;
    std::vector<Point> nodes; // projective coords, affine chart x0 = y0 = 1 (z0 = 1)

    int arithmetic_genus() const {
        if (amb == Ambient::P1xP1) return (deg.m - 1) * (deg.n - 1);
        return (deg.m - 1) * (deg.m - 2) / 2;
    }
    int geometric_genus() const { return arithmetic_genus() - static_cast<int>(nodes.size()); }

    Twist canonical_twist() const {
        if (amb == Ambient::P1xP1) return {deg.m - 2, deg.n - 2};
        return {deg.m - 3, 0};
    }

    Pencil ruling_pencil(RulingAxis axis) const;
    // Sections {u, v} of the pencil: coordinate forms of the opposite factor.
    std::pair<MultiForm, MultiForm> pencil_sections(const Pencil& p) const;
    Twist pencil_twist(const Pencil& p) const {
        return p.axis == RulingAxis::First ? Twist{1, 0} : Twist{0, 1};
    }

    uint64_t content_hash() const;
};

// Uniformly random coefficients; one 64-bit stream per (seed), reduced mod
// prime, so the two configured primes see the same integral model.
CurveModel random_curve(Ambient amb, Twist deg, uint32_t prime, uint64_t seed);

// F sampled from the linear system vanishing doubly at each node point; each
// node verified ordinary (rank-2 quadratic part), resampling up to a budget.
CurveModel impose_nodes(Ambient amb, Twist deg, const std::vector<Point>& node_points,
                        uint32_t prime, uint64_t seed);

// Distinct random affine points for impose_nodes.
std::vector<Point> random_node_points(Ambient amb, size_t count, uint32_t prime, uint64_t seed);

struct BranchReport {
    int discriminant_degree = 0; // as a binary form on the base line
    bool squarefree = false;
    int branch_count = 0;        // distinct branch points over the closure
    int expected_branching = 0;  // 2*p_a - 2 + 2k
    int pencil_degree = 0;
};

// Discriminant of F along the chosen ruling: squarefree certifies the curve
// smooth along that projection with simple branching.  Throws on an
// identically zero discriminant (non-reduced fiber).
BranchReport certify_smooth_ordinary(const CurveModel& C, RulingAxis axis);

std::string curve_to_json(const CurveModel& C);
CurveModel curve_from_json(const std::string& text);

} // namespace syzygy
