#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syzygy/fp.hpp"

namespace syzygy {

enum class Ambient { P1xP1, P2 };

// Bidegree (m,n) on P1xP1; plane degree lives in m with n = 0.
struct Twist {
    int m = 0, n = 0;
    Twist() = default;
    Twist(int a, int b) : m(a), n(b) {}
    Twist operator+(const Twist& o) const { return {m + o.m, n + o.n}; }
    Twist operator-(const Twist& o) const { return {m - o.m, n - o.n}; }
    Twist operator*(int s) const { return {m * s, n * s}; }
    bool operator==(const Twist& o) const { return m == o.m && n == o.n; }
    auto operator<=>(const Twist& o) const = default;
};

// Exponent vector: (x0,x1,y0,y1) on P1xP1, (z0,z1,z2,0) on P2.
using Expo = std::array<int16_t, 4>;

// Point coordinates, same layout as Expo.
using Point = std::array<uint32_t, 4>;

// A (bi)homogeneous form over F_p.  The zero form has an empty map.
struct MultiForm {
    Ambient amb = Ambient::P1xP1;
    Twist deg;
    std::map<Expo, uint32_t> coeff;

    bool is_zero() const { return coeff.empty(); }
    void set(const Expo& e, uint32_t v) {
        if (v) coeff[e] = v; else coeff.erase(e);
    }
};

// Complete graded-lex ordered monomial list; negative degree gives the empty
// basis by convention.
std::vector<Expo> monomial_basis(Ambient amb, Twist deg);

// Size of monomial_basis without materializing it.
size_t monomial_count(Ambient amb, Twist deg);

MultiForm multiply(const FpField& F, const MultiForm& f, const MultiForm& g);
MultiForm add(const FpField& F, const MultiForm& f, const MultiForm& g);
MultiForm scale(const FpField& F, const MultiForm& f, uint32_t s);

uint32_t evaluate(const FpField& F, const MultiForm& f, const Point& pt);

// Formal partial derivative with respect to coordinate `var` (index into Expo).
MultiForm partial(const FpField& F, const MultiForm& f, int var);

// Dense coefficient vector over monomial_basis(amb, deg).
std::vector<uint32_t> coeff_vector(const MultiForm& f, const std::vector<Expo>& basis);

MultiForm from_coeff_vector(Ambient amb, Twist deg, const std::vector<Expo>& basis,
                            const std::vector<uint32_t>& v);

MultiForm monomial_form(Ambient amb, Twist deg, const Expo& e);

std::string to_string(const MultiForm& f);

} // namespace syzygy
