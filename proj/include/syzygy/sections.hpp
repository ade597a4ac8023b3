#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "syzygy/curve.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/multiform.hpp"

namespace syzygy {

// H^0 of a twist of the structure sheaf of C, presented as the quotient of
// the ambient monomial span by F * H^0(twist - deg F).  The section basis is
// the set of non-pivot monomials of the reduced-echelon relation rows
// (graded-lex pivoting), so products of basis sections stay monomial.
class SectionSpace {
public:
    SectionSpace() = default;

    Ambient amb() const { return amb_; }
    Twist twist() const { return twist_; }
    size_t dim() const { return complement_.size(); }
    size_t ambient_dim() const { return ambient_basis_.size(); }

    const std::vector<Expo>& ambient_basis() const { return ambient_basis_; }
    const std::vector<int>& complement() const { return complement_; }

    // Monomial form representing section-basis element i.
    MultiForm section_rep(size_t i) const {
        return monomial_form(amb_, twist_, ambient_basis_[complement_[i]]);
    }

    // Image of the ambient monomial with index `amb_idx` in section coords.
    std::vector<std::pair<uint32_t, uint32_t>> reduce_monomial(const FpField& F,
                                                               size_t amb_idx) const;

    std::vector<uint32_t> reduce_form(const FpField& F, const MultiForm& f) const;

    // Index of an exponent vector in the ambient basis.
    size_t ambient_index(const Expo& e) const;

    friend SectionSpace section_space(const FpField& F, const CurveModel& C, Twist twist);

private:
    Ambient amb_ = Ambient::P1xP1;
    Twist twist_;
    std::vector<Expo> ambient_basis_;
    Rref relations_;              // RREF of the relation subspace
    std::vector<int> complement_; // non-pivot ambient indices, ascending
};

// Throws if the ambient H^1 correction for the relation twist is nonzero
// (the quotient formula would not compute curve sections).
SectionSpace section_space(const FpField& F, const CurveModel& C, Twist twist);

// Structure constants of H^0(t1) x H^0(t2) -> H^0(t1+t2):
// entry[i][j] = coordinates of (basis_i * basis_j) in the target basis.
struct MultTensor {
    Twist t1, t2, target;
    size_t dim1 = 0, dim2 = 0, target_dim = 0;
    std::vector<std::vector<std::vector<std::pair<uint32_t, uint32_t>>>> entry;

    const std::vector<std::pair<uint32_t, uint32_t>>& at(size_t i, size_t j) const {
        return entry[i][j];
    }
};

MultTensor mult_tensor(const FpField& F, const CurveModel& C, Twist t1, Twist t2);
MultTensor mult_tensor(const FpField& F, const SectionSpace& s1, const SectionSpace& s2,
                       const SectionSpace& target);

// h^0(L^2) == 3 for the ruling pencil (type I).
bool type_I_check(const FpField& F, const CurveModel& C, const Pencil& pencil);

// Disk-cached tensor, keyed by (curve content hash, twist pair); falls back
// to mult_tensor when cache_dir is empty or the entry is missing.
MultTensor cached_mult_tensor(const FpField& F, const CurveModel& C, Twist t1, Twist t2,
                              const std::string& cache_dir);

} // namespace syzygy
