#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syzygy {

// Arithmetic in F_p for an odd prime p < 2^15 (default 32003).
// Values are canonical residues in [0, p); a*b fits in uint64 with room
// for ~2^33 accumulated products before reduction.
class FpField {
public:
    explicit FpField(uint32_t prime) : p_(prime) {
        if (prime < 3 || prime % 2 == 0 || prime >= (1u << 15))
            throw std::invalid_argument("FpField: need odd prime in [3, 2^15), got " +
                                        std::to_string(prime));
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }
    uint32_t reduce_u64(uint64_t x) const { return static_cast<uint32_t>(x % p_); }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }

    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("FpField::inv(0)");
        return pow(a, p_ - 2);
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const FpField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

} // namespace syzygy
