#pragma once

#include <cstdint>
#include <string>

namespace syzygy {

// splitmix64: portable deterministic stream, split per subsystem by mixing a
// tag into the seed.  All artifact randomness flows from one root seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    Rng(uint64_t seed, const std::string& tag) : state_(seed) {
        for (char c : tag) state_ = mix(state_ ^ static_cast<uint64_t>(c));
        state_ = mix(state_);
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, m); bias < 2^-49 for m < 2^15 (immaterial here, and portable).
    uint32_t below(uint32_t m) { return static_cast<uint32_t>(next() % m); }

    Rng split(const std::string& tag) { return Rng(next(), tag); }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

} // namespace syzygy
