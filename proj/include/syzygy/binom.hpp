#pragma once

#include <cstdint>
#include <vector>

namespace syzygy {

// Binomial coefficients in uint64 (exact up to n = 64).
inline uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    static std::vector<std::vector<uint64_t>> table; // Pascal rows, built lazily
    if (static_cast<int>(table.size()) <= n) {
        size_t old = table.size();
        table.resize(n + 1);
        for (size_t i = old; i <= static_cast<size_t>(n); ++i) {
            table[i].assign(i + 1, 1);
            for (size_t j = 1; j < i; ++j)
                table[i][j] = table[i - 1][j - 1] + table[i - 1][j];
        }
    }
    return table[n][k];
}

// Strictly increasing p-subsets of {0,..,n-1} in colexicographic order:
// S < T iff max(S xor T) lies in T.  rank(S) = sum_j C(S[j], j+1).

inline uint64_t subset_rank_colex(const std::vector<int>& s) {
    uint64_t r = 0;
    for (size_t j = 0; j < s.size(); ++j) r += binom(s[j], static_cast<int>(j) + 1);
    return r;
}

inline std::vector<int> subset_first_colex(int p) {
    std::vector<int> s(p);
    for (int i = 0; i < p; ++i) s[i] = i;
    return s;
}

// Advance to the colex successor inside {0..n-1}; returns false past the end.
inline bool subset_next_colex(int n, std::vector<int>& s) {
    int p = static_cast<int>(s.size());
    for (int j = 0; j < p; ++j) {
        int cap = (j + 1 < p) ? s[j + 1] : n;
        if (s[j] + 1 < cap) {
            ++s[j];
            for (int i = 0; i < j; ++i) s[i] = i;
            return true;
        }
    }
    return false;
}

} // namespace syzygy
