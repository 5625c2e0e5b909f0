#pragma once

// Binary-expansion combinatorics of natural numbers: coefficients eps_j(n)
// with n = sum eps_j 2^j, the variation
//
//   V(n) = eps_0(n) + sum_{j>=1} |eps_j(n) - eps_{j-1}(n)|,
//
// the spectrum Sp(n) = { j : eps_j(n) = 1 } (bit positions counted from 0),
// and nested-spectrum sequences: Sp(n_{k+1}) restricted to
// [0, max Sp(n_k)] equals Sp(n_k) for every consecutive pair.

#include <cstdint>
#include <span>
#include <vector>

namespace summab {

// eps_0(n) .. eps_B(n) including one trailing zero past the top bit.
std::vector<int> binary_coefficients(std::uint64_t n);

// V(n), n >= 1; implemented by the literal transition-count formula so the
// test suite can cross-check it against block counting.
int variation(std::uint64_t n);

// Sp(n) in increasing order; Sp(0) = {} as a documented extension.
std::vector<int> spectrum(std::uint64_t n);

// Single nested pair: Sp(b) agrees with Sp(a) on [0, max Sp(a)].
bool nested_pair(std::uint64_t a, std::uint64_t b);

struct NestedCheck {
    bool nested = false;
    // 0-based position of the first element whose spectrum fails to extend
    // its predecessor; -1 when the sequence nests.
    int first_violation = -1;
};

// Requires a strictly increasing sequence of length >= 2 with positive
// entries.
NestedCheck is_nested(std::span<const std::uint64_t> seq);

// n_k = sum_{j=0}^{k} 4^j = 1, 5, 21, 85, ... for k = 0..K-1; spectra
// {0, 2, ..., 2k} nest and V(n_k) = 2(k+1) grows without bound. K <= 32
// (the K = 33 value would overflow 64 bits).
std::vector<std::uint64_t> gen_nested_unbounded_variation(int K);

} // namespace summab
