#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "patsep/patterns.hpp"

namespace patsep {

// Default feasibility guard for exhaustive enumeration over S_{k+l}.
inline constexpr int SEARCH_N_MAX_DEFAULT = 12;

// Verdict of a separator check.
struct SeparatorReport {
    int n = 0;
    int k = 0;
    bool is_separator = false;
    // Number of distinct k-patterns seen; equals C(n,k) iff is_separator.
    // On an early-exit failure this counts the patterns seen before the
    // first duplicate.
    std::uint64_t distinct_count = 0;
    // First duplicate pair in lexicographic selector order, when one exists.
    // Both selectors are distinct and pattern-isomorphic.
    std::optional<std::pair<Selector, Selector>> witness;
};

// Definition: sigma is a k-separator iff it contains at most one copy of any
// pi in S_k. Streams all C(n,k) selectors through a duplicate-detection
// index and exits on the first repeat.
SeparatorReport is_k_separator(const Permutation& sigma, int k);

// Number of distinct k-patterns over all C(n,k) selectors (full stream, no
// early exit).
std::uint64_t distinct_pattern_count(const Permutation& sigma, int k);

// P(k,l): maximum of distinct_pattern_count(sigma, k) over sigma in S_{k+l},
// with Q(k,l) = P(k,l) / C(k+l, k) as an exact reduced fraction.
struct PQRecord {
    int k = 0;
    int l = 0;
    std::uint64_t p_value = 0;
    long long q_num = 0;
    long long q_den = 1;
};

struct PQOptions {
    int max_n = SEARCH_N_MAX_DEFAULT;  // feasibility guard on k+l
    int worker_count = 1;
};

// Exhaustive with symmetry reduction: only the lexicographic minimum of
// each 8-element dihedral orbit is evaluated (distinct pattern counts are
// symmetry-invariant).
PQRecord p_of(int k, int l, const PQOptions& opts = {});

namespace detail {

// Test hook: fingerprint-mode scans with a truncated fingerprint width, to
// exercise the exact collision-resolution path. fp_bits = 63 in production.
SeparatorReport is_k_separator_impl(const Permutation& sigma, int k, int fp_bits);
std::uint64_t distinct_pattern_count_impl(const Permutation& sigma, int k,
                                          int fp_bits);

}  // namespace detail

}  // namespace patsep
