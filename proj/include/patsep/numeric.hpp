#pragma once

#include <cstdint>

namespace patsep {

// Exact integer square root: largest r with r*r <= x.
std::uint64_t isqrt_u64(std::uint64_t x);

// C(n,k) saturated at UINT64_MAX.
std::uint64_t binomial_u64(int n, int k);

// n! for n <= 20.
std::uint64_t factorial_u64(int n);

}  // namespace patsep
