#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "patsep/permutation.hpp"

namespace patsep {

using Rational = boost::rational<long long>;

// Bounds on F(k), the maximum length of a k-separator.
struct BoundsRecord {
    int k = 0;
    int lower = 0;       // k + floor(sqrt(2k-3)) - 1, by construction
    int upper = 0;       // k + floor(sqrt(2k-3)), by the distance argument
    int trivial_2k = 0;  // 2k - 1, the largest length the k-prefix argument allows
    // Largest n with C(n,k) <= k!; computed exactly with big integers,
    // omitted above BINOM_BOUND_K_MAX.
    std::optional<long long> binom_bound;
    std::optional<int> exact_f;   // filled by the search module
    std::optional<int> epsilon;   // exact_f - upper, in {-1, 0}
};

inline constexpr int BINOM_BOUND_K_MAX = 512;

// d_sigma(i,j) = |sigma^-1(i) - sigma^-1(j)| for values i, j.
int distance(const Permutation& sigma, int i, int j);

// t^sigma_{i,j}: values strictly between i and j that are also positioned
// strictly between them. Satisfies 0 <= t < |i-j|.
int between_count(const Permutation& sigma, int i, int j);

// |i-j| + |sigma_i - sigma_j| for positions i, j.
int taxicab(const Permutation& sigma, int i, int j);

// One failed instance of a distance inequality, recorded per value pair.
struct DistanceViolation {
    int i = 0;
    int j = 0;
    long long lhs = 0;  // d_sigma(i,j)
    long long rhs = 0;  // the bound it fell below
};

// For a k-separator of length n, every value pair must satisfy
// d >= (n-k+2) + t - |i-j|. A non-empty list certifies sigma is NOT a
// k-separator (the converse is not claimed). early_exit stops at the first
// violation; by default the list is complete.
std::vector<DistanceViolation> check_lemma23(const Permutation& sigma, int k,
                                             bool early_exit = false);

// The weakened form d >= (n-k+2) - |i-j| (t dropped).
std::vector<DistanceViolation> check_distance_lower_bound(const Permutation& sigma,
                                                          int k,
                                                          bool early_exit = false);

// Sum of consecutive position gaps when reading values 1..m in position
// order; never exceeds n-1.
long long chain_distance_sum(const Permutation& sigma, int m);

// Sum of |a_i - a_{i+1}| over a permutation word of [m].
long long displacement_sum(const std::vector<int>& word);

enum class DisplacementMode { formula, oracle };

struct DisplacementRecord {
    int m = 0;
    Rational bound;                        // (m-1)(m+1)/2
    std::optional<long long> oracle_max;   // exhaustive max over S_m
    // oracle_max == (m-1)(m+1)/2 - 1, the refined best-possible value
    std::optional<bool> matches_refined_bound;
};

// formula: the (m-1)(m+1)/2 bound as an exact rational.
// oracle: brute force over S_m (m <= 10) plus the refined-bound comparison.
DisplacementRecord max_displacement_sum(int m, DisplacementMode mode);

struct Lemma27Result {
    bool holds = false;
    bool equality = false;  // occurs iff x = n^2 - 1
};

// floor(sqrt(x)) + x/floor(sqrt(x)) <= 2(floor(sqrt(x)) + 1), exactly.
Lemma27Result check_lemma27(long long x);

// f_k(m) = m + (2k-3)/(m-2), the quantity minimized to pin the upper bound.
Rational f_k(int k, long long m);

// The integer minimizer: ceil(sqrt(2k-3)) + 2 when k = 2u^2 + 1, else
// floor(sqrt(2k-3)) + 2. Satisfies f_k(optimal_m(k)) < 2(floor(sqrt(2k-3)) + 2).
long long optimal_m(int k);

BoundsRecord bounds_for(int k);

}  // namespace patsep
