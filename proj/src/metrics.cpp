#include "patsep/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "patsep/numeric.hpp"

namespace patsep {

namespace {

void require_value(const Permutation& sigma, int v) {
    if (v < 1 || v > sigma.size())
        throw ValueOutOfRange("value " + std::to_string(v) + " not in [1, " +
                              std::to_string(sigma.size()) + "]");
}

void require_k(const Permutation& sigma, int k) {
    if (k < 1 || k > sigma.size())
        throw KOutOfRange("k = " + std::to_string(k) + " not in [1, " +
                          std::to_string(sigma.size()) + "]");
}

}  // namespace

int distance(const Permutation& sigma, int i, int j) {
    require_value(sigma, i);
    require_value(sigma, j);
    return std::abs(sigma.position_of(i) - sigma.position_of(j));
}

int between_count(const Permutation& sigma, int i, int j) {
    require_value(sigma, i);
    require_value(sigma, j);
    if (i == j) throw EqualValues("t undefined for i = j = " + std::to_string(i));
    const int lo_v = std::min(i, j), hi_v = std::max(i, j);
    const int lo_p = std::min(sigma.position_of(i), sigma.position_of(j));
    const int hi_p = std::max(sigma.position_of(i), sigma.position_of(j));
    int t = 0;
    for (int p = lo_p + 1; p < hi_p; ++p) {
        const int v = sigma.one_line()[p - 1];
        if (lo_v < v && v < hi_v) ++t;
    }
    return t;
}

int taxicab(const Permutation& sigma, int i, int j) {
    const int n = sigma.size();
    if (i < 1 || i > n || j < 1 || j > n)
        throw PositionOutOfRange("position not in [1, " + std::to_string(n) + "]");
    return std::abs(i - j) +
           std::abs(sigma.one_line()[i - 1] - sigma.one_line()[j - 1]);
}

namespace {

std::vector<DistanceViolation> scan_pairs(const Permutation& sigma, int k,
                                          bool with_between, bool early_exit) {
    require_k(sigma, k);
    const int n = sigma.size();
    std::vector<DistanceViolation> violations;
    for (int i = 1; i <= n && !(early_exit && !violations.empty()); ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const long long d = distance(sigma, i, j);
            const long long t = with_between ? between_count(sigma, i, j) : 0;
            const long long bound = (n - k + 2) + t - (j - i);
            if (d < bound) {
                violations.push_back(DistanceViolation{i, j, d, bound});
                if (early_exit) break;
            }
        }
    }
    return violations;
}

}  // namespace

std::vector<DistanceViolation> check_lemma23(const Permutation& sigma, int k,
                                             bool early_exit) {
    return scan_pairs(sigma, k, /*with_between=*/true, early_exit);
}

std::vector<DistanceViolation> check_distance_lower_bound(const Permutation& sigma,
                                                          int k, bool early_exit) {
    return scan_pairs(sigma, k, /*with_between=*/false, early_exit);
}

long long chain_distance_sum(const Permutation& sigma, int m) {
    require_value(sigma, m);
    std::vector<int> positions;
    positions.reserve(m);
    for (int v = 1; v <= m; ++v) positions.push_back(sigma.position_of(v));
    std::sort(positions.begin(), positions.end());
    long long sum = 0;
    for (int l = 0; l + 1 < m; ++l) sum += positions[l + 1] - positions[l];
    return sum;
}

long long displacement_sum(const std::vector<int>& word) {
    Permutation::from_one_line(word);  // validates bijection on [m]
    long long sum = 0;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        sum += std::abs(word[i] - word[i + 1]);
    return sum;
}

DisplacementRecord max_displacement_sum(int m, DisplacementMode mode) {
    if (m < 1) throw NonPositive("m must be >= 1");
    DisplacementRecord rec;
    rec.m = m;
    rec.bound = Rational(static_cast<long long>(m - 1) * (m + 1), 2);
    if (mode == DisplacementMode::oracle) {
        if (m > 10)
            throw OracleTooLarge("exhaustive S_m limited to m <= 10, got " +
                                 std::to_string(m));
        std::vector<int> word(m);
        std::iota(word.begin(), word.end(), 1);
        long long best = 0;
        do {
            long long sum = 0;
            for (int i = 0; i + 1 < m; ++i) sum += std::abs(word[i] - word[i + 1]);
            best = std::max(best, sum);
        } while (std::next_permutation(word.begin(), word.end()));
        rec.oracle_max = best;
        rec.matches_refined_bound = Rational(best) == rec.bound - 1;
    }
    return rec;
}

Lemma27Result check_lemma27(long long x) {
    if (x < 1) throw NonPositive("x must be >= 1, got " + std::to_string(x));
    const auto r = static_cast<long long>(isqrt_u64(static_cast<std::uint64_t>(x)));
    const Rational lhs = Rational(r) + Rational(x, r);
    const Rational rhs(2 * (r + 1));
    return Lemma27Result{lhs <= rhs, lhs == rhs};
}

Rational f_k(int k, long long m) {
    if (k < 2) throw KTooSmall("f_k requires k >= 2");
    if (m == 2) throw PoleAtTwo("f_k has a pole at m = 2");
    if (m < 2) throw MOutOfRange("f_k requires m >= 3, got " + std::to_string(m));
    return Rational(m) + Rational(2LL * k - 3, m - 2);
}

long long optimal_m(int k) {
    if (k < 2) throw KTooSmall("optimal_m requires k >= 2");
    const std::uint64_t x = 2ull * k - 3;
    const std::uint64_t root = isqrt_u64(x);
    // k = 2u^2 + 1 <=> 2k-3 = (2u)^2 - ... detect via (k-1)/2 being a square
    bool special = false;
    if ((k - 1) % 2 == 0) {
        const std::uint64_t half = static_cast<std::uint64_t>(k - 1) / 2;
        const std::uint64_t u = isqrt_u64(half);
        special = u * u == half && half > 0;
    }
    const std::uint64_t ceil_root = root * root == x ? root : root + 1;
    return static_cast<long long>(special ? ceil_root : root) + 2;
}

namespace {

// Largest n with C(n,k) <= k!, by exact big-integer comparison.
long long binom_bound_exact(int k) {
    namespace mp = boost::multiprecision;
    mp::cpp_int kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    mp::cpp_int c = 1;  // C(n,k) at n = k
    long long n = k;
    while (true) {
        mp::cpp_int next = c * (n + 1) / (n + 1 - k);
        if (next > kfact) return n;
        c = std::move(next);
        ++n;
    }
}

}  // namespace

BoundsRecord bounds_for(int k) {
    if (k < 2) throw KTooSmall("bounds require k >= 2, got " + std::to_string(k));
    BoundsRecord rec;
    rec.k = k;
    const int s = static_cast<int>(isqrt_u64(2ull * k - 3));
    rec.lower = k + s - 1;
    rec.upper = k + s;
    rec.trivial_2k = 2 * k - 1;
    if (k <= BINOM_BOUND_K_MAX) rec.binom_bound = binom_bound_exact(k);
    return rec;
}

}  // namespace patsep
