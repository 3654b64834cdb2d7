#include "patsep/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace patsep {

std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r > x / r) --r;               // r*r > x, without overflow
    while ((r + 1) <= x / (r + 1)) ++r;           // (r+1)^2 <= x
    return r;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // c * (n-k+i) / i is integral at every step
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (c > UINT64_MAX / num) return UINT64_MAX;
        c = c * num / static_cast<std::uint64_t>(i);
    }
    return c;
}

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial_u64: n not in [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace patsep
