#include "patsep/separator.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "patsep/numeric.hpp"
#include "patsep/pattern_index.hpp"

namespace patsep {

namespace {

void require_k_in_range(const Permutation& sigma, int k) {
    if (k < 1 || k > sigma.size())
        throw KOutOfRange("k = " + std::to_string(k) + " not in [1, " +
                          std::to_string(sigma.size()) + "]");
}

Selector selector_from(const int* positions, int k) {
    return Selector{std::vector<int>(positions, positions + k)};
}

std::vector<int> word_of_selector(const Permutation& sigma, const Selector& sel) {
    std::vector<int> values;
    values.reserve(sel.indices.size());
    for (int p : sel.indices) values.push_back(sigma.one_line()[p - 1]);
    return standardize(values).one_line();
}

// Finds the lexicographically first selector whose key equals `target`,
// re-running the scan. Used to recover the earlier half of a duplicate
// pair (and, in fingerprint mode, collision candidates) without storing a
// selector per key.
template <class KeyPolicy>
Selector locate_first_with_key(const Permutation& sigma, int k,
                               std::uint64_t target, std::uint64_t fp_mask) {
    Selector found;
    auto leaf = [&](std::uint64_t key, const int* pos, const auto&) {
        if constexpr (!KeyPolicy::exact) key &= fp_mask;
        if (key == target) {
            found = selector_from(pos, k);
            return false;
        }
        return true;
    };
    detail::scan_subsets<KeyPolicy>(sigma.one_line(), k, leaf);
    return found;
}

struct ScanResult {
    bool is_separator = true;
    std::uint64_t distinct = 0;
    std::optional<std::pair<Selector, Selector>> witness;
};

// Exact mode (k <= RANK_MAX_K): keys are bijective codes, a repeated key is
// a repeated pattern.
ScanResult scan_exact(const Permutation& sigma, int k, bool early_exit) {
    FlatKeySet seen;
    seen.reserve(binomial_u64(sigma.size(), k));
    ScanResult result;
    auto leaf = [&](std::uint64_t key, const int* pos, const auto&) {
        if (seen.insert_and_test(key)) return true;
        result.is_separator = false;
        if (!early_exit) return true;
        Selector current = selector_from(pos, k);
        Selector earlier = locate_first_with_key<detail::ExactCodePolicy>(
            sigma, k, key, ~0ull);
        result.witness = std::make_pair(std::move(earlier), std::move(current));
        return false;
    };
    detail::scan_subsets<detail::ExactCodePolicy>(sigma.one_line(), k, leaf);
    result.distinct = seen.size();
    return result;
}

// Fingerprint mode (k > RANK_MAX_K): keys are fp_bits-wide fingerprints of
// the digit stream. A repeated fingerprint is only a duplicate candidate;
// candidates are resolved exactly by comparing standardized words, with the
// earlier selector recovered by rescan. Distinct words that share a
// fingerprint live in an overflow bucket so each fingerprint rescans at
// most once.
ScanResult scan_fingerprint(const Permutation& sigma, int k, bool early_exit,
                            int fp_bits) {
    const std::uint64_t fp_mask = (fp_bits >= 64) ? ~0ull : (1ull << fp_bits) - 1;
    FlatKeySet seen;
    seen.reserve(binomial_u64(sigma.size(), k));
    std::unordered_map<std::uint64_t,
                       std::vector<std::pair<std::vector<int>, Selector>>>
        buckets;

    ScanResult result;
    std::uint64_t extra_distinct = 0;

    auto leaf = [&](std::uint64_t key, const int* pos, const auto&) {
        const std::uint64_t fp = key & fp_mask;
        if (seen.insert_and_test(fp)) return true;

        Selector current = selector_from(pos, k);
        std::vector<int> word = word_of_selector(sigma, current);
        auto& bucket = buckets[fp];
        if (bucket.empty()) {
            Selector earlier = locate_first_with_key<detail::FingerprintPolicy>(
                sigma, k, fp, fp_mask);
            bucket.emplace_back(word_of_selector(sigma, earlier),
                                std::move(earlier));
        }
        for (const auto& [known_word, known_sel] : bucket) {
            if (known_word == word) {
                result.is_separator = false;
                if (!early_exit) return true;
                result.witness = std::make_pair(known_sel, std::move(current));
                return false;
            }
        }
        // fingerprint collision between distinct patterns
        ++extra_distinct;
        bucket.emplace_back(std::move(word), std::move(current));
        return true;
    };
    detail::scan_subsets<detail::FingerprintPolicy>(sigma.one_line(), k, leaf);
    result.distinct = seen.size() + extra_distinct;
    return result;
}

ScanResult run_scan(const Permutation& sigma, int k, bool early_exit, int fp_bits) {
    if (k <= RANK_MAX_K) return scan_exact(sigma, k, early_exit);
    return scan_fingerprint(sigma, k, early_exit, fp_bits);
}

}  // namespace

namespace detail {

SeparatorReport is_k_separator_impl(const Permutation& sigma, int k, int fp_bits) {
    require_k_in_range(sigma, k);
    ScanResult scan = run_scan(sigma, k, /*early_exit=*/true, fp_bits);
    return SeparatorReport{sigma.size(), k, scan.is_separator, scan.distinct,
                           std::move(scan.witness)};
}

std::uint64_t distinct_pattern_count_impl(const Permutation& sigma, int k,
                                          int fp_bits) {
    require_k_in_range(sigma, k);
    return run_scan(sigma, k, /*early_exit=*/false, fp_bits).distinct;
}

}  // namespace detail

SeparatorReport is_k_separator(const Permutation& sigma, int k) {
    return detail::is_k_separator_impl(sigma, k, 63);
}

std::uint64_t distinct_pattern_count(const Permutation& sigma, int k) {
    return detail::distinct_pattern_count_impl(sigma, k, 63);
}

// ---------------------------------------------------------------------------
// P(k,l)
// ---------------------------------------------------------------------------

namespace {

// Distinct k-pattern counter reusable across many hosts of the same length.
// Dense epoch-stamped table when k! is small, flat set otherwise.
class DistinctCounter {
public:
    DistinctCounter(int n, int k) : k_(k) {
        std::uint64_t fact = 1;
        bool small = true;
        for (int i = 2; i <= k; ++i) {
            fact *= static_cast<std::uint64_t>(i);
            if (fact > (1u << 22)) {
                small = false;
                break;
            }
        }
        if (small) {
            stamps_.assign(static_cast<size_t>(fact), 0);
        } else {
            set_.reserve(binomial_u64(n, k));
        }
    }

    std::uint64_t count(const std::vector<int>& host) {
        std::uint64_t distinct = 0;
        if (!stamps_.empty()) {
            ++epoch_;
            auto leaf = [&](std::uint64_t key, const int*, const auto&) {
                if (stamps_[key] != epoch_) {
                    stamps_[key] = epoch_;
                    ++distinct;
                }
                return true;
            };
            detail::scan_subsets<detail::ExactCodePolicy>(host, k_, leaf);
        } else {
            set_.clear();
            auto leaf = [&](std::uint64_t key, const int*, const auto&) {
                set_.insert_and_test(key);
                return true;
            };
            detail::scan_subsets<detail::ExactCodePolicy>(host, k_, leaf);
            distinct = set_.size();
        }
        return distinct;
    }

private:
    int k_;
    std::vector<std::uint32_t> stamps_;
    std::uint32_t epoch_ = 0;
    FlatKeySet set_;
};

bool host_is_orbit_minimal(const std::vector<int>& vals) {
    return is_orbit_minimal(Permutation::from_one_line(vals));
}

}  // namespace

PQRecord p_of(int k, int l, const PQOptions& opts) {
    if (k < 1) throw KOutOfRange("k must be >= 1");
    if (l < 0) throw KOutOfRange("l must be >= 0");
    const int n = k + l;
    if (n > opts.max_n)
        throw InstanceTooLarge("k + l = " + std::to_string(n) + " exceeds limit " +
                               std::to_string(opts.max_n));
    if (k > RANK_MAX_K)
        throw InstanceTooLarge("exhaustive P(k,l) limited to k <= " +
                               std::to_string(RANK_MAX_K));

    const int workers = std::max(1, opts.worker_count);
    std::vector<std::uint64_t> best(workers, 0);

    // Partition S_n by first element; each worker enumerates its blocks with
    // next_permutation on the suffix.
    std::atomic<int> next_block{0};
    auto work = [&](int w) {
        DistinctCounter counter(n, k);
        std::vector<int> vals(n);
        while (true) {
            const int first = next_block.fetch_add(1) + 1;
            if (first > n) break;
            vals[0] = first;
            int fill = 1;
            for (int v = 1; v <= n; ++v)
                if (v != first) vals[fill++] = v;
            do {
                if (!host_is_orbit_minimal(vals)) continue;
                best[w] = std::max(best[w], counter.count(vals));
            } while (std::next_permutation(vals.begin() + 1, vals.end()));
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    const std::uint64_t p = *std::max_element(best.begin(), best.end());
    const auto total = static_cast<long long>(binomial_u64(n, k));
    boost::rational<long long> q(static_cast<long long>(p), total);
    return PQRecord{k, l, p, q.numerator(), q.denominator()};
}

}  // namespace patsep
