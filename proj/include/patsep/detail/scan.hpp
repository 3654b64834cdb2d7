#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace patsep::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// Incremental pattern codes.
//
// A k-selection is standardized by its stream of prefix ranks: digit j is
// the rank (0-based) of the j-th selected value among the values selected so
// far. Equal digit streams <=> equal patterns, and each digit depends only
// on the prefix, so the code is maintained in O(1) along a lexicographic
// selector DFS.
// ---------------------------------------------------------------------------

// Exact mixed-radix packing of the digit stream; bijective onto [0, k!-1],
// so it fits 64 bits for k <= 20. Distinct from the public Lehmer rank --
// this one exists for streaming, not for the PatternKey interface.
struct ExactCodePolicy {
    static constexpr bool exact = true;
    static std::uint64_t update(std::uint64_t code, int depth, int rank) {
        return code * static_cast<std::uint64_t>(depth + 1) +
               static_cast<std::uint64_t>(rank);
    }
};

// 63-bit rolling fingerprint of the digit stream, for k beyond the exact
// range. Collisions between distinct patterns are possible and must be
// resolved exactly by the caller; see separator.cpp.
struct FingerprintPolicy {
    static constexpr bool exact = false;
    static std::uint64_t update(std::uint64_t fp, int /*depth*/, int rank) {
        std::uint64_t x = fp ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(rank + 1));
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        return x ^ (x >> 27);
    }
};

// Rank tracker over values in [1, n], n <= 64.
class MaskRankTracker {
public:
    explicit MaskRankTracker(int /*n*/) {}
    static bool fits(int n) { return n <= 64; }
    int rank_below(int v) const {
        const std::uint64_t below = (v == 1) ? 0 : chosen_ & ((~0ull) >> (65 - v));
        return std::popcount(below);
    }
    void add(int v) { chosen_ |= 1ull << (v - 1); }
    void remove(int v) { chosen_ &= ~(1ull << (v - 1)); }

private:
    std::uint64_t chosen_ = 0;
};

// Fenwick-tree fallback for hosts longer than 64.
class FenwickRankTracker {
public:
    explicit FenwickRankTracker(int n) : tree_(n + 1, 0) {}
    int rank_below(int v) const {
        int s = 0;
        for (int i = v - 1; i > 0; i -= i & -i) s += tree_[i];
        return s;
    }
    void add(int v) { bump(v, 1); }
    void remove(int v) { bump(v, -1); }

private:
    void bump(int v, int d) {
        for (int i = v; i < static_cast<int>(tree_.size()); i += i & -i)
            tree_[i] += d;
    }
    std::vector<int> tree_;
};

// ---------------------------------------------------------------------------
// SubsetScanner: enumerates every k-subset of host positions in
// lexicographic selector order, carrying the incremental pattern code.
//
// Leaf signature: bool leaf(std::uint64_t key, const int* positions,
//                           const Tracker& chosen)
// positions are 1-based indices into host; return false to abort the scan.
// With AddLastAtLeaf the tracker contains all k selected values when the
// leaf fires (needed when the caller extends the selection); otherwise the
// last value is left out of the tracker, which is cheaper.
// ---------------------------------------------------------------------------
template <class KeyPolicy, class Tracker, bool AddLastAtLeaf, class Leaf>
class SubsetScanner {
public:
    SubsetScanner(const int* host_values, int host_len, int k, Leaf& leaf)
        : host_(host_values), n_(host_len), k_(k), leaf_(leaf),
          tracker_(host_len), positions_(k > 0 ? k : 1) {}

    // Returns false iff the leaf aborted. k = 0 fires a single empty leaf.
    bool run(std::uint64_t seed = 0) {
        if (k_ == 0) return leaf_(seed, positions_.data(), tracker_);
        return descend(0, 1, seed);
    }

private:
    bool descend(int depth, int min_pos, std::uint64_t code) {
        const int remaining = k_ - depth - 1;
        for (int p = min_pos; p + remaining <= n_; ++p) {
            const int v = host_[p - 1];
            const std::uint64_t next =
                KeyPolicy::update(code, depth, tracker_.rank_below(v));
            positions_[depth] = p;
            if (remaining == 0) {
                if constexpr (AddLastAtLeaf) {
                    tracker_.add(v);
                    const bool keep = leaf_(next, positions_.data(), tracker_);
                    tracker_.remove(v);
                    if (!keep) return false;
                } else {
                    if (!leaf_(next, positions_.data(), tracker_)) return false;
                }
            } else {
                tracker_.add(v);
                const bool keep = descend(depth + 1, p + 1, next);
                tracker_.remove(v);
                if (!keep) return false;
            }
        }
        return true;
    }

    const int* host_;
    int n_, k_;
    Leaf& leaf_;
    Tracker tracker_;
    std::vector<int> positions_;
};

template <class KeyPolicy, bool AddLastAtLeaf = false, class Leaf>
bool scan_subsets(const std::vector<int>& host, int k, Leaf&& leaf) {
    const int n = static_cast<int>(host.size());
    if (MaskRankTracker::fits(n)) {
        SubsetScanner<KeyPolicy, MaskRankTracker, AddLastAtLeaf, Leaf> s(
            host.data(), n, k, leaf);
        return s.run();
    }
    SubsetScanner<KeyPolicy, FenwickRankTracker, AddLastAtLeaf, Leaf> s(
        host.data(), n, k, leaf);
    return s.run();
}

}  // namespace patsep::detail
