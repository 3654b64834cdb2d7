#pragma once

#include <cstdint>
#include <vector>

#include "patsep/detail/scan.hpp"

namespace patsep {

// Open-addressing set of 64-bit pattern keys, sized for streams of 10^8
// insertions. Slots store key+1 so 0 can mark empty; keys must therefore
// stay below 2^64-1 (exact codes are < 20! and fingerprints are masked to
// 63 bits). Grows by doubling at 70% load.
class FlatKeySet {
public:
    FlatKeySet() { rehash(1u << 10); }

    // Sizes the table for `expected` keys up front (allocation is capped at
    // 2^28 slots; growth handles anything beyond).
    void reserve(std::uint64_t expected) {
        const std::uint64_t capped = std::min(expected, 1ull << 40);
        std::uint64_t want = 1u << 10;
        while (want < (1ull << 28) && want * 7 < capped * 10) want <<= 1;
        if (want > slots_.size()) rehash(want);
    }

    // True iff the key was newly inserted.
    bool insert_and_test(std::uint64_t key) {
        const std::uint64_t stored = key + 1;
        std::uint64_t i = detail::splitmix64(key) & mask_;
        while (true) {
            const std::uint64_t s = slots_[i];
            if (s == 0) {
                slots_[i] = stored;
                if (++size_ * 10 > slots_.size() * 7) grow();
                return true;
            }
            if (s == stored) return false;
            i = (i + 1) & mask_;
        }
    }

    bool contains(std::uint64_t key) const {
        const std::uint64_t stored = key + 1;
        std::uint64_t i = detail::splitmix64(key) & mask_;
        while (true) {
            const std::uint64_t s = slots_[i];
            if (s == 0) return false;
            if (s == stored) return true;
            i = (i + 1) & mask_;
        }
    }

    std::uint64_t size() const { return size_; }

    void clear() {
        std::fill(slots_.begin(), slots_.end(), 0);
        size_ = 0;
    }

private:
    void grow() { rehash(slots_.size() * 2); }

    void rehash(std::uint64_t capacity) {
        std::vector<std::uint64_t> old;
        old.swap(slots_);
        slots_.assign(capacity, 0);
        mask_ = capacity - 1;
        for (std::uint64_t s : old) {
            if (s == 0) continue;
            std::uint64_t i = detail::splitmix64(s - 1) & mask_;
            while (slots_[i] != 0) i = (i + 1) & mask_;
            slots_[i] = s;
        }
    }

    std::vector<std::uint64_t> slots_;
    std::uint64_t mask_ = 0;
    std::uint64_t size_ = 0;
};

}  // namespace patsep
