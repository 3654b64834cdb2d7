#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "patsep/errors.hpp"

namespace patsep {

// A permutation of [n] in one-line notation, sigma = sigma_1 ... sigma_n.
// Positions and values are 1-based at every interface; internal storage is
// 0-based and never leaks. Immutable after construction.
class Permutation {
public:
    // Validates that `values` is a bijection [n] -> [n].
    static Permutation from_one_line(std::vector<int> values);

    static Permutation identity(int n);

    // Parses the repo text format: whitespace- or comma-separated 1-based
    // integers ("2 4 1 3", "2,4,1,3"), or a compact digit string ("2413")
    // when it is a single token of two or more digits in 1..9.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(vals_.size()); }

    // sigma(pos), pos in [1, n].
    int value_at(int pos) const {
        if (pos < 1 || pos > size())
            throw PositionOutOfRange("position " + std::to_string(pos) +
                                     " not in [1, " + std::to_string(size()) + "]");
        return vals_[pos - 1];
    }

    // sigma^{-1}(value), value in [1, n].
    int position_of(int value) const {
        if (value < 1 || value > size())
            throw ValueOutOfRange("value " + std::to_string(value) +
                                  " not in [1, " + std::to_string(size()) + "]");
        return inv_[value - 1];
    }

    // One-line notation; element i (0-based) is the 1-based value at
    // position i+1.
    const std::vector<int>& one_line() const { return vals_; }

    bool operator==(const Permutation& rhs) const { return vals_ == rhs.vals_; }
    bool operator!=(const Permutation& rhs) const { return vals_ != rhs.vals_; }
    bool operator<(const Permutation& rhs) const { return vals_ < rhs.vals_; }

    // Space-separated one-line notation, e.g. "2 4 1 3".
    std::string str() const;

private:
    explicit Permutation(std::vector<int> vals);

    std::vector<int> vals_;  // vals_[p-1] = sigma(p)
    std::vector<int> inv_;   // inv_[v-1]  = sigma^{-1}(v)
};

// A k-tuple of strictly increasing positions (a_1, ..., a_k), identifying a
// restriction of a host permutation.
struct Selector {
    std::vector<int> indices;  // 1-based, strictly increasing

    int length() const { return static_cast<int>(indices.size()); }
    bool operator==(const Selector& rhs) const { return indices == rhs.indices; }
    bool operator<(const Selector& rhs) const { return indices < rhs.indices; }
    std::string str() const;
};

// Throws SelectorOutOfRange unless 1 <= i_1 < ... < i_k <= n.
void validate_selector(const Selector& sel, int n);

}  // namespace patsep
