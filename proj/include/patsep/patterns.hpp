#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "patsep/permutation.hpp"

namespace patsep {

// Largest k for which pattern ranks fit an unsigned 64-bit integer
// (20! < 2^62). Beyond this the standardized word itself is the key.
inline constexpr int RANK_MAX_K = 20;

// Canonical identifier of a length-k pattern: the standardized word, plus
// its Lehmer-code rank when k <= RANK_MAX_K.
struct PatternKey {
    int k;
    Permutation word;
    std::optional<std::uint64_t> rank;

    bool operator==(const PatternKey& rhs) const { return word == rhs.word; }
    bool operator!=(const PatternKey& rhs) const { return !(*this == rhs); }
};

// Standardization of the restriction sigma|sel: word[j] is the rank of
// sigma(sel_j) among the selected values.
PatternKey pattern_of(const Permutation& sigma, const Selector& sel);

// Standardizes an arbitrary sequence of distinct integers.
Permutation standardize(const std::vector<int>& values);

// Lehmer-code mixed-radix rank, a bijection S_k -> [0, k!-1].
std::uint64_t pattern_rank(const Permutation& word);
Permutation pattern_unrank(std::uint64_t rank, int k);

// The relation ~ : true iff both restrictions realize the same pattern.
bool pattern_isomorphic(const Permutation& sigma, const Selector& s1,
                        const Selector& s2);

// ---------------------------------------------------------------------------
// Occurrence enumeration.
//
// Visits, in lexicographic selector order, every selector whose pattern
// equals pi. DFS over positions with per-prefix rank pruning: a partial
// selection survives iff it is pattern-isomorphic to the corresponding
// prefix of pi, so each extension costs O(1) sign bookkeeping via the
// running rank of the new value among the already-selected ones.
// ---------------------------------------------------------------------------

namespace detail {

// prefix_digits[t] = rank (0-based) of pi_{t+1} among {pi_1, ..., pi_{t+1}}.
std::vector<int> prefix_rank_digits(const Permutation& pi);

template <typename Visit>
class OccurrenceScan {
public:
    OccurrenceScan(const Permutation& sigma, const Permutation& pi, Visit& visit)
        : host_(sigma.one_line()),
          digits_(prefix_rank_digits(pi)),
          n_(sigma.size()),
          k_(pi.size()),
          visit_(visit),
          stack_(k_),
          chosen_(n_, 0) {}

    // Returns false if the visitor aborted the scan.
    bool run() { return descend(0, 1); }

    std::uint64_t visited() const { return visited_; }

private:
    bool descend(int depth, int min_pos) {
        const int remaining = k_ - depth - 1;
        for (int p = min_pos; p + remaining <= n_; ++p) {
            const int v = host_[p - 1];
            if (rank_below(v) != digits_[depth]) continue;
            stack_[depth] = p;
            if (remaining == 0) {
                ++visited_;
                if (!visit_(Selector{stack_})) return false;
            } else {
                add(v);
                const bool keep_going = descend(depth + 1, p + 1);
                remove(v);
                if (!keep_going) return false;
            }
        }
        return true;
    }

    int rank_below(int v) const {
        int r = 0;
        for (int w = 0; w < v - 1; ++w)
            if (chosen_[w]) ++r;
        return r;
    }

    void add(int v) { chosen_[v - 1] = 1; }
    void remove(int v) { chosen_[v - 1] = 0; }

    const std::vector<int>& host_;
    std::vector<int> digits_;
    int n_, k_;
    Visit& visit_;
    std::vector<int> stack_;
    std::vector<char> chosen_;
    std::uint64_t visited_ = 0;
};

}  // namespace detail

// Streams the selectors realizing pi inside sigma, lexicographically.
// `visit(const Selector&) -> bool`; return false to stop early. Returns the
// number of selectors visited.
template <typename Visit>
std::uint64_t for_each_occurrence(const Permutation& sigma, const Permutation& pi,
                                  Visit visit) {
    if (pi.size() > sigma.size())
        throw PatternLongerThanHost("pattern length " + std::to_string(pi.size()) +
                                    " exceeds host length " +
                                    std::to_string(sigma.size()));
    detail::OccurrenceScan<Visit> scan(sigma, pi, visit);
    scan.run();
    return scan.visited();
}

std::vector<Selector> occurrences_list(const Permutation& sigma,
                                       const Permutation& pi);
std::uint64_t count_occurrences(const Permutation& sigma, const Permutation& pi);

// ---------------------------------------------------------------------------
// The 8 dihedral symmetries. reverse flips positions, complement flips
// values, inverse transposes the permutation matrix; together they generate
// a dihedral group of order 8. All preserve the separator property.
// ---------------------------------------------------------------------------

enum class Symmetry {
    identity,
    reverse,
    complement,
    reverse_complement,
    inverse,
    inverse_reverse,             // reverse(inverse(sigma))
    inverse_complement,          // complement(inverse(sigma))
    inverse_reverse_complement,  // reverse_complement(inverse(sigma))
};

inline constexpr std::array<Symmetry, 8> all_symmetries = {
    Symmetry::identity,
    Symmetry::reverse,
    Symmetry::complement,
    Symmetry::reverse_complement,
    Symmetry::inverse,
    Symmetry::inverse_reverse,
    Symmetry::inverse_complement,
    Symmetry::inverse_reverse_complement,
};

const char* symmetry_name(Symmetry op);

// Group inverse: g^-1 with symmetry_image(symmetry_image(s, g), g^-1) == s.
Symmetry symmetry_inverse(Symmetry op);

Permutation symmetry_image(const Permutation& sigma, Symmetry op);

// True iff sigma is the lexicographic minimum of its 8-element orbit.
bool is_orbit_minimal(const Permutation& sigma);

}  // namespace patsep
