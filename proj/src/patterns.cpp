#include "patsep/patterns.hpp"

#include <algorithm>
#include <numeric>

namespace patsep {

Permutation standardize(const std::vector<int>& values) {
    const int k = static_cast<int>(values.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> word(k);
    for (int r = 0; r < k; ++r) word[order[r]] = r + 1;
    return Permutation::from_one_line(std::move(word));
}

PatternKey pattern_of(const Permutation& sigma, const Selector& sel) {
    validate_selector(sel, sigma.size());
    std::vector<int> values;
    values.reserve(sel.indices.size());
    for (int p : sel.indices) values.push_back(sigma.one_line()[p - 1]);
    Permutation word = standardize(values);
    const int k = word.size();
    std::optional<std::uint64_t> rank;
    if (k <= RANK_MAX_K) rank = pattern_rank(word);
    return PatternKey{k, std::move(word), rank};
}

std::uint64_t pattern_rank(const Permutation& word) {
    const int k = word.size();
    if (k > RANK_MAX_K)
        throw LengthTooLargeForRank("rank undefined for k = " + std::to_string(k) +
                                    " > " + std::to_string(RANK_MAX_K));
    const auto& w = word.one_line();
    std::uint64_t rank = 0;
    std::uint64_t place = 1;
    // rank = sum_j L_j * (k-1-j)! with L_j = #{j' > j : w_j' < w_j}
    for (int j = k - 2; j >= 0; --j) {
        int lehmer = 0;
        for (int t = j + 1; t < k; ++t)
            if (w[t] < w[j]) ++lehmer;
        place *= static_cast<std::uint64_t>(k - 1 - j);
        rank += lehmer * place;
    }
    return rank;
}

Permutation pattern_unrank(std::uint64_t rank, int k) {
    if (k < 1) throw EmptyInput("pattern length must be >= 1");
    if (k > RANK_MAX_K)
        throw LengthTooLargeForRank("rank undefined for k = " + std::to_string(k) +
                                    " > " + std::to_string(RANK_MAX_K));
    std::vector<std::uint64_t> fact(k);
    fact[0] = 1;
    for (int i = 1; i < k; ++i) fact[i] = fact[i - 1] * i;

    std::vector<int> remaining(k);
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> word;
    word.reserve(k);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t f = fact[k - 1 - j];
        const int digit = static_cast<int>(rank / f);
        rank %= f;
        if (digit >= static_cast<int>(remaining.size()))
            throw NotABijection("rank out of range for S_" + std::to_string(k));
        word.push_back(remaining[digit]);
        remaining.erase(remaining.begin() + digit);
    }
    return Permutation::from_one_line(std::move(word));
}

bool pattern_isomorphic(const Permutation& sigma, const Selector& s1,
                        const Selector& s2) {
    if (s1.length() != s2.length())
        throw MismatchedLengths("selectors of length " + std::to_string(s1.length()) +
                                " and " + std::to_string(s2.length()));
    return pattern_of(sigma, s1) == pattern_of(sigma, s2);
}

namespace detail {

std::vector<int> prefix_rank_digits(const Permutation& pi) {
    const auto& w = pi.one_line();
    const int k = pi.size();
    std::vector<int> digits(k);
    for (int t = 0; t < k; ++t) {
        int r = 0;
        for (int s = 0; s < t; ++s)
            if (w[s] < w[t]) ++r;
        digits[t] = r;
    }
    return digits;
}

}  // namespace detail

std::vector<Selector> occurrences_list(const Permutation& sigma,
                                       const Permutation& pi) {
    std::vector<Selector> out;
    for_each_occurrence(sigma, pi, [&](const Selector& sel) {
        out.push_back(sel);
        return true;
    });
    return out;
}

std::uint64_t count_occurrences(const Permutation& sigma, const Permutation& pi) {
    return for_each_occurrence(sigma, pi, [](const Selector&) { return true; });
}

const char* symmetry_name(Symmetry op) {
    switch (op) {
        case Symmetry::identity: return "identity";
        case Symmetry::reverse: return "reverse";
        case Symmetry::complement: return "complement";
        case Symmetry::reverse_complement: return "reverse_complement";
        case Symmetry::inverse: return "inverse";
        case Symmetry::inverse_reverse: return "inverse_reverse";
        case Symmetry::inverse_complement: return "inverse_complement";
        case Symmetry::inverse_reverse_complement: return "inverse_reverse_complement";
    }
    return "?";
}

Symmetry symmetry_inverse(Symmetry op) {
    // reverse o inverse and complement o inverse are the two 4-cycles;
    // everything else is an involution.
    switch (op) {
        case Symmetry::inverse_reverse: return Symmetry::inverse_complement;
        case Symmetry::inverse_complement: return Symmetry::inverse_reverse;
        default: return op;
    }
}

namespace {

std::vector<int> reverse_of(const std::vector<int>& v) {
    return std::vector<int>(v.rbegin(), v.rend());
}

std::vector<int> complement_of(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = n + 1 - v[i];
    return out;
}

std::vector<int> inverse_of(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[v[i] - 1] = i + 1;
    return out;
}

}  // namespace

Permutation symmetry_image(const Permutation& sigma, Symmetry op) {
    const auto& v = sigma.one_line();
    std::vector<int> out;
    switch (op) {
        case Symmetry::identity: out = v; break;
        case Symmetry::reverse: out = reverse_of(v); break;
        case Symmetry::complement: out = complement_of(v); break;
        case Symmetry::reverse_complement: out = complement_of(reverse_of(v)); break;
        case Symmetry::inverse: out = inverse_of(v); break;
        case Symmetry::inverse_reverse: out = reverse_of(inverse_of(v)); break;
        case Symmetry::inverse_complement: out = complement_of(inverse_of(v)); break;
        case Symmetry::inverse_reverse_complement:
            out = complement_of(reverse_of(inverse_of(v)));
            break;
    }
    return Permutation::from_one_line(std::move(out));
}

bool is_orbit_minimal(const Permutation& sigma) {
    for (Symmetry op : all_symmetries) {
        if (op == Symmetry::identity) continue;
        if (symmetry_image(sigma, op) < sigma) return false;
    }
    return true;
}

}  // namespace patsep
