#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patsep/permutation.hpp"

namespace patsep {

// Default ceiling on n for exhaustive separator search.
inline constexpr int N_FEASIBLE_DEFAULT = 12;

struct SearchConfig {
    int k = 2;
    int n = 2;
    bool prune_distance = true;   // Eq-style weakened bound d >= (n-k+2) - |i-j|
    bool symmetry_break = true;   // restrict sigma_1 <= ceil(n/2)
    bool deterministic = true;    // return the lexicographically smallest witness
    int worker_count = 1;
    std::optional<std::uint64_t> node_budget;  // cap on explored prefixes
};

// Low-level outcome; budget exhaustion is reported, not thrown.
struct SearchResult {
    std::optional<Permutation> witness;
    std::uint64_t nodes_explored = 0;  // prefixes entered
    double seconds = 0;
    bool budget_exhausted = false;  // true -> absence is NOT certified
};

SearchResult run_separator_search(const SearchConfig& cfg);

// A permutation sigma in S_n with is_k_separator(sigma, k), or nullopt if
// none exists (certified by exhausting the symmetry-reduced prefix tree).
// Throws BudgetExhausted when the node budget ran out inconclusively and
// InfeasibleSize when n exceeds the feasibility ceiling without a budget.
std::optional<Permutation> exists_separator(const SearchConfig& cfg);

// One row of the exact F(k) table.
struct EpsilonEntry {
    int k = 0;
    int f_exact = 0;
    int epsilon = 0;  // f_exact - (k + floor(sqrt(2k-3))), in {-1, 0}
    Permutation witness = Permutation::identity(1);
    std::uint64_t nodes_explored = 0;
    double seconds = 0;
};

struct ExactFOptions {
    bool audit = false;  // additionally certify absence at n = upper + 1
    int worker_count = 1;
    bool deterministic = true;
    std::optional<std::uint64_t> node_budget;
};

// Searches n = upper from bounds_for(k); a hit pins F(k) = upper (epsilon
// 0), a certified miss pins F(k) = lower with the checkerboard construction
// as witness (epsilon -1). An audit hit at upper + 1 would falsify the
// theorem window and throws TheoremFalsified.
EpsilonEntry exact_f(int k, const ExactFOptions& opts = {});

std::vector<EpsilonEntry> epsilon_table(int k_from, int k_to,
                                        const ExactFOptions& opts = {});

// Appends entries as CSV rows (k,f_exact,epsilon,witness,nodes,seconds),
// writing a header first when the file is new or empty.
void append_epsilon_csv(const std::string& path,
                        const std::vector<EpsilonEntry>& entries);

}  // namespace patsep
