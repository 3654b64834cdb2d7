#include "patsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "patsep/checkerboard.hpp"
#include "patsep/detail/scan.hpp"
#include "patsep/metrics.hpp"
#include "patsep/numeric.hpp"
#include "patsep/separator.hpp"

namespace patsep {

namespace {

// Duplicate index over the k-patterns contained in the current prefix.
// Dense byte table when k! is small, hash set otherwise. Deletion is exact
// (needed for backtracking), so keys must be exact codes, never
// fingerprints: search is limited to k <= RANK_MAX_K.
class PrefixPatternIndex {
public:
    explicit PrefixPatternIndex(int k) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= k; ++i) fact *= static_cast<std::uint64_t>(i);
        if (fact <= (1u << 24)) dense_.assign(static_cast<size_t>(fact), 0);
    }

    bool insert(std::uint64_t code) {
        if (!dense_.empty()) {
            if (dense_[code]) return false;
            dense_[code] = 1;
            return true;
        }
        return sparse_.insert(code).second;
    }

    void erase(std::uint64_t code) {
        if (!dense_.empty())
            dense_[code] = 0;
        else
            sparse_.erase(code);
    }

private:
    std::vector<char> dense_;
    std::unordered_set<std::uint64_t> sparse_;
};

struct SharedSearchState {
    std::atomic<std::uint64_t> job_cursor{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::uint64_t budget = UINT64_MAX;
    bool deterministic = true;

    std::mutex best_mutex;
    std::optional<std::vector<int>> best;  // lex-min witness found so far

    // Claims cand as the current best; with determinism only a lex smaller
    // candidate replaces it.
    void offer(std::vector<int> cand) {
        std::lock_guard<std::mutex> lock(best_mutex);
        if (!best || cand < *best) best = std::move(cand);
        if (!deterministic) stop.store(true, std::memory_order_relaxed);
    }

    bool prefix_can_improve(int v1, int v2) {
        if (!deterministic) return !stop.load(std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(best_mutex);
        if (!best) return true;
        const auto& b = *best;
        return v1 < b[0] || (v1 == b[0] && v2 <= b[1]);
    }
};

class SearchWorker {
public:
    SearchWorker(const SearchConfig& cfg, SharedSearchState& shared)
        : n_(cfg.n),
          k_(cfg.k),
          prune_distance_(cfg.prune_distance),
          shared_(shared),
          index_(cfg.k),
          prefix_(cfg.n) {}

    std::uint64_t local_nodes() const { return flushed_nodes_ + pending_nodes_; }

    // Runs the subtree rooted at the depth-2 prefix (v1, v2); n >= 2.
    void run_job(int v1, int v2) {
        if (!place(0, v1)) return;
        if (place(1, v2)) {
            descend(2);
            unplace(1, v2);
        }
        unplace(0, v1);
    }

    // Full single-rooted search for n == 1.
    void run_whole() {
        if (place(0, 1)) {
            descend(1);
            unplace(0, 1);
        }
    }

    void flush_nodes() {
        shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
        flushed_nodes_ += pending_nodes_;
        pending_nodes_ = 0;
    }

private:
    bool out_of_budget() {
        if (++pending_nodes_ >= 1024) {
            flush_nodes();
            if (shared_.nodes.load(std::memory_order_relaxed) > shared_.budget) {
                shared_.exhausted.store(true, std::memory_order_relaxed);
                shared_.stop.store(true, std::memory_order_relaxed);
            }
        }
        return shared_.stop.load(std::memory_order_relaxed);
    }

    // Places value v at position depth+1; on success the duplicate index
    // holds every k-selector inside the extended prefix. Rolls itself back
    // and returns false when a prune fires.
    bool place(int depth, int v) {
        if (out_of_budget()) return false;
        const int p = depth + 1;

        if (prune_distance_ && k_ < n_) {
            // weakened distance bound: both positions are final once placed
            const int base = n_ - k_ + 2;
            for (int q = p - 1; q >= 1; --q) {
                const int need = base - (p - q);
                if (need <= 0) break;
                if (std::abs(v - prefix_[q - 1]) < need) return false;
            }
        }

        journal_marks_.push_back(journal_.size());
        bool clash = false;
        if (p >= k_) {
            // insert every k-selector ending at position p
            auto leaf = [&](std::uint64_t code, const int*,
                            const detail::MaskRankTracker& chosen) {
                const std::uint64_t full =
                    detail::ExactCodePolicy::update(code, k_ - 1, chosen.rank_below(v));
                if (!index_.insert(full)) {
                    clash = true;
                    return false;
                }
                journal_.push_back(full);
                return true;
            };
            detail::SubsetScanner<detail::ExactCodePolicy, detail::MaskRankTracker,
                                  /*AddLastAtLeaf=*/true, decltype(leaf)>
                scanner(prefix_.data(), p - 1, k_ - 1, leaf);
            scanner.run();
        }
        if (clash) {
            rollback();
            return false;
        }
        prefix_[depth] = v;
        used_ |= 1ull << (v - 1);
        return true;
    }

    void unplace(int depth, int v) {
        used_ &= ~(1ull << (v - 1));
        (void)depth;
        rollback();
    }

    void rollback() {
        const size_t mark = journal_marks_.back();
        journal_marks_.pop_back();
        while (journal_.size() > mark) {
            index_.erase(journal_.back());
            journal_.pop_back();
        }
    }

    void descend(int depth) {
        if (depth == n_) {
            shared_.offer(prefix_);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_ & (1ull << (v - 1))) continue;
            if (place(depth, v)) {
                descend(depth + 1);
                unplace(depth, v);
            }
            if (shared_.stop.load(std::memory_order_relaxed)) return;
            if (shared_.deterministic && depth == 2) {
                // deeper subtrees cannot beat an already-found witness that
                // is lex-smaller than this subtree's root
            }
        }
    }

    int n_, k_;
    bool prune_distance_;
    SharedSearchState& shared_;
    PrefixPatternIndex index_;
    std::vector<int> prefix_;
    std::uint64_t used_ = 0;
    std::vector<std::uint64_t> journal_;
    std::vector<size_t> journal_marks_;
    std::uint64_t pending_nodes_ = 0;
    std::uint64_t flushed_nodes_ = 0;
};

void validate_config(const SearchConfig& cfg) {
    if (cfg.k < 1 || cfg.k > cfg.n)
        throw KOutOfRange("search requires 1 <= k <= n, got k = " +
                          std::to_string(cfg.k) + ", n = " + std::to_string(cfg.n));
    if (cfg.k > RANK_MAX_K)
        throw InfeasibleSize("search limited to k <= " + std::to_string(RANK_MAX_K));
    if (cfg.n > 64)
        throw InfeasibleSize("search limited to n <= 64");
    if (cfg.n > N_FEASIBLE_DEFAULT && !cfg.node_budget)
        throw InfeasibleSize("n = " + std::to_string(cfg.n) + " exceeds " +
                             std::to_string(N_FEASIBLE_DEFAULT) +
                             "; set a node budget to proceed");
}

}  // namespace

SearchResult run_separator_search(const SearchConfig& cfg) {
    validate_config(cfg);
    const auto start = std::chrono::steady_clock::now();

    SharedSearchState shared;
    shared.budget = cfg.node_budget.value_or(UINT64_MAX);
    shared.deterministic = cfg.deterministic;

    std::vector<std::pair<int, int>> jobs;
    if (cfg.n == 1) {
        jobs.push_back({1, 0});  // sentinel; handled by run_whole
    } else {
        const int first_max = cfg.symmetry_break ? (cfg.n + 1) / 2 : cfg.n;
        for (int v1 = 1; v1 <= first_max; ++v1)
            for (int v2 = 1; v2 <= cfg.n; ++v2)
                if (v2 != v1) jobs.push_back({v1, v2});
    }

    const int workers =
        std::max(1, std::min(cfg.worker_count, static_cast<int>(jobs.size())));

    auto work = [&]() {
        SearchWorker worker(cfg, shared);
        while (true) {
            const std::uint64_t j =
                shared.job_cursor.fetch_add(1, std::memory_order_relaxed);
            if (j >= jobs.size()) break;
            if (shared.stop.load(std::memory_order_relaxed) &&
                !shared.deterministic)
                break;
            auto [v1, v2] = jobs[j];
            if (cfg.n == 1) {
                worker.run_whole();
            } else {
                if (!shared.prefix_can_improve(v1, v2)) continue;
                worker.run_job(v1, v2);
            }
        }
        worker.flush_nodes();
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    SearchResult result;
    result.nodes_explored = shared.nodes.load();
    result.budget_exhausted =
        shared.exhausted.load() && !shared.best.has_value();
    if (shared.best) {
        Permutation witness = Permutation::from_one_line(*shared.best);
        // witnesses are re-verified before being returned
        if (!is_k_separator(witness, cfg.k).is_separator)
            throw std::logic_error("search produced a non-separator witness");
        result.witness = std::move(witness);
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

std::optional<Permutation> exists_separator(const SearchConfig& cfg) {
    SearchResult result = run_separator_search(cfg);
    if (result.budget_exhausted)
        throw BudgetExhausted("node budget exhausted after " +
                              std::to_string(result.nodes_explored) +
                              " prefixes without a conclusion");
    return result.witness;
}

EpsilonEntry exact_f(int k, const ExactFOptions& opts) {
    const BoundsRecord bounds = bounds_for(k);

    SearchConfig cfg;
    cfg.k = k;
    cfg.n = bounds.upper;
    cfg.worker_count = opts.worker_count;
    cfg.deterministic = opts.deterministic;
    cfg.node_budget = opts.node_budget;

    SearchResult at_upper = run_separator_search(cfg);
    if (at_upper.budget_exhausted)
        throw BudgetExhausted("budget exhausted searching S_" +
                              std::to_string(cfg.n) + " for k = " +
                              std::to_string(k));

    EpsilonEntry entry;
    entry.k = k;
    entry.nodes_explored = at_upper.nodes_explored;
    entry.seconds = at_upper.seconds;
    if (at_upper.witness) {
        entry.f_exact = bounds.upper;
        entry.epsilon = 0;
        entry.witness = *at_upper.witness;
    } else {
        // absence at upper plus the constructive lower bound pin F(k) = lower
        entry.f_exact = bounds.lower;
        entry.epsilon = -1;
        entry.witness = construct_separator(k, /*verify=*/true);
    }

    if (opts.audit) {
        SearchConfig audit_cfg = cfg;
        audit_cfg.n = bounds.upper + 1;
        SearchResult beyond = run_separator_search(audit_cfg);
        entry.nodes_explored += beyond.nodes_explored;
        entry.seconds += beyond.seconds;
        if (beyond.budget_exhausted)
            throw BudgetExhausted("budget exhausted during audit at n = " +
                                  std::to_string(audit_cfg.n));
        if (beyond.witness)
            throw TheoremFalsified(
                "found a k-separator of length upper + 1 = " +
                std::to_string(audit_cfg.n) + " for k = " + std::to_string(k) +
                ": " + beyond.witness->str());
    }
    return entry;
}

std::vector<EpsilonEntry> epsilon_table(int k_from, int k_to,
                                        const ExactFOptions& opts) {
    if (k_from < 2 || k_to < k_from)
        throw KTooSmall("epsilon table requires 2 <= k_from <= k_to");
    std::vector<EpsilonEntry> entries;
    for (int k = k_from; k <= k_to; ++k) entries.push_back(exact_f(k, opts));
    return entries;
}

void append_epsilon_csv(const std::string& path,
                        const std::vector<EpsilonEntry>& entries) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    const bool fresh = !fs::exists(p) || fs::file_size(p) == 0;
    std::ofstream out(p, std::ios::app);
    if (!out) throw Error("IoError", "cannot open " + path + " for append");
    if (fresh) out << "k,f_exact,epsilon,witness,nodes,seconds\n";
    for (const auto& e : entries) {
        out << e.k << ',' << e.f_exact << ',' << e.epsilon << ',' << e.witness.str()
            << ',' << e.nodes_explored << ',';
        std::ostringstream sec;
        sec.setf(std::ios::fixed);
        sec.precision(3);
        sec << e.seconds;
        out << sec.str() << '\n';
    }
}

}  // namespace patsep
