#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/systems.hpp"

namespace satlab {

struct EnumerationBudget {
    int max_vertices = 9;
    /// Higher cap when a monotone filter (e.g. clique-freeness) prunes the
    /// enumeration tree.
    int max_vertices_filtered = 12;
    long long max_clique_nodes = 10'000'000;
    double wall_seconds = 600.0;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Outcome of one extremal computation. status "nonexistent" means the full
/// search space was exhausted with no witness; "budget_exceeded" means the
/// answer is unknown — the two are never conflated.
struct ExtremalRecord {
    std::string kind;
    std::vector<std::pair<std::string, long long>> params;
    std::optional<long long> value;
    std::string status = "ok";  // ok | nonexistent | budget_exceeded
    std::string method = "exhaustive";
    std::optional<Graph> witness_graph;
    std::optional<SystemInstance> witness_system;
    long long budget_spent = 0;
};

/// One representative per isomorphism class on n vertices, by orderly
/// generation (extend (n-1)-vertex classes by one vertex, dedup by canonical
/// form). `monotone_filter` must be closed under taking induced subgraphs on
/// initial segments; it prunes whole branches. Throws BudgetExceeded when n
/// is over the cap.
std::vector<Graph> enumerate_graphs(int n,
                                    const std::function<bool(const Graph&)>& monotone_filter = {},
                                    const EnumerationBudget& budget = {});

/// Minimum edges of a K_r-saturated graph on n vertices.
ExtremalRecord sat_min(int n, int r, const EnumerationBudget& budget = {});

/// Twin-free variant; with t set, the minimum-degree-t variant (min degree
/// >= t and every twin pair has a common neighbor of degree exactly t).
ExtremalRecord tsat_min(int n, int r, std::optional<int> t = std::nullopt,
                        const EnumerationBudget& budget = {});

/// Maximum family size over (r,t)-systems with |H| = m.
ExtremalRecord s_rt(int m, int r, int t, const EnumerationBudget& budget = {});

/// Maximum family size over (3,t)'-systems with |H| = m.
ExtremalRecord s3t_prime(int m, int t, const EnumerationBudget& budget = {});

/// Minimum host edges over ((maximal) when require_maximal) (r,t)-systems
/// with |F| = s.
ExtremalRecord e_rt(int s, int r, int t, bool require_maximal,
                    const EnumerationBudget& budget = {});

/// Minimum host edges over (3,t)'-systems with |F| = s.
ExtremalRecord e3t_doubleprime(int s, int t, const EnumerationBudget& budget = {});

/// Minimum size of a pair-shattering subset of {0,1}^k; exhaustive for
/// k in {2,3,4}.
ExtremalRecord m_shatter(int k);

/// Classification of every enumerated (3,3)-system with full vertex coverage
/// against the lifted matching construction, bucketed by family size.
struct StabilityBucket {
    long long family_size = 0;
    long long total = 0;
    long long matching = 0;
};
struct StabilityReport {
    int max_host_vertices = 0;
    long long systems_checked = 0;
    std::vector<StabilityBucket> buckets;
    /// Least family size from which every checked system matches (absent when
    /// even the largest bucket has a mismatch).
    std::optional<long long> stable_threshold;
};
StabilityReport classify_33_systems(int max_host_vertices, const EnumerationBudget& budget = {});

/// All t-subsets S of the host with H[S] K_{r-1}-free and every outside
/// vertex completing a K_{r-1} into S; the candidate pool for family search.
std::vector<std::vector<int>> maximally_free_subsets(const Graph& host, int r, int t);

}  // namespace satlab
