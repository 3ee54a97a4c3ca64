#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

/// Ordered family of vertex subsets over a host graph, with per-set positive
/// multiplicities. An empty `mults` means multiplicity 1 throughout.
struct VertexSetFamily {
    std::vector<std::vector<int>> sets;
    std::vector<int> mults;

    int mult(size_t i) const { return mults.empty() ? 1 : mults[i]; }
    long long total_instances() const {
        if (mults.empty()) return static_cast<long long>(sets.size());
        long long s = 0;
        for (int m : mults) s += m;
        return s;
    }
};

/// A host graph together with a set family and the parameters it claims to
/// satisfy. `primed` marks the r=3 variant that drops the pairwise
/// intersection condition; `maximal` is a claim checked by check_maximal.
struct SystemInstance {
    Graph host;
    VertexSetFamily family;
    int r = 3;
    std::optional<int> t;
    bool primed = false;
    bool maximal = false;
};

/// Condition-by-condition verdict. `bad_set` / `bad_pair` identify the first
/// counterexample (indices into family.sets); `bad_outside_vertex` is the
/// host vertex whose addition to sets[bad_set] creates no K_{r-1}, or -1 when
/// the set itself already contains one.
struct SystemReport {
    bool host_free = false;
    std::vector<int> host_clique;
    bool sets_ok = false;
    int bad_set = -1;
    int bad_outside_vertex = -1;
    bool pairwise_ok = false;
    std::pair<int, int> bad_pair{-1, -1};
    bool shape_ok = false;
    std::string shape_error;

    bool valid() const { return host_free && sets_ok && pairwise_ok && shape_ok; }
};

struct MaximalityReport {
    bool maximal = false;
    std::optional<Edge> violating_edge;
};

/// Validates the four structural conditions: host K_r-free; each set
/// maximally K_{r-1}-free; unless primed, every pair of family instances
/// meets in a K_{r-2}; with t set, uniform size t and no repeated sets.
/// Throws std::invalid_argument for r < 3, t < r-2, primed with r != 3, or a
/// malformed family (element out of range / duplicated, bad multiplicity).
SystemReport check_system(const SystemInstance& inst);

/// Every missing host edge e must create a K_r in H+e or a K_{r-1} in some
/// (H+e)[S]. Throws if check_system rejects the instance.
MaximalityReport check_maximal(const SystemInstance& inst);

/// Membership counts s(v) = number of family instances containing v.
std::vector<long long> membership_counts(int n, const VertexSetFamily& fam);

/// Host plus one fresh vertex per family instance, adjacent exactly to its
/// set. Instance vertices come after the host block, in family order.
Graph assemble(const Graph& host, const VertexSetFamily& fam);

/// Inverse of assemble for a vertex cover C: host = G[C] and the family is
/// the neighborhoods of vertices outside C, equal neighborhoods merged into
/// multiplicities. Throws with the uncovered edge if C is not a cover.
std::pair<Graph, VertexSetFamily> decompose(const Graph& g, const std::vector<int>& cover);

/// Adds an isolated host vertex and inserts it into every set, turning a
/// (3,t)'-system into a (3,t+1)-system. The maximality claim is reset.
SystemInstance lift(const SystemInstance& inst);

/// Inverse of lift at v: host induced on the non-neighbors of v (v excluded),
/// family = { S - v : v in S }. Throws on a vertex out of range.
SystemInstance restrict_at(const SystemInstance& inst, int v);

/// Cones the host with s universal vertices and adds them to every set:
/// (r,t)-system -> (r+s, t+s)-system, maximality preserved. Rejects primed
/// instances when s > 0.
SystemInstance cone_system(const SystemInstance& inst, int s);

/// Adds missing host edges in lexicographic order whenever the addition keeps
/// the host K_r-free and every H[S] K_{r-1}-free. The result passes
/// check_maximal. Throws if the input fails check_system.
SystemInstance maximalize(const SystemInstance& inst);

/// One vertex-removal step on a maximal system: if the host has twins v != w
/// both in no set, drop one; otherwise if some v has d(v) + s(v) <= t, drop v
/// together with its sets and re-maximalize. Throws (std::invalid_argument)
/// when neither reduction applies or t is unset.
SystemInstance cleanup_step(const SystemInstance& inst);

/// True iff a cleanup_step reduction applies.
bool cleanup_applicable(const SystemInstance& inst);

}  // namespace satlab
