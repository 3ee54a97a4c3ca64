#pragma once

#include <optional>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

struct SaturationReport {
    bool is_free = false;
    bool is_saturated = false;
    /// A missing edge whose addition creates no K_r (present iff free but
    /// not saturated).
    std::optional<Edge> violating_pair;
    /// A K_r in G (present iff not free).
    std::vector<int> clique_witness;
};

/// Checks K_r-freeness and K_r-saturation. Throws std::invalid_argument for
/// r < 3.
SaturationReport saturation_report(const Graph& g, int r);

bool is_saturated(const Graph& g, int r);

/// Greedy completion: adds missing edges in lexicographic (u,v) order
/// whenever the addition keeps the graph K_r-free. Throws if G already
/// contains a K_r.
Graph saturate(const Graph& g, int r);

/// True iff G is K_r-saturated, delta(G) >= t, and every twin pair has a
/// common neighbor of degree exactly t. With t unset: the twin-free variant
/// (G K_r-saturated and twin-free).
bool is_tsat_witness(const Graph& g, int r, std::optional<int> t);

}  // namespace satlab
