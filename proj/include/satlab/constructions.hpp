#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/systems.hpp"

namespace satlab {

/// Thrown when no graph with the requested properties exists; `reason` names
/// the exceptional case.
struct NonexistentError : std::runtime_error {
    std::string reason;
    explicit NonexistentError(const std::string& why)
        : std::runtime_error("no such graph: " + why), reason(why) {}
};

/// Thrown when a witness pipeline cannot meet its size constraints; `detail`
/// states the binding constraint.
struct InfeasibleError : std::runtime_error {
    std::string detail;
    explicit InfeasibleError(const std::string& why)
        : std::runtime_error("infeasible parameters: " + why), detail(why) {}
};

/// Binary sequences of length k, one bit pattern per entry. Bit (k-1-i) of a
/// mask holds position i, so ascending numeric order is lexicographic order
/// on the sequences.
struct ShatteringSet {
    int k = 0;
    std::vector<uint32_t> sequences;
};

/// True iff for every position pair {i,j} all four of 00/01/10/11 occur.
bool shatters_all_pairs(const ShatteringSet& s);

/// K_{r-2} fully joined to an independent set of size n-(r-2); the unique
/// minimum K_r-saturated graph. Edge count (r-2)n - C(r-1,2).
Graph ehm_graph(int n, int r);

/// Sporadic small graphs: "c5", "c7_complement", "c8_two_chords_complement"
/// (complement of C_8 plus chords {0,4},{1,5}), "wagner" (C_8 plus all four
/// diameters), "petersen".
Graph named_small(const std::string& name);

/// Minimum-style pair-shattering set: k=2 all four sequences, k=3 the
/// even-weight sequences, k >= 4 the even-weight sequences minus all-zeros.
/// With `size` given, pads to that size with lexicographically least unused
/// sequences (errors if below the base size or above 2^k).
ShatteringSet shattering_set(int k, std::optional<int> size = std::nullopt);

/// A twin-free K_r-saturated graph on n vertices. Throws NonexistentError for
/// the exceptional cases n = r, n = r+1, (r,n) = (3,6) and (3,7).
Graph twin_free_saturated(int n, int r);

/// The (3,t)'-system (H_{t,l}, F_{t,l}): t=2 near-balanced complete bipartite
/// minus a matching (matched pairs as sets); t=3 K_{l,l} minus a Hamilton
/// cycle (consecutive triples); t=4 a bipartite pair-square graph; t >= 5 a
/// cycle-indexed product graph, 2l(l-1)-regular with l^t sets.
/// Thresholds: l >= 2 (l >= 3 for t=3).
SystemInstance system_family(int t, int l);

/// lift of system_family(t,l): a (3,t+1)-system, maximal unless t=2 with l
/// odd (the flag is set accordingly and holds under check_maximal).
SystemInstance lifted_family(int t, int l);

/// Twin-free K_3-saturated graph on n vertices with minimum degree 6 and
/// 6n + O(n^{4/5}) edges: assembled from lifted_family(5, ceil(n^{1/5})) over
/// a subfamily of size n - 5l^2 - 1 that covers every missing host edge lying
/// inside some family set. Throws InfeasibleError when n is too small.
Graph tsat_upper_witness(int n);

/// Maximal (3,4)-system with |F| = s and Theta(s^{3/2}) host edges, built
/// from the point/pair incidence bipartite graph on the smallest l with
/// C(l,2) >= s.
SystemInstance e34_upper_witness(int s);

/// Maximal (3,5)-system with |F| = s over the t=4 lifted host for the
/// smallest adequate l; the subfamily covers every missing host edge whose
/// addition keeps the host triangle-free.
SystemInstance e35_upper_witness(int s);

/// K_r-saturated graph on n vertices with min degree >= t in which every
/// twin pair has a common neighbor of degree exactly t. Built by coning a
/// lifted family, cleaning it up, selecting a quota-respecting subfamily,
/// re-maximalizing and assembling. Requires t >= r+3.
Graph tsat_min_deg_upper_witness(int n, int r, int t);

}  // namespace satlab
