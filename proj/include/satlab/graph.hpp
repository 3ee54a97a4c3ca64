#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace satlab {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with adjacency
/// stored as fixed-width bit rows.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse.
    /// Throws std::invalid_argument on an out-of-range endpoint or a loop.
    Graph(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    long long edge_count() const { return edge_count_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    std::span<const uint64_t> row_span(int v) const { return {row(v), static_cast<size_t>(words_)}; }

    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;

    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;
    std::vector<Edge> missing_edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<uint64_t> bits_;
};

/// Mutable staging area; every public Graph value is built through one of
/// these and then frozen.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int size() const { return n_; }
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    Graph build() const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Per-vertex positive copy counts for a blow-up.
struct BlowUpSpec {
    std::vector<int> multiplicities;
};

/// Partition of the vertices into maximal classes with identical open
/// neighborhoods.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
    bool all_singletons() const;
};

Graph make_graph(int n, const std::vector<Edge>& edges);

/// True iff G contains k pairwise-adjacent vertices (k <= 1: true iff n >= k).
bool contains_clique(const Graph& g, int k);

/// A k-clique of G, or empty if none.
std::vector<int> find_clique(const Graph& g, int k);

/// True iff the vertices of `verts` restricted by `mask_words` contain a
/// k-clique of G. `cand` is a bit row over G's vertices.
bool clique_in_subset(const Graph& g, const uint64_t* cand, int k);

TwinPartition twin_partition(const Graph& g);
bool is_twin_free(const Graph& g);

Graph blow_up(const Graph& g, const BlowUpSpec& spec);

/// Quotient on twin classes; blow_up(H, spec) is isomorphic to G and H is
/// twin-free whenever G is not a proper blow-up edge case.
std::pair<Graph, BlowUpSpec> twin_quotient(const Graph& g);

/// Adds s vertices adjacent to everything (including each other).
Graph cone(const Graph& g, int s);

Graph complement(const Graph& g);

/// Subgraph induced on S, relabeled to 0..|S|-1 preserving order.
Graph induced(const Graph& g, const std::vector<int>& s);

}  // namespace satlab
