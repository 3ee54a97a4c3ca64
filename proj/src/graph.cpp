#include "satlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace satlab {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

}  // namespace

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.size()), words_(g.words_per_row()) {
    bits_.assign(g.row(0), g.row(0) + static_cast<size_t>(n_) * words_);
    if (n_ == 0) bits_.clear();
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("loop rejected: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void GraphBuilder::remove_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = bits_;
    long long total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    g.edge_count_ = total / 2;
    return g;
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    *this = b.build();
}

int Graph::degree(int v) const {
    const uint64_t* r = row(v);
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
    return d;
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        if (v == 0 || d < best) best = d;
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int i = 0; i < words_; ++i) {
        uint64_t w = r[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::missing_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

bool TwinPartition::all_singletons() const {
    for (const auto& c : classes)
        if (c.size() > 1) return false;
    return true;
}

namespace {

// Backtracking clique search over a candidate bit row. `need` more vertices
// wanted from `cand`; picks the vertex of highest degree within cand as a
// crude pivot order.
bool clique_search(const Graph& g, std::vector<uint64_t>& cand, int need,
                   std::vector<int>* witness) {
    if (need == 0) return true;
    int w = g.words_per_row();
    int count = 0;
    for (int i = 0; i < w; ++i) count += std::popcount(cand[i]);
    if (count < need) return false;
    // Branch on each candidate vertex in increasing order; restrict to later
    // vertices to avoid revisiting unordered subsets.
    std::vector<uint64_t> next(w);
    for (int i = 0; i < w; ++i) {
        uint64_t word = cand[i];
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            int v = i * 64 + b;
            const uint64_t* rv = g.row(v);
            for (int j = 0; j < w; ++j) next[j] = cand[j] & rv[j];
            // Drop v and everything before it from the branch candidates.
            for (int j = 0; j < i; ++j) next[j] = 0;
            next[i] &= ~((uint64_t{2} << b) - 1);
            if (witness) witness->push_back(v);
            if (clique_search(g, next, need - 1, witness)) return true;
            if (witness) witness->pop_back();
        }
    }
    return false;
}

std::vector<uint64_t> full_row(const Graph& g) {
    int n = g.size(), w = g.words_per_row();
    std::vector<uint64_t> all(w, ~uint64_t{0});
    if (n % 64 != 0 && w > 0) all[w - 1] = (uint64_t{1} << (n % 64)) - 1;
    return all;
}

}  // namespace

bool contains_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k == 1) return g.size() >= 1;
    auto cand = full_row(g);
    return clique_search(g, cand, k, nullptr);
}

std::vector<int> find_clique(const Graph& g, int k) {
    std::vector<int> witness;
    if (k <= 0) return witness;
    if (k == 1) {
        if (g.size() >= 1) witness.push_back(0);
        return witness;
    }
    auto cand = full_row(g);
    if (!clique_search(g, cand, k, &witness)) witness.clear();
    return witness;
}

bool clique_in_subset(const Graph& g, const uint64_t* cand, int k) {
    if (k <= 0) return true;
    std::vector<uint64_t> c(cand, cand + g.words_per_row());
    if (k == 1) {
        for (int i = 0; i < g.words_per_row(); ++i)
            if (c[i]) return true;
        return false;
    }
    return clique_search(g, c, k, nullptr);
}

TwinPartition twin_partition(const Graph& g) {
    std::unordered_map<std::string, int> seen;
    TwinPartition part;
    for (int v = 0; v < g.size(); ++v) {
        std::string key(reinterpret_cast<const char*>(g.row(v)),
                        static_cast<size_t>(g.words_per_row()) * 8);
        auto [it, inserted] = seen.try_emplace(key, static_cast<int>(part.classes.size()));
        if (inserted)
            part.classes.push_back({v});
        else
            part.classes[it->second].push_back(v);
    }
    return part;
}

bool is_twin_free(const Graph& g) { return twin_partition(g).all_singletons(); }

Graph blow_up(const Graph& g, const BlowUpSpec& spec) {
    if (static_cast<int>(spec.multiplicities.size()) != g.size())
        throw std::invalid_argument("blow-up spec length mismatch");
    int total = 0;
    std::vector<int> start(g.size());
    for (int v = 0; v < g.size(); ++v) {
        if (spec.multiplicities[v] < 1) throw std::invalid_argument("zero multiplicity");
        start[v] = total;
        total += spec.multiplicities[v];
    }
    GraphBuilder b(total);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < spec.multiplicities[u]; ++i)
            for (int j = 0; j < spec.multiplicities[v]; ++j) b.add_edge(start[u] + i, start[v] + j);
    return b.build();
}

std::pair<Graph, BlowUpSpec> twin_quotient(const Graph& g) {
    TwinPartition part = twin_partition(g);
    int k = static_cast<int>(part.classes.size());
    std::vector<int> cls(g.size());
    BlowUpSpec spec;
    for (int c = 0; c < k; ++c) {
        for (int v : part.classes[c]) cls[v] = c;
        spec.multiplicities.push_back(static_cast<int>(part.classes[c].size()));
    }
    GraphBuilder b(k);
    for (auto [u, v] : g.edges())
        if (cls[u] != cls[v]) b.add_edge(cls[u], cls[v]);
    return {b.build(), spec};
}

Graph cone(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("negative cone count");
    int n = g.size();
    GraphBuilder b(n + s);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int i = 0; i < s; ++i)
        for (int v = 0; v < n + i; ++v) b.add_edge(n + i, v);
    return b.build();
}

Graph complement(const Graph& g) {
    int n = g.size();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

Graph induced(const Graph& g, const std::vector<int>& s) {
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.size()) throw std::invalid_argument("vertex out of range");
        pos[s[i]] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

}  // namespace satlab
