#include "satlab/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace satlab {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Canon {
    const Graph& g;
    int n;

    explicit Canon(const Graph& graph) : g(graph), n(graph.size()) {}

    // Color refinement by sorted neighbor-color multisets. Colors come out
    // as even ranks so a caller can individualize with rank+1 without
    // colliding into the next cell.
    void refine(std::vector<int>& color) const {
        std::vector<std::vector<int>> sig(n);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        int cells = 0;
        for (;;) {
            for (int v = 0; v < n; ++v) {
                sig[v].clear();
                sig[v].push_back(color[v]);
                for (int u : g.neighbors(v)) sig[v].push_back(color[u]);
                std::sort(sig[v].begin() + 1, sig[v].end());
            }
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return sig[a] < sig[b]; });
            int rank = 0;
            std::vector<int> next(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
                next[order[i]] = 2 * rank;
            }
            int new_cells = rank + 1;
            color.swap(next);
            if (new_cells == cells) break;
            cells = new_cells;
            if (cells == n) break;
        }
    }

    std::string leaf_string(const std::vector<int>& perm) const {
        // perm: vertex -> position. Upper-triangle bits in position order.
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[perm[v]] = v;
        std::string s;
        s.reserve(4 + (static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8);
        for (int shift = 24; shift >= 0; shift -= 8)
            s.push_back(static_cast<char>((n >> shift) & 0xff));
        unsigned char acc = 0;
        int nbits = 0;
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p) {
                acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(inv[p], inv[q]) ? 1 : 0));
                if (++nbits == 8) {
                    s.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits > 0) s.push_back(static_cast<char>(acc << (8 - nbits)));
        return s;
    }

    // Returns the minimal leaf string in this subtree together with the
    // permutation that achieves it. Ties between sibling branches expose
    // automorphisms, which prune the remaining siblings.
    void search(std::vector<int> color, std::string& out_str, std::vector<int>& out_perm) const {
        refine(color);
        int cell_color = -1;
        for (int v = 0; v < n; ++v) {
            int same = 0;
            for (int u = 0; u < n; ++u) same += (color[u] == color[v]);
            if (same > 1 && (cell_color == -1 || color[v] < cell_color)) cell_color = color[v];
        }
        if (cell_color == -1) {
            std::vector<int> perm(n);
            for (int v = 0; v < n; ++v) perm[v] = color[v] / 2;
            out_str = leaf_string(perm);
            out_perm = std::move(perm);
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == cell_color) cell.push_back(v);

        Dsu orbits(n);
        std::vector<int> tried;
        std::string best_str;
        std::vector<int> best_perm, best_inv;
        for (int v : cell) {
            bool skip = false;
            for (int u : tried)
                if (orbits.find(u) == orbits.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            std::vector<int> child = color;
            for (int w : cell)
                if (w != v) child[w] = cell_color + 1;
            std::string str;
            std::vector<int> perm;
            search(std::move(child), str, perm);
            if (best_str.empty() || str < best_str) {
                best_str = std::move(str);
                best_perm = std::move(perm);
                best_inv.assign(n, 0);
                for (int u = 0; u < n; ++u) best_inv[best_perm[u]] = u;
            } else if (str == best_str) {
                for (int u = 0; u < n; ++u) orbits.unite(u, best_inv[perm[u]]);
            }
        }
        out_str = std::move(best_str);
        out_perm = std::move(best_perm);
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.size() == 0) return std::string(4, '\0');
    Canon c(g);
    std::string str;
    std::vector<int> perm;
    c.search(std::vector<int>(g.size(), 0), str, perm);
    return str;
}

Graph canonical_graph(const Graph& g) {
    if (g.size() == 0) return g;
    Canon c(g);
    std::string str;
    std::vector<int> perm;
    c.search(std::vector<int>(g.size(), 0), str, perm);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.size(), edges);
}

}  // namespace satlab
