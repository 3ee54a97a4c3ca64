#include "satlab/saturation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "satlab/graph.hpp"

namespace satlab {

namespace {

// r = 3 only: is there a missing edge (u,v) with no common neighbor?
// Adding such an edge creates no triangle. One OR of neighbor rows per
// vertex keeps this linear-ish, which matters for hosts with 10^4 vertices.
std::optional<Edge> triangle_unsaturated_pair(const Graph& g) {
    int n = g.size(), w = g.words_per_row();
    std::vector<uint64_t> reach(w);
    for (int u = 0; u < n; ++u) {
        std::fill(reach.begin(), reach.end(), 0);
        const uint64_t* ru = g.row(u);
        for (int i = 0; i < w; ++i) {
            uint64_t word = ru[i];
            while (word) {
                int v = i * 64 + std::countr_zero(word);
                word &= word - 1;
                const uint64_t* rv = g.row(v);
                for (int j = 0; j < w; ++j) reach[j] |= rv[j];
            }
        }
        for (int i = 0; i < w; ++i) {
            uint64_t bad = ~reach[i] & ~ru[i];
            if (i == w - 1 && n % 64 != 0) bad &= (uint64_t{1} << (n % 64)) - 1;
            while (bad) {
                int v = i * 64 + std::countr_zero(bad);
                bad &= bad - 1;
                if (v == u) continue;
                if (v > u) return Edge{u, v};
                // v < u was already scanned from v's side unless (v,u) also
                // lacked common neighbors then; report it anyway.
                return Edge{v, u};
            }
        }
    }
    return std::nullopt;
}

// cand := N(u) & N(v).
void common_row(const Graph& g, int u, int v, std::vector<uint64_t>& cand) {
    const uint64_t* ru = g.row(u);
    const uint64_t* rv = g.row(v);
    for (int i = 0; i < g.words_per_row(); ++i) cand[i] = ru[i] & rv[i];
}

}  // namespace

SaturationReport saturation_report(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("clique order must be at least 3");
    SaturationReport rep;
    rep.clique_witness = find_clique(g, r);
    if (!rep.clique_witness.empty()) return rep;
    rep.is_free = true;
    if (r == 3) {
        rep.violating_pair = triangle_unsaturated_pair(g);
        rep.is_saturated = !rep.violating_pair.has_value();
        return rep;
    }
    std::vector<uint64_t> cand(g.words_per_row());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.adjacent(u, v)) continue;
            common_row(g, u, v, cand);
            if (!clique_in_subset(g, cand.data(), r - 2)) {
                rep.violating_pair = Edge{u, v};
                rep.is_saturated = false;
                return rep;
            }
        }
    rep.is_saturated = true;
    return rep;
}

bool is_saturated(const Graph& g, int r) {
    SaturationReport rep = saturation_report(g, r);
    return rep.is_free && rep.is_saturated;
}

Graph saturate(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("clique order must be at least 3");
    if (contains_clique(g, r))
        throw std::invalid_argument("graph already contains a K_" + std::to_string(r));
    Graph cur = g;
    std::vector<uint64_t> cand(g.words_per_row());
    // Common neighborhoods only grow, so one lexicographic pass suffices.
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (cur.adjacent(u, v)) continue;
            common_row(cur, u, v, cand);
            if (clique_in_subset(cur, cand.data(), r - 2)) continue;
            GraphBuilder b(cur);
            b.add_edge(u, v);
            cur = b.build();
        }
    return cur;
}

bool is_tsat_witness(const Graph& g, int r, std::optional<int> t) {
    SaturationReport rep = saturation_report(g, r);
    if (!rep.is_free || !rep.is_saturated) return false;
    if (!t) return is_twin_free(g);
    if (g.size() > 0 && g.min_degree() < *t) return false;
    for (const auto& cls : twin_partition(g).classes) {
        if (cls.size() < 2) continue;
        bool ok = false;
        for (int w : g.neighbors(cls[0]))
            if (g.degree(w) == *t) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

}  // namespace satlab
