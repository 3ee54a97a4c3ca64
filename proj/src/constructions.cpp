#include "satlab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace satlab {

namespace {

Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

long long pow_capped(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return cap;
        r *= base;
    }
    return r;
}

std::vector<std::vector<int>> sorted_sets(const VertexSetFamily& fam) {
    std::vector<std::vector<int>> out = fam.sets;
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

// Indices of fam.sets in lexicographic order of the sorted vertex lists.
std::vector<int> lex_order(const std::vector<std::vector<int>>& sorted) {
    std::vector<int> order(sorted.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sorted[a] < sorted[b]; });
    return order;
}

// Deterministic subfamily of `target` sets: walk missing host edges in
// lexicographic order and make sure each one that some family set contains
// (restricted, when `triangle_free_only`, to edges whose addition keeps the
// host triangle-free) ends up inside a selected set, taking the
// lexicographically least containing set; then pad with the
// lexicographically least unused sets.
VertexSetFamily cover_first_subfamily(const SystemInstance& inst, long long target,
                                      bool triangle_free_only) {
    const Graph& host = inst.host;
    auto sorted = sorted_sets(inst.family);
    auto order = lex_order(sorted);
    std::vector<std::vector<int>> containing(host.size());
    for (int idx : order)
        for (int v : sorted[idx]) containing[v].push_back(idx);

    std::vector<bool> in_set(sorted.size() * static_cast<size_t>(host.size()), false);
    for (size_t i = 0; i < sorted.size(); ++i)
        for (int v : sorted[i]) in_set[i * host.size() + v] = true;
    auto member = [&](int idx, int v) {
        return in_set[static_cast<size_t>(idx) * host.size() + v];
    };

    std::vector<bool> chosen(sorted.size(), false);
    long long count = 0;
    std::vector<uint64_t> cand(host.words_per_row());
    for (int u = 0; u < host.size(); ++u)
        for (int v = u + 1; v < host.size(); ++v) {
            if (host.adjacent(u, v)) continue;
            if (triangle_free_only) {
                bool common = false;
                const uint64_t* ru = host.row(u);
                const uint64_t* rv = host.row(v);
                for (int j = 0; j < host.words_per_row() && !common; ++j)
                    common = (ru[j] & rv[j]) != 0;
                if (common) continue;
            }
            const auto& lu = containing[u];
            const auto& lv = containing[v];
            const auto& small = lu.size() <= lv.size() ? lu : lv;
            int other = lu.size() <= lv.size() ? v : u;
            int pick = -1;
            bool covered = false;
            for (int idx : small) {  // lex order within each vertex list
                if (!member(idx, other)) continue;
                if (chosen[idx]) {
                    covered = true;
                    break;
                }
                if (pick == -1) pick = idx;
            }
            if (covered || pick == -1) continue;
            chosen[pick] = true;
            ++count;
        }
    if (count > target)
        throw InfeasibleError("edge cover needs " + std::to_string(count) +
                              " sets but the subfamily size is " + std::to_string(target));
    for (int idx : order) {
        if (count == target) break;
        if (!chosen[idx]) {
            chosen[idx] = true;
            ++count;
        }
    }
    if (count < target)
        throw InfeasibleError("family has only " + std::to_string(sorted.size()) +
                              " sets, fewer than the requested " + std::to_string(target));
    VertexSetFamily out;
    for (int idx : order)
        if (chosen[idx]) out.sets.push_back(inst.family.sets[idx]);
    return out;
}

}  // namespace

bool shatters_all_pairs(const ShatteringSet& s) {
    for (int i = 0; i < s.k; ++i)
        for (int j = i + 1; j < s.k; ++j) {
            unsigned seen = 0;
            for (uint32_t x : s.sequences) {
                int bi = (x >> (s.k - 1 - i)) & 1;
                int bj = (x >> (s.k - 1 - j)) & 1;
                seen |= 1u << (2 * bi + bj);
            }
            if (seen != 0xf) return false;
        }
    return true;
}

Graph ehm_graph(int n, int r) {
    if (r < 3) throw std::invalid_argument("clique order must be at least 3");
    if (n < r - 2)
        throw std::invalid_argument("need at least r-2 vertices, got " + std::to_string(n));
    GraphBuilder b(n);
    for (int u = 0; u < r - 2; ++u) {
        for (int v = u + 1; v < r - 2; ++v) b.add_edge(u, v);
        for (int v = r - 2; v < n; ++v) b.add_edge(u, v);
    }
    return b.build();
}

Graph named_small(const std::string& name) {
    if (name == "c5") return cycle_graph(5);
    if (name == "c7_complement") return complement(cycle_graph(7));
    if (name == "c8_two_chords_complement") {
        GraphBuilder b(cycle_graph(8));
        b.add_edge(0, 4);
        b.add_edge(1, 5);
        return complement(b.build());
    }
    if (name == "wagner") {
        GraphBuilder b(cycle_graph(8));
        for (int i = 0; i < 4; ++i) b.add_edge(i, i + 4);
        return b.build();
    }
    if (name == "petersen") {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < 5; ++a)
            for (int c = a + 1; c < 5; ++c) pairs.emplace_back(a, c);
        GraphBuilder b(10);
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                auto [a, c] = pairs[i];
                auto [d, e] = pairs[j];
                if (a != d && a != e && c != d && c != e)
                    b.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        return b.build();
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

ShatteringSet shattering_set(int k, std::optional<int> size) {
    if (k < 2 || k > 30) throw std::invalid_argument("sequence length out of range");
    ShatteringSet out;
    out.k = k;
    if (k == 2) {
        out.sequences = {0, 1, 2, 3};
    } else {
        for (uint32_t x = 0; x < (1u << k); ++x) {
            if (std::popcount(x) % 2 != 0) continue;
            if (k >= 4 && x == 0) continue;
            out.sequences.push_back(x);
        }
    }
    if (size) {
        if (*size < static_cast<int>(out.sequences.size()))
            throw std::invalid_argument("requested size " + std::to_string(*size) +
                                        " below the achievable minimum " +
                                        std::to_string(out.sequences.size()));
        if (static_cast<long long>(*size) > (1LL << k))
            throw std::invalid_argument("requested size exceeds 2^k");
        std::vector<bool> present(1u << k, false);
        for (uint32_t x : out.sequences) present[x] = true;
        for (uint32_t x = 0; static_cast<int>(out.sequences.size()) < *size; ++x)
            if (!present[x]) out.sequences.push_back(x);
        std::sort(out.sequences.begin(), out.sequences.end());
    }
    return out;
}

namespace {

// Matched pairs M, a pair-shattering set of sequences, and an apex over the
// sequences; twin-free and K_3-saturated for np >= 9, np != 10.
Graph shatter_construction(int np) {
    int k = 2;
    while ((1LL << k) + 2 * k + 1 < np) ++k;
    int q = np - 2 * k - 1;
    ShatteringSet s = shattering_set(k, q);
    GraphBuilder b(np);
    for (int i = 0; i < k; ++i) b.add_edge(2 * i, 2 * i + 1);
    for (int j = 0; j < q; ++j) {
        uint32_t x = s.sequences[j];
        for (int i = 0; i < k; ++i) b.add_edge(2 * k + j, 2 * i + ((x >> (k - 1 - i)) & 1));
        b.add_edge(2 * k + j, np - 1);
    }
    return b.build();
}

}  // namespace

Graph twin_free_saturated(int n, int r) {
    if (r < 3) throw std::invalid_argument("clique order must be at least 3");
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n < r) return complete_graph(n);
    if (n == r) throw NonexistentError("n = r (the K_" + std::to_string(r) +
                                       "-saturated graph on r vertices has twins)");
    if (n == r + 1) throw NonexistentError("n = r+1 (both saturated graphs on r+1 vertices have twins)");
    if (n == r + 2) return cone(named_small("c5"), r - 3);
    if (n == r + 3) {
        if (r == 3) throw NonexistentError("(r,n) = (3,6)");
        return cone(named_small("c7_complement"), r - 4);
    }
    if (n == r + 4) {
        if (r == 3) throw NonexistentError("(r,n) = (3,7)");
        return cone(named_small("c8_two_chords_complement"), r - 4);
    }
    if (n == r + 5) return cone(named_small("wagner"), r - 3);
    int np = n - r + 3;  // >= 9
    if (np == 10) return cone(named_small("petersen"), r - 3);
    return cone(shatter_construction(np), r - 3);
}

SystemInstance system_family(int t, int l) {
    if (t < 2) throw std::invalid_argument("set size must be at least 2");
    if (l < 2 || (t == 3 && l < 3))
        throw std::invalid_argument("scale parameter below threshold for t = " + std::to_string(t));
    SystemInstance inst;
    inst.r = 3;
    inst.t = t;
    inst.primed = true;
    inst.maximal = false;

    if (t == 2) {
        int a = l / 2;  // left part; right part has l - a vertices
        GraphBuilder b(l);
        for (int i = 0; i < a; ++i)
            for (int j = a; j < l; ++j)
                if (j - a != i) b.add_edge(i, j);
        inst.host = b.build();
        for (int i = 0; i < a; ++i) inst.family.sets.push_back({i, a + i});
    } else if (t == 3) {
        // K_{l,l} minus the alternating Hamilton cycle a_0 b_0 a_1 b_1 ...
        GraphBuilder b(2 * l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                if (j != i && j != (i + 1) % l) b.add_edge(i, l + j);
        inst.host = b.build();
        // The removed edges a_i b_i and a_i b_{i+1} form the Hamilton cycle
        // a_0, b_1, a_1, b_2, ...; the family is its consecutive triples.
        auto cyc = [l](int p) { return p % 2 == 0 ? p / 2 : l + ((p / 2 + 1) % l); };
        for (int p = 0; p < 2 * l; ++p)
            inst.family.sets.push_back(
                {cyc(p), cyc((p + 1) % (2 * l)), cyc((p + 2) % (2 * l))});
    } else if (t == 4) {
        // Parts X and Y are both l x l grids of pairs; (a,b) in X is adjacent
        // to (c,d) in Y iff the pairs differ in both coordinates or in none.
        int m = l * l;
        GraphBuilder b(2 * m);
        for (int a = 0; a < l; ++a)
            for (int bb = 0; bb < l; ++bb)
                for (int c = 0; c < l; ++c)
                    for (int d = 0; d < l; ++d)
                        if ((a != c && bb != d) || (a == c && bb == d))
                            b.add_edge(a * l + bb, m + c * l + d);
        inst.host = b.build();
        for (int a = 0; a < l; ++a)
            for (int c = a + 1; c < l; ++c)
                for (int bb = 0; bb < l; ++bb)
                    for (int d = 0; d < l; ++d)
                        if (bb != d)
                            inst.family.sets.push_back(
                                {a * l + bb, c * l + d, m + a * l + d, m + c * l + bb});
    } else {
        // Blocks indexed by the vertices of C_t; the vertex (v,x,y) carries
        // the coordinates for the cycle edges (v-1,v) and (v,v+1). Adjacency
        // between consecutive blocks iff the shared coordinate differs.
        int m = l * l;
        GraphBuilder b(t * m);
        for (int v = 0; v < t; ++v) {
            int w = (v + 1) % t;
            for (int x = 0; x < l; ++x)
                for (int y = 0; y < l; ++y)
                    for (int y2 = 0; y2 < l; ++y2) {
                        if (y2 == y) continue;
                        for (int z = 0; z < l; ++z)
                            b.add_edge(v * m + x * l + y, w * m + y2 * l + z);
                    }
        }
        inst.host = b.build();
        std::vector<int> coord(t, 0);
        for (;;) {
            std::vector<int> set(t);
            for (int v = 0; v < t; ++v)
                set[v] = v * m + coord[(v + t - 1) % t] * l + coord[v];
            inst.family.sets.push_back(std::move(set));
            int p = t - 1;
            while (p >= 0 && ++coord[p] == l) coord[p--] = 0;
            if (p < 0) break;
        }
    }

    SystemReport rep = check_system(inst);
    if (!rep.valid()) throw std::logic_error("system construction produced an invalid system");
    return inst;
}

SystemInstance lifted_family(int t, int l) {
    SystemInstance out = lift(system_family(t, l));
    // Maximality holds for all large l (failing only at t=2 with odd l), but a
    // few small cells fall below that threshold, so record the checked truth.
    out.maximal = check_maximal(out).maximal;
    return out;
}

Graph tsat_upper_witness(int n) {
    int l = 1;
    while (pow_capped(l, 5, n) < n) ++l;  // l = ceil(n^{1/5})
    if (l < 2) l = 2;
    SystemInstance sys = lifted_family(5, l);
    int m = sys.host.size();  // 5l^2 + 1
    if (n <= m)
        throw InfeasibleError("n = " + std::to_string(n) + " does not exceed the host size " +
                              std::to_string(m));
    // Only missing edges whose addition keeps the host triangle-free need a
    // covering set; the others already create a K_3 and cannot break
    // maximality. This keeps the required cover well under the subfamily
    // budget even at the smallest feasible n.
    VertexSetFamily fam = cover_first_subfamily(sys, n - m, true);
    return assemble(sys.host, fam);
}

SystemInstance e34_upper_witness(int s) {
    if (s < 1) throw std::invalid_argument("family size must be positive");
    int l = 2;
    while (static_cast<long long>(l) * (l - 1) / 2 < s) ++l;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < l && static_cast<int>(pairs.size()) < s; ++x)
        for (int y = x + 1; y < l && static_cast<int>(pairs.size()) < s; ++y)
            pairs.emplace_back(x, y);
    SystemInstance base;
    GraphBuilder b(l + s);
    for (int j = 0; j < s; ++j)
        for (int x = 0; x < l; ++x)
            if (x != pairs[j].first && x != pairs[j].second) b.add_edge(x, l + j);
    base.host = b.build();
    for (int j = 0; j < s; ++j) base.family.sets.push_back({pairs[j].first, pairs[j].second, l + j});
    base.r = 3;
    base.t = 3;
    base.primed = true;
    return maximalize(lift(base));
}

SystemInstance e35_upper_witness(int s) {
    if (s < 1) throw std::invalid_argument("family size must be positive");
    int l = 2;
    while (static_cast<long long>(l) * l * (l - 1) * (l - 1) / 2 < s) ++l;
    SystemInstance sys = lifted_family(4, l);
    SystemInstance out;
    out.host = sys.host;
    out.family = cover_first_subfamily(sys, s, true);
    out.r = 3;
    out.t = 5;
    out.primed = false;
    out.maximal = true;
    return out;
}

namespace {

// Subfamily of `target` sets meeting the quota s'(v) >= min(s(v), t+1),
// filled greedily by descending s(v), then padded lexicographically.
VertexSetFamily quota_subfamily(const SystemInstance& inst, long long target, int t) {
    auto s = membership_counts(inst.host.size(), inst.family);
    auto sorted = sorted_sets(inst.family);
    auto order = lex_order(sorted);
    std::vector<std::vector<int>> containing(inst.host.size());
    for (int idx : order)
        for (int v : sorted[idx]) containing[v].push_back(idx);

    std::vector<int> verts(inst.host.size());
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return s[a] > s[b]; });

    std::vector<bool> chosen(sorted.size(), false);
    std::vector<long long> picked(inst.host.size(), 0);
    long long count = 0;
    for (int v : verts) {
        long long need = std::min<long long>(s[v], t + 1);
        for (int idx : containing[v]) {
            if (picked[v] >= need) break;
            if (chosen[idx]) continue;
            chosen[idx] = true;
            ++count;
            for (int u : sorted[idx]) ++picked[u];
        }
        if (picked[v] < need)
            throw InfeasibleError("cannot meet the membership quota at vertex " +
                                  std::to_string(v));
    }
    if (count > target)
        throw InfeasibleError("quota selection needs " + std::to_string(count) +
                              " sets but the subfamily size is " + std::to_string(target));
    for (int idx : order) {
        if (count == target) break;
        if (!chosen[idx]) {
            chosen[idx] = true;
            ++count;
        }
    }
    if (count < target)
        throw InfeasibleError("family too small for the requested subfamily size " +
                              std::to_string(target));
    VertexSetFamily out;
    for (int idx : order)
        if (chosen[idx]) out.sets.push_back(inst.family.sets[idx]);
    return out;
}

}  // namespace

Graph tsat_min_deg_upper_witness(int n, int r, int t) {
    if (r < 3) throw std::invalid_argument("clique order must be at least 3");
    if (t < r + 3) throw std::invalid_argument("minimum degree target must be at least r+3");
    int t1 = t - r + 2;  // >= 5
    std::string last = "no scale parameter fits " + std::to_string(n) + " vertices";
    for (int l = 2; static_cast<long long>(t1) * l * l + 1 + (r - 3) <= n; ++l) {
        long long fam_size = pow_capped(l, t1, n + 1);
        long long host_upper = static_cast<long long>(t1) * l * l + 1 + (r - 3);
        if (fam_size < n - host_upper) {
            last = "family of size " + std::to_string(fam_size) + " too small at l = " +
                   std::to_string(l);
            continue;
        }
        SystemInstance cur = maximalize(cone_system(lifted_family(t1, l), r - 3));
        while (cleanup_applicable(cur)) cur = cleanup_step(cur);
        long long m = cur.host.size();
        long long target = n - m;
        if (static_cast<long long>(t + 1) * m > target) {
            last = "host of size " + std::to_string(m) + " leaves no room for quotas at l = " +
                   std::to_string(l);
            break;  // larger l only grows the host
        }
        if (static_cast<long long>(cur.family.sets.size()) < target) {
            last = "family shrank below the required subfamily size at l = " + std::to_string(l);
            continue;
        }
        SystemInstance sub;
        sub.host = cur.host;
        sub.family = quota_subfamily(cur, target, t);
        sub.r = r;
        sub.t = t;
        sub = maximalize(sub);
        return assemble(sub.host, sub.family);
    }
    throw InfeasibleError(last);
}

}  // namespace satlab
