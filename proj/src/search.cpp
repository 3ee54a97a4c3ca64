#include "satlab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <unordered_set>

#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    double cap;
    explicit Deadline(double seconds) : cap(seconds) {}
    void check() const {
        if (cap <= 0) return;
        if (std::chrono::duration<double>(Clock::now() - start).count() > cap)
            throw BudgetExceeded("wall time cap exceeded");
    }
};

int words_for_bits(int n) { return n == 0 ? 0 : (n + 63) / 64; }

// Candidate adjacency for the compatibility graph, packed as bit rows.
struct BitMatrix {
    int n = 0, words = 0;
    std::vector<uint64_t> bits;
    explicit BitMatrix(int size) : n(size), words(words_for_bits(size)), bits(static_cast<size_t>(size) * words, 0) {}
    void set(int i, int j) {
        bits[static_cast<size_t>(i) * words + (j >> 6)] |= uint64_t{1} << (j & 63);
        bits[static_cast<size_t>(j) * words + (i >> 6)] |= uint64_t{1} << (i & 63);
    }
    bool get(int i, int j) const {
        return (bits[static_cast<size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1;
    }
};

// Branch and bound maximum clique with a greedy coloring bound. With
// `target` > 0 stops as soon as a clique of that size is known.
struct CliqueSolver {
    const BitMatrix& adj;
    long long cap;
    long long nodes = 0;
    int target;
    std::vector<int> best, cur;

    CliqueSolver(const BitMatrix& a, long long node_cap, int stop_at)
        : adj(a), cap(node_cap), target(stop_at) {}

    bool done() const { return target > 0 && static_cast<int>(best.size()) >= target; }

    void expand(const std::vector<int>& p) {
        if (++nodes > cap) throw BudgetExceeded("clique search node cap exceeded");
        if (done()) return;
        if (p.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // Greedy coloring: vertices of color c form an independent set, so a
        // clique inside p has at most max-color vertices.
        std::vector<int> order, color;
        std::vector<char> used(p.size(), 0);
        int c = 0;
        size_t placed = 0;
        while (placed < p.size()) {
            ++c;
            std::vector<int> cls;
            for (size_t i = 0; i < p.size(); ++i) {
                if (used[i]) continue;
                bool ok = true;
                for (int v : cls)
                    if (adj.get(p[i], v)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    used[i] = 1;
                    cls.push_back(p[i]);
                    order.push_back(p[i]);
                    color.push_back(c);
                    ++placed;
                }
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            int bound = target > 0 ? target : static_cast<int>(best.size()) + 1;
            if (static_cast<int>(cur.size()) + color[i] < bound) return;
            int v = order[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj.get(order[j], v)) next.push_back(order[j]);
            cur.push_back(v);
            expand(next);
            cur.pop_back();
            if (done()) return;
        }
    }

    std::vector<int> solve(int n) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        expand(all);
        return best;
    }
};

// Enumerates cliques of size exactly s until the callback accepts one.
bool find_clique_such_that(const BitMatrix& adj, int s, long long cap, long long& nodes,
                           const std::function<bool(const std::vector<int>&)>& accept) {
    std::vector<int> cur;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (++nodes > cap) throw BudgetExceeded("clique enumeration node cap exceeded");
        if (static_cast<int>(cur.size()) == s) return accept(cur);
        if (adj.n - from < s - static_cast<int>(cur.size())) return false;
        for (int v = from; v < adj.n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!adj.get(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

std::vector<uint64_t> subset_bits(const std::vector<int>& s, int words) {
    std::vector<uint64_t> row(words, 0);
    for (int v : s) row[v >> 6] |= uint64_t{1} << (v & 63);
    return row;
}

BitMatrix compatibility_graph(const Graph& host, const std::vector<std::vector<int>>& cands,
                              int r) {
    int w = host.words_per_row();
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(cands.size());
    for (const auto& s : cands) rows.push_back(subset_bits(s, w));
    BitMatrix adj(static_cast<int>(cands.size()));
    std::vector<uint64_t> inter(w);
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j) {
            bool compat;
            if (r == 3) {
                compat = false;
                for (int k = 0; k < w && !compat; ++k) compat = (rows[i][k] & rows[j][k]) != 0;
            } else {
                for (int k = 0; k < w; ++k) inter[k] = rows[i][k] & rows[j][k];
                compat = clique_in_subset(host, inter.data(), r - 2);
            }
            if (compat) adj.set(static_cast<int>(i), static_cast<int>(j));
        }
    return adj;
}

bool better_witness(const Graph& a, const Graph& best) {
    return canonical_form(a) < canonical_form(best);
}

std::function<bool(const Graph&)> clique_free_filter(int r) {
    return [r](const Graph& g) { return !contains_clique(g, r); };
}

}  // namespace

std::vector<std::vector<int>> maximally_free_subsets(const Graph& host, int r, int t) {
    std::vector<std::vector<int>> out;
    int n = host.size();
    if (t > n || t < 0) return out;
    int w = host.words_per_row();
    std::vector<int> pick(t);
    std::vector<uint64_t> bits(w), cand(w);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == t) {
            std::fill(bits.begin(), bits.end(), 0);
            for (int v : pick) bits[v >> 6] |= uint64_t{1} << (v & 63);
            if (clique_in_subset(host, bits.data(), r - 1)) return;
            for (int v = 0; v < n; ++v) {
                if ((bits[v >> 6] >> (v & 63)) & 1) continue;
                const uint64_t* rv = host.row(v);
                for (int k = 0; k < w; ++k) cand[k] = bits[k] & rv[k];
                if (!clique_in_subset(host, cand.data(), r - 2)) return;
            }
            out.push_back(pick);
            return;
        }
        for (int v = from; v <= n - (t - depth); ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                                    const EnumerationBudget& budget) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    int limit = filter ? budget.max_vertices_filtered : budget.max_vertices;
    if (n > limit)
        throw BudgetExceeded("enumeration limited to " + std::to_string(limit) + " vertices");
    Deadline deadline(budget.wall_seconds);
    std::vector<Graph> level{Graph(0, {})};
    for (int i = 1; i <= n; ++i) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        long long ticks = 0;
        for (const Graph& g : level) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << (i - 1)); ++mask) {
                if ((++ticks & 1023) == 0) deadline.check();
                GraphBuilder b(i);
                for (auto [u, v] : g.edges()) b.add_edge(u, v);
                for (int j = 0; j < i - 1; ++j)
                    if ((mask >> j) & 1) b.add_edge(j, i - 1);
                Graph h = b.build();
                if (filter && !filter(h)) continue;
                if (seen.insert(canonical_form(h)).second) next.push_back(canonical_graph(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

ExtremalRecord sat_min(int n, int r, const EnumerationBudget& budget) {
    ExtremalRecord rec;
    rec.kind = "sat";
    rec.params = {{"n", n}, {"r", r}};
    try {
        auto hosts = enumerate_graphs(n, clique_free_filter(r), budget);
        rec.budget_spent = static_cast<long long>(hosts.size());
        for (const Graph& g : hosts) {
            if (!is_saturated(g, r)) continue;
            long long e = g.edge_count();
            if (!rec.value || e < *rec.value ||
                (e == *rec.value && better_witness(g, *rec.witness_graph))) {
                rec.value = e;
                rec.witness_graph = g;
            }
        }
        rec.status = rec.value ? "ok" : "nonexistent";
    } catch (const BudgetExceeded&) {
        rec.status = "budget_exceeded";
        rec.value.reset();
        rec.witness_graph.reset();
    }
    return rec;
}

ExtremalRecord tsat_min(int n, int r, std::optional<int> t, const EnumerationBudget& budget) {
    ExtremalRecord rec;
    rec.kind = t ? "tsat_min_deg" : "tsat";
    rec.params = {{"n", n}, {"r", r}};
    if (t) rec.params.emplace_back("t", *t);
    try {
        auto hosts = enumerate_graphs(n, clique_free_filter(r), budget);
        rec.budget_spent = static_cast<long long>(hosts.size());
        for (const Graph& g : hosts) {
            if (!is_tsat_witness(g, r, t)) continue;
            long long e = g.edge_count();
            if (!rec.value || e < *rec.value ||
                (e == *rec.value && better_witness(g, *rec.witness_graph))) {
                rec.value = e;
                rec.witness_graph = g;
            }
        }
        rec.status = rec.value ? "ok" : "nonexistent";
        if (!rec.value && n == 0) {  // the empty graph qualifies with 0 edges
            rec.value = 0;
            rec.witness_graph = Graph(0, {});
            rec.status = "ok";
        }
    } catch (const BudgetExceeded&) {
        rec.status = "budget_exceeded";
        rec.value.reset();
        rec.witness_graph.reset();
    }
    return rec;
}

ExtremalRecord s_rt(int m, int r, int t, const EnumerationBudget& budget) {
    if (r < 3 || t < r - 2) throw std::invalid_argument("need r >= 3 and t >= r-2");
    ExtremalRecord rec;
    rec.kind = "s_rt";
    rec.params = {{"m", m}, {"r", r}, {"t", t}};
    try {
        auto hosts = enumerate_graphs(m, clique_free_filter(r), budget);
        long long best = 0;
        for (const Graph& host : hosts) {
            auto cands = maximally_free_subsets(host, r, t);
            if (static_cast<long long>(cands.size()) <= best && best > 0) {
                if (static_cast<long long>(cands.size()) < best) continue;
            }
            BitMatrix adj = compatibility_graph(host, cands, r);
            CliqueSolver solver(adj, budget.max_clique_nodes, 0);
            auto clique = solver.solve(adj.n);
            rec.budget_spent += solver.nodes;
            long long size = static_cast<long long>(clique.size());
            bool better = size > best;
            if (size == best && rec.witness_system &&
                better_witness(host, rec.witness_system->host))
                better = true;
            if (better) {
                best = size;
                SystemInstance inst;
                inst.host = host;
                for (int idx : clique) inst.family.sets.push_back(cands[idx]);
                inst.r = r;
                inst.t = t;
                rec.witness_system = inst;
            }
        }
        rec.value = best;
        rec.status = "ok";
    } catch (const BudgetExceeded&) {
        rec.status = "budget_exceeded";
        rec.value.reset();
        rec.witness_system.reset();
    }
    return rec;
}

ExtremalRecord s3t_prime(int m, int t, const EnumerationBudget& budget) {
    ExtremalRecord rec;
    rec.kind = "s3t_prime";
    rec.params = {{"m", m}, {"t", t}};
    try {
        auto hosts = enumerate_graphs(m, clique_free_filter(3), budget);
        long long best = 0;
        for (const Graph& host : hosts) {
            auto cands = maximally_free_subsets(host, 3, t);
            long long size = static_cast<long long>(cands.size());
            bool better = size > best ||
                          (size == best && rec.witness_system &&
                           better_witness(host, rec.witness_system->host));
            if (better) {
                best = size;
                SystemInstance inst;
                inst.host = host;
                inst.family.sets = cands;
                inst.r = 3;
                inst.t = t;
                inst.primed = true;
                rec.witness_system = inst;
            }
        }
        rec.value = best;
        rec.status = "ok";
    } catch (const BudgetExceeded&) {
        rec.status = "budget_exceeded";
        rec.value.reset();
        rec.witness_system.reset();
    }
    return rec;
}

namespace {

ExtremalRecord edge_minimum(const std::string& kind, int s, int r, int t, bool primed,
                            bool require_maximal, const EnumerationBudget& budget) {
    ExtremalRecord rec;
    rec.kind = kind;
    rec.params = {{"s", s}, {"r", r}, {"t", t}};
    if (s == 0) {  // the empty system over the empty host
        rec.value = 0;
        SystemInstance inst;
        inst.host = Graph(0, {});
        inst.r = r;
        inst.t = t;
        inst.primed = primed;
        rec.witness_system = inst;
        return rec;
    }
    try {
        Deadline deadline(budget.wall_seconds);
        // Hosts admitting a nonempty family satisfy e >= m - t, so at edge
        // budget E only hosts with at most E + t vertices can qualify.
        std::map<int, std::vector<Graph>> hosts_by_m;
        auto hosts = [&](int m) -> const std::vector<Graph>& {
            auto it = hosts_by_m.find(m);
            if (it == hosts_by_m.end())
                it = hosts_by_m.emplace(m, enumerate_graphs(m, clique_free_filter(r), budget))
                         .first;
            return it->second;
        };
        for (int e_cap = 0;; ++e_cap) {
            deadline.check();
            if (e_cap + t > budget.max_vertices_filtered)
                throw BudgetExceeded("host size bound exceeds enumeration cap");
            for (int m = t; m <= e_cap + t; ++m) {
                for (const Graph& host : hosts(m)) {
                    if (host.edge_count() != e_cap) continue;
                    auto cands = maximally_free_subsets(host, r, t);
                    if (static_cast<int>(cands.size()) < s) continue;
                    SystemInstance found;
                    bool hit = false;
                    if (primed) {  // any s distinct candidate sets will do
                        found.host = host;
                        for (int i = 0; i < s; ++i) found.family.sets.push_back(cands[i]);
                        hit = true;
                    } else {
                        BitMatrix adj = compatibility_graph(host, cands, r);
                        auto accept = [&](const std::vector<int>& clique) {
                            SystemInstance inst;
                            inst.host = host;
                            for (int idx : clique) inst.family.sets.push_back(cands[idx]);
                            inst.r = r;
                            inst.t = t;
                            if (require_maximal && !check_maximal(inst).maximal) return false;
                            found = std::move(inst);
                            return true;
                        };
                        hit = find_clique_such_that(adj, s, budget.max_clique_nodes,
                                                    rec.budget_spent, accept);
                    }
                    if (hit) {
                        found.r = r;
                        found.t = t;
                        found.primed = primed;
                        found.maximal = require_maximal;
                        rec.value = e_cap;
                        rec.witness_system = found;
                        rec.status = "ok";
                        return rec;
                    }
                }
            }
        }
    } catch (const BudgetExceeded&) {
        rec.status = "budget_exceeded";
        rec.value.reset();
        rec.witness_system.reset();
    }
    return rec;
}

}  // namespace

ExtremalRecord e_rt(int s, int r, int t, bool require_maximal, const EnumerationBudget& budget) {
    if (r < 3 || t < r) throw std::invalid_argument("need r >= 3 and t >= r");
    return edge_minimum(require_maximal ? "e_rt_maximal" : "e_rt", s, r, t, false,
                        require_maximal, budget);
}

ExtremalRecord e3t_doubleprime(int s, int t, const EnumerationBudget& budget) {
    if (t < 2) throw std::invalid_argument("need t >= 2");
    return edge_minimum("e3t_doubleprime", s, 3, t, true, false, budget);
}

ExtremalRecord m_shatter(int k) {
    if (k < 2 || k > 4)
        throw std::invalid_argument("exhaustive shattering search supports k in {2,3,4}");
    ExtremalRecord rec;
    rec.kind = "m_shatter";
    rec.params = {{"k", k}};
    int universe = 1 << k;
    std::vector<uint32_t> pick;
    std::function<bool(int, int)> rec_fn = [&](int from, int want) -> bool {
        if (want == 0) {
            ShatteringSet s{k, pick};
            return shatters_all_pairs(s);
        }
        for (int x = from; x <= universe - want; ++x) {
            pick.push_back(static_cast<uint32_t>(x));
            if (rec_fn(x + 1, want - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int q = 1; q <= universe; ++q) {
        pick.clear();
        if (rec_fn(0, q)) {
            rec.value = q;
            return rec;
        }
    }
    rec.status = "nonexistent";
    return rec;
}

StabilityReport classify_33_systems(int max_host_vertices, const EnumerationBudget& budget) {
    StabilityReport report;
    report.max_host_vertices = max_host_vertices;
    std::map<long long, StabilityBucket> buckets;
    std::map<int, std::string> reference;  // family size -> canonical assembled form
    auto reference_form = [&](int fam_size) -> const std::string& {
        auto it = reference.find(fam_size);
        if (it == reference.end()) {
            SystemInstance lifted = lifted_family(2, 2 * fam_size);
            it = reference
                     .emplace(fam_size,
                              canonical_form(assemble(lifted.host, lifted.family)))
                     .first;
        }
        return it->second;
    };
    Deadline deadline(budget.wall_seconds);
    for (int m = 1; m <= max_host_vertices; ++m) {
        auto hosts = enumerate_graphs(m, clique_free_filter(3), budget);
        for (const Graph& host : hosts) {
            deadline.check();
            auto cands = maximally_free_subsets(host, 3, 3);
            if (cands.empty()) continue;
            int w = host.words_per_row();
            std::vector<std::vector<uint64_t>> rows;
            for (const auto& s : cands) rows.push_back(subset_bits(s, w));
            BitMatrix adj = compatibility_graph(host, cands, 3);
            std::vector<uint64_t> full(w, ~uint64_t{0});
            if (m % 64 != 0) full[w - 1] = (uint64_t{1} << (m % 64)) - 1;
            std::vector<int> chosen;
            std::function<void(int)> walk = [&](int from) {
                if (!chosen.empty()) {
                    std::vector<uint64_t> cover(w, 0);
                    for (int idx : chosen)
                        for (int k = 0; k < w; ++k) cover[k] |= rows[idx][k];
                    if (cover == full) {
                        ++report.systems_checked;
                        long long fs = static_cast<long long>(chosen.size());
                        auto& bucket = buckets[fs];
                        bucket.family_size = fs;
                        ++bucket.total;
                        int l = m - 1;
                        bool matches = l >= 2 && l % 2 == 0 && fs == l / 2;
                        if (matches) {
                            VertexSetFamily fam;
                            for (int idx : chosen) fam.sets.push_back(cands[idx]);
                            matches = canonical_form(assemble(host, fam)) ==
                                      reference_form(static_cast<int>(fs));
                        }
                        if (matches) ++bucket.matching;
                    }
                }
                for (int v = from; v < adj.n; ++v) {
                    bool ok = true;
                    for (int u : chosen)
                        if (!adj.get(u, v)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    chosen.push_back(v);
                    walk(v + 1);
                    chosen.pop_back();
                }
            };
            walk(0);
        }
    }
    for (auto& [fs, bucket] : buckets) report.buckets.push_back(bucket);
    for (size_t i = 0; i < report.buckets.size(); ++i) {
        bool all_match = true;
        for (size_t j = i; j < report.buckets.size(); ++j)
            if (report.buckets[j].matching != report.buckets[j].total) {
                all_match = false;
                break;
            }
        if (all_match) {
            report.stable_threshold = report.buckets[i].family_size;
            break;
        }
    }
    return report;
}

}  // namespace satlab
