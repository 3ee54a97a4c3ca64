#include "satlab/systems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace satlab {

namespace {

void validate_family(int n, const VertexSetFamily& fam) {
    if (!fam.mults.empty() && fam.mults.size() != fam.sets.size())
        throw std::invalid_argument("multiplicity list length mismatch");
    for (int m : fam.mults)
        if (m < 1) throw std::invalid_argument("multiplicity must be positive");
    for (const auto& s : fam.sets) {
        std::vector<bool> seen(n, false);
        for (int v : s) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("set element out of host range: " + std::to_string(v));
            if (seen[v]) throw std::invalid_argument("repeated element within a set");
            seen[v] = true;
        }
    }
}

std::vector<std::vector<uint64_t>> set_rows(const Graph& host, const VertexSetFamily& fam) {
    int w = host.words_per_row();
    std::vector<std::vector<uint64_t>> rows(fam.sets.size(), std::vector<uint64_t>(w, 0));
    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (int v : fam.sets[i]) rows[i][v >> 6] |= uint64_t{1} << (v & 63);
    return rows;
}

bool rows_intersect_clique(const Graph& host, const std::vector<uint64_t>& a,
                           const std::vector<uint64_t>& b, int k) {
    int w = host.words_per_row();
    if (k == 1) {  // common case (r = 3): nonempty intersection, no allocation
        for (int i = 0; i < w; ++i)
            if (a[i] & b[i]) return true;
        return false;
    }
    std::vector<uint64_t> inter(w);
    for (int i = 0; i < w; ++i) inter[i] = a[i] & b[i];
    return clique_in_subset(host, inter.data(), k);
}

Graph drop_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.size() - 1);
    for (int u = 0; u < g.size(); ++u)
        if (u != v) keep.push_back(u);
    return induced(g, keep);
}

// Relabels after deleting vertex v: indices above v shift down by one.
std::vector<int> shift_set(const std::vector<int>& s, int v) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int u : s)
        if (u != v) out.push_back(u > v ? u - 1 : u);
    return out;
}

}  // namespace

SystemReport check_system(const SystemInstance& inst) {
    if (inst.r < 3) throw std::invalid_argument("system order r must be at least 3");
    if (inst.t && *inst.t < inst.r - 2) throw std::invalid_argument("t must be at least r-2");
    if (inst.primed && inst.r != 3) throw std::invalid_argument("primed systems require r = 3");
    const Graph& host = inst.host;
    validate_family(host.size(), inst.family);

    SystemReport rep;
    rep.host_clique = find_clique(host, inst.r);
    rep.host_free = rep.host_clique.empty();

    int w = host.words_per_row();
    auto rows = set_rows(host, inst.family);

    rep.sets_ok = true;
    std::vector<uint64_t> cand(w);
    for (size_t i = 0; i < rows.size() && rep.sets_ok; ++i) {
        if (clique_in_subset(host, rows[i].data(), inst.r - 1)) {
            rep.sets_ok = false;
            rep.bad_set = static_cast<int>(i);
            rep.bad_outside_vertex = -1;
            break;
        }
        for (int v = 0; v < host.size(); ++v) {
            if ((rows[i][v >> 6] >> (v & 63)) & 1) continue;
            const uint64_t* rv = host.row(v);
            for (int j = 0; j < w; ++j) cand[j] = rows[i][j] & rv[j];
            if (!clique_in_subset(host, cand.data(), inst.r - 2)) {
                rep.sets_ok = false;
                rep.bad_set = static_cast<int>(i);
                rep.bad_outside_vertex = v;
                break;
            }
        }
    }

    rep.pairwise_ok = true;
    if (!inst.primed) {
        int k = inst.r - 2;
        for (size_t i = 0; i < rows.size() && rep.pairwise_ok; ++i) {
            // A multiplicity >= 2 pairs an instance with its own copy.
            if (inst.family.mult(i) >= 2 && !rows_intersect_clique(host, rows[i], rows[i], k)) {
                rep.pairwise_ok = false;
                rep.bad_pair = {static_cast<int>(i), static_cast<int>(i)};
                break;
            }
            for (size_t j = i + 1; j < rows.size(); ++j)
                if (!rows_intersect_clique(host, rows[i], rows[j], k)) {
                    rep.pairwise_ok = false;
                    rep.bad_pair = {static_cast<int>(i), static_cast<int>(j)};
                    break;
                }
        }
    }

    rep.shape_ok = true;
    if (inst.t) {
        for (size_t i = 0; i < inst.family.sets.size() && rep.shape_ok; ++i) {
            if (static_cast<int>(inst.family.sets[i].size()) != *inst.t) {
                rep.shape_ok = false;
                rep.shape_error = "set " + std::to_string(i) + " has size " +
                                  std::to_string(inst.family.sets[i].size()) + ", expected " +
                                  std::to_string(*inst.t);
            } else if (inst.family.mult(i) > 1) {
                rep.shape_ok = false;
                rep.shape_error = "set " + std::to_string(i) + " repeated via multiplicity";
            }
        }
        if (rep.shape_ok) {
            std::vector<std::vector<int>> sorted = inst.family.sets;
            for (auto& s : sorted) std::sort(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                rep.shape_ok = false;
                rep.shape_error = "repeated set in family";
            }
        }
    }
    return rep;
}

MaximalityReport check_maximal(const SystemInstance& inst) {
    SystemReport base = check_system(inst);
    if (!base.valid()) throw std::invalid_argument("not a valid system; cannot test maximality");
    const Graph& host = inst.host;
    int w = host.words_per_row();
    auto rows = set_rows(host, inst.family);
    std::vector<uint64_t> cand(w), scand(w);
    for (int u = 0; u < host.size(); ++u)
        for (int v = u + 1; v < host.size(); ++v) {
            if (host.adjacent(u, v)) continue;
            const uint64_t* ru = host.row(u);
            const uint64_t* rv = host.row(v);
            for (int j = 0; j < w; ++j) cand[j] = ru[j] & rv[j];
            if (clique_in_subset(host, cand.data(), inst.r - 2)) continue;  // creates K_r
            bool covered = false;
            for (const auto& row : rows) {
                if (!((row[u >> 6] >> (u & 63)) & 1) || !((row[v >> 6] >> (v & 63)) & 1)) continue;
                if (inst.r == 3) {  // u,v inside S: the new edge is a K_2 in (H+e)[S]
                    covered = true;
                    break;
                }
                for (int j = 0; j < w; ++j) scand[j] = cand[j] & row[j];
                if (clique_in_subset(host, scand.data(), inst.r - 3)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return {false, Edge{u, v}};
        }
    return {true, std::nullopt};
}

std::vector<long long> membership_counts(int n, const VertexSetFamily& fam) {
    std::vector<long long> s(n, 0);
    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (int v : fam.sets[i]) s[v] += fam.mult(i);
    return s;
}

Graph assemble(const Graph& host, const VertexSetFamily& fam) {
    validate_family(host.size(), fam);
    int n = host.size();
    GraphBuilder b(static_cast<int>(n + fam.total_instances()));
    for (auto [u, v] : host.edges()) b.add_edge(u, v);
    int next = n;
    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (int copy = 0; copy < fam.mult(i); ++copy, ++next)
            for (int v : fam.sets[i]) b.add_edge(next, v);
    return b.build();
}

std::pair<Graph, VertexSetFamily> decompose(const Graph& g, const std::vector<int>& cover) {
    std::vector<bool> in_cover(g.size(), false);
    for (int v : cover) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("cover vertex out of range");
        in_cover[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!in_cover[u] && !in_cover[v])
            throw std::invalid_argument("not a vertex cover: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") uncovered");
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < cover.size(); ++i) pos[cover[i]] = static_cast<int>(i);
    Graph host = induced(g, cover);

    VertexSetFamily fam;
    std::map<std::vector<int>, size_t> index;
    std::vector<int> counts;
    for (int v = 0; v < g.size(); ++v) {
        if (in_cover[v]) continue;
        std::vector<int> s;
        for (int u : g.neighbors(v)) s.push_back(pos[u]);
        std::sort(s.begin(), s.end());
        auto [it, inserted] = index.try_emplace(s, fam.sets.size());
        if (inserted) {
            fam.sets.push_back(s);
            counts.push_back(1);
        } else {
            ++counts[it->second];
        }
    }
    bool any_repeat = false;
    for (int c : counts) any_repeat |= (c > 1);
    if (any_repeat) fam.mults = counts;
    return {host, fam};
}

SystemInstance lift(const SystemInstance& inst) {
    if (inst.r != 3 || !inst.primed)
        throw std::invalid_argument("lift expects a primed r=3 system");
    SystemReport rep = check_system(inst);
    if (!rep.valid()) throw std::invalid_argument("lift: input system invalid");
    int n = inst.host.size();
    GraphBuilder b(n + 1);
    for (auto [u, v] : inst.host.edges()) b.add_edge(u, v);
    SystemInstance out;
    out.host = b.build();
    out.family = inst.family;
    for (auto& s : out.family.sets) s.push_back(n);
    out.r = 3;
    if (inst.t) out.t = *inst.t + 1;
    out.primed = false;
    out.maximal = false;
    return out;
}

SystemInstance restrict_at(const SystemInstance& inst, int v) {
    if (inst.r != 3) throw std::invalid_argument("restriction is defined for r = 3");
    if (v < 0 || v >= inst.host.size()) throw std::invalid_argument("vertex out of range");
    std::vector<int> keep;
    for (int u = 0; u < inst.host.size(); ++u)
        if (u != v && !inst.host.adjacent(u, v)) keep.push_back(u);
    std::vector<int> pos(inst.host.size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);

    SystemInstance out;
    out.host = induced(inst.host, keep);
    for (size_t i = 0; i < inst.family.sets.size(); ++i) {
        const auto& s = inst.family.sets[i];
        if (std::find(s.begin(), s.end(), v) == s.end()) continue;
        std::vector<int> mapped;
        for (int u : s)
            if (u != v) {
                if (pos[u] < 0)
                    throw std::invalid_argument("set crosses the neighborhood of " +
                                                std::to_string(v) + "; not independent at it");
                mapped.push_back(pos[u]);
            }
        out.family.sets.push_back(std::move(mapped));
        if (!inst.family.mults.empty()) out.family.mults.push_back(inst.family.mults[i]);
    }
    out.r = 3;
    if (inst.t) out.t = *inst.t - 1;
    out.primed = true;
    out.maximal = false;
    return out;
}

SystemInstance cone_system(const SystemInstance& inst, int s) {
    if (s < 0) throw std::invalid_argument("negative cone count");
    if (inst.primed && s > 0) throw std::invalid_argument("cannot cone a primed system");
    if (s == 0) return inst;
    SystemReport rep = check_system(inst);
    if (!rep.valid()) throw std::invalid_argument("cone_system: input system invalid");
    int n = inst.host.size();
    SystemInstance out;
    out.host = cone(inst.host, s);
    out.family = inst.family;
    for (auto& set : out.family.sets)
        for (int i = 0; i < s; ++i) set.push_back(n + i);
    out.r = inst.r + s;
    if (inst.t) out.t = *inst.t + s;
    out.primed = false;
    out.maximal = inst.maximal;
    return out;
}

SystemInstance maximalize(const SystemInstance& inst) {
    SystemReport rep = check_system(inst);
    if (!rep.valid()) throw std::invalid_argument("maximalize: input system invalid");
    Graph cur = inst.host;
    int w = cur.words_per_row();
    auto rows = set_rows(cur, inst.family);
    std::vector<uint64_t> cand(w), scand(w);
    for (int u = 0; u < cur.size(); ++u)
        for (int v = u + 1; v < cur.size(); ++v) {
            if (cur.adjacent(u, v)) continue;
            const uint64_t* ru = cur.row(u);
            const uint64_t* rv = cur.row(v);
            for (int j = 0; j < w; ++j) cand[j] = ru[j] & rv[j];
            if (clique_in_subset(cur, cand.data(), inst.r - 2)) continue;  // would close a K_r
            bool breaks_set = false;
            for (const auto& row : rows) {
                if (!((row[u >> 6] >> (u & 63)) & 1) || !((row[v >> 6] >> (v & 63)) & 1)) continue;
                if (inst.r == 3) {  // edge inside an independent set
                    breaks_set = true;
                    break;
                }
                for (int j = 0; j < w; ++j) scand[j] = cand[j] & row[j];
                if (clique_in_subset(cur, scand.data(), inst.r - 3)) {
                    breaks_set = true;
                    break;
                }
            }
            if (breaks_set) continue;
            GraphBuilder b(cur);
            b.add_edge(u, v);
            cur = b.build();
        }
    SystemInstance out = inst;
    out.host = std::move(cur);
    out.maximal = true;
    return out;
}

namespace {

// Property 2: host twins u != w with s(u) = s(w) = 0 (returns the pair), else
// property 1: some v with d(v) + s(v) <= t. {-1,-1} when neither applies.
std::pair<int, int> cleanup_target(const SystemInstance& inst, const std::vector<long long>& s) {
    for (const auto& cls : twin_partition(inst.host).classes) {
        int first = -1;
        for (int v : cls) {
            if (s[v] != 0) continue;
            if (first == -1)
                first = v;
            else
                return {first, v};
        }
    }
    if (inst.t)
        for (int v = 0; v < inst.host.size(); ++v)
            if (inst.host.degree(v) + s[v] <= *inst.t) return {v, -1};
    return {-1, -1};
}

}  // namespace

bool cleanup_applicable(const SystemInstance& inst) {
    auto s = membership_counts(inst.host.size(), inst.family);
    return cleanup_target(inst, s).first != -1;
}

SystemInstance cleanup_step(const SystemInstance& inst) {
    if (!inst.t) throw std::invalid_argument("cleanup_step requires t");
    auto s = membership_counts(inst.host.size(), inst.family);
    auto [a, b] = cleanup_target(inst, s);
    if (a == -1) throw std::invalid_argument("no cleanup reduction applies");

    if (b != -1) {  // twin pair, both outside every set: drop the later twin
        SystemInstance out;
        out.host = drop_vertex(inst.host, b);
        for (size_t i = 0; i < inst.family.sets.size(); ++i) {
            out.family.sets.push_back(shift_set(inst.family.sets[i], b));
            if (!inst.family.mults.empty()) out.family.mults.push_back(inst.family.mults[i]);
        }
        out.r = inst.r;
        out.t = inst.t;
        out.primed = inst.primed;
        out.maximal = inst.maximal;
        return out;
    }

    // Low-weight vertex: drop it and every set through it, then restore
    // maximality.
    SystemInstance trimmed;
    trimmed.host = drop_vertex(inst.host, a);
    for (size_t i = 0; i < inst.family.sets.size(); ++i) {
        const auto& set = inst.family.sets[i];
        if (std::find(set.begin(), set.end(), a) != set.end()) continue;
        trimmed.family.sets.push_back(shift_set(set, a));
        if (!inst.family.mults.empty()) trimmed.family.mults.push_back(inst.family.mults[i]);
    }
    trimmed.r = inst.r;
    trimmed.t = inst.t;
    trimmed.primed = inst.primed;
    trimmed.maximal = false;
    return maximalize(trimmed);
}

}  // namespace satlab
