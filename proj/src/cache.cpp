#include "satlab/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "satlab/saturation.hpp"
#include "satlab/serialize.hpp"

namespace satlab {

namespace {

std::string key_of(const std::string& kind,
                   std::vector<std::pair<std::string, long long>> params,
                   const EnumerationBudget& budget) {
    std::sort(params.begin(), params.end());
    std::ostringstream os;
    os << kind;
    for (const auto& [name, v] : params) os << '|' << name << '=' << v;
    os << '|' << budget_fingerprint(budget);
    return os.str();
}

std::map<std::string, long long> param_map(const ExtremalRecord& rec) {
    return {rec.params.begin(), rec.params.end()};
}

}  // namespace

std::string budget_fingerprint(const EnumerationBudget& b) {
    std::ostringstream os;
    os << "v" << b.max_vertices << ",vf" << b.max_vertices_filtered << ",c"
       << b.max_clique_nodes;
    return os.str();
}

bool witness_validates(const ExtremalRecord& rec) {
    if (!rec.value) return true;  // nothing a witness could certify
    auto p = param_map(rec);
    try {
        if (rec.kind == "sat" || rec.kind == "tsat" || rec.kind == "tsat_min_deg") {
            if (!rec.witness_graph) return false;
            const Graph& g = *rec.witness_graph;
            if (g.edge_count() != *rec.value) return false;
            int r = static_cast<int>(p.at("r"));
            if (static_cast<long long>(g.size()) != p.at("n")) return false;
            if (rec.kind == "sat") return is_saturated(g, r);
            std::optional<int> t;
            if (rec.kind == "tsat_min_deg") t = static_cast<int>(p.at("t"));
            return is_tsat_witness(g, r, t);
        }
        if (rec.kind == "s_rt" || rec.kind == "s3t_prime") {
            if (!rec.witness_system) return false;
            const SystemInstance& inst = *rec.witness_system;
            if (static_cast<long long>(inst.host.size()) != p.at("m")) return false;
            if (static_cast<long long>(inst.family.total_instances()) != *rec.value)
                return false;
            return check_system(inst).valid();
        }
        if (rec.kind == "e_rt" || rec.kind == "e_rt_maximal" || rec.kind == "e3t_doubleprime") {
            if (!rec.witness_system) return false;
            const SystemInstance& inst = *rec.witness_system;
            if (inst.host.edge_count() != *rec.value) return false;
            if (static_cast<long long>(inst.family.total_instances()) != p.at("s"))
                return false;
            if (!check_system(inst).valid()) return false;
            if (rec.kind == "e_rt_maximal") return check_maximal(inst).maximal;
            return true;
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;  // value-only kinds (m_shatter, ...) carry no witness
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

ResultCache ResultCache::from_environment() {
    const char* env = std::getenv("SATLAB_CACHE");
    return ResultCache(env ? env : "satlab_cache.jsonl");
}

std::optional<ExtremalRecord> ResultCache::lookup(
    const std::string& kind, const std::vector<std::pair<std::string, long long>>& params,
    const EnumerationBudget& budget) const {
    if (path_.empty()) return std::nullopt;
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::string want = key_of(kind, params, budget);
    std::string line;
    std::optional<ExtremalRecord> hit;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            std::string stored_budget = j.value("budget", "");
            ExtremalRecord rec = record_from_json(j.at("record"));
            std::ostringstream os;
            os << rec.kind;
            auto sorted = rec.params;
            std::sort(sorted.begin(), sorted.end());
            for (const auto& [name, v] : sorted) os << '|' << name << '=' << v;
            os << '|' << stored_budget;
            if (os.str() != want) continue;
            if (!witness_validates(rec)) {
                std::cerr << "satlab: cache entry at " << path_ << ":" << lineno
                          << " failed witness re-validation, ignoring\n";
                continue;
            }
            hit = rec;  // keep the latest matching entry
        } catch (const std::exception& e) {
            std::cerr << "satlab: skipping corrupt cache line " << path_ << ":" << lineno
                      << " (" << e.what() << ")\n";
        }
    }
    return hit;
}

void ResultCache::store(const ExtremalRecord& rec, const EnumerationBudget& budget) {
    if (path_.empty()) return;
    nlohmann::json j;
    j["budget"] = budget_fingerprint(budget);
    j["record"] = record_to_json(rec);
    j["tool_version"] = "satlab 1.0";
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "satlab: cannot write cache file " << path_ << "\n";
        return;
    }
    out << j.dump() << '\n';
}

}  // namespace satlab
