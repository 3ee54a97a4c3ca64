// satlab: construct, verify, search and tabulate twin-free saturated graphs
// and their associated host/family systems.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "satlab/cache.hpp"
#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/graph6.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/serialize.hpp"
#include "satlab/systems.hpp"

using namespace satlab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitNonexistent = 4;

struct Params {
    std::optional<int> n, m, s, r, t, l, k;
};

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw CLI::ValidationError(std::string("missing required flag --") + flag);
    return *v;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int run_construct(const std::string& family, const Params& p, bool verify) {
    try {
        std::optional<Graph> graph;
        std::optional<SystemInstance> system;
        if (family == "ehm") {
            graph = ehm_graph(require(p.n, "n"), require(p.r, "r"));
        } else if (family == "twinfree") {
            graph = twin_free_saturated(require(p.n, "n"), require(p.r, "r"));
        } else if (family == "system") {
            system = system_family(require(p.t, "t"), require(p.l, "l"));
        } else if (family == "lifted") {
            system = lifted_family(require(p.t, "t"), require(p.l, "l"));
        } else if (family == "tsat_witness") {
            graph = tsat_upper_witness(require(p.n, "n"));
        } else if (family == "e34_witness") {
            system = e34_upper_witness(require(p.s, "s"));
        } else if (family == "e35_witness") {
            system = e35_upper_witness(require(p.s, "s"));
        } else if (family == "min_deg_witness") {
            graph = tsat_min_deg_upper_witness(require(p.n, "n"), require(p.r, "r"),
                                               require(p.t, "t"));
        } else if (family == "c5" || family == "c7_complement" ||
                   family == "c8_two_chords_complement" || family == "wagner" ||
                   family == "petersen") {
            graph = named_small(family);
        } else {
            std::cerr << "satlab: unknown construction family '" << family << "'\n";
            return kExitUsage;
        }
        if (verify) {
            bool ok = true;
            if (graph) {
                if (family == "twinfree" || family == "tsat_witness")
                    ok = is_tsat_witness(*graph, p.r.value_or(3), std::nullopt);
                else if (family == "min_deg_witness")
                    ok = is_tsat_witness(*graph, *p.r, p.t);
                else if (family == "ehm")
                    ok = is_saturated(*graph, *p.r);
            } else if (system) {
                ok = check_system(*system).valid();
                if (ok && system->maximal) ok = check_maximal(*system).maximal;
            }
            if (!ok) {
                std::cerr << "satlab: constructed object failed verification\n";
                return kExitVerify;
            }
        }
        if (graph)
            std::cout << graph6_encode(*graph) << "\n";
        else
            std::cout << system_to_json(*system).dump() << "\n";
        return kExitOk;
    } catch (const NonexistentError& e) {
        std::cerr << "satlab: nonexistent: " << e.reason << "\n";
        return kExitNonexistent;
    } catch (const std::exception& e) {
        std::cerr << "satlab: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_verify(const std::string& input_path, const Params& p, bool twin_free, bool maximal) {
    std::string raw;
    try {
        raw = trim(read_input(input_path));
    } catch (const std::exception& e) {
        std::cerr << "satlab: " << e.what() << "\n";
        return kExitUsage;
    }
    json report;
    bool pass = true;
    int r = p.r.value_or(3);
    try {
        if (!raw.empty() && raw[0] == '{') {
            SystemInstance inst = system_from_json(json::parse(raw));
            if (p.r) inst.r = *p.r;
            if (p.t) inst.t = *p.t;
            SystemReport sys = check_system(inst);
            report["kind"] = "system";
            report["valid"] = sys.valid();
            report["host_free"] = sys.host_free;
            report["sets_ok"] = sys.sets_ok;
            report["pairwise_ok"] = sys.pairwise_ok;
            report["shape_ok"] = sys.shape_ok;
            if (!sys.shape_error.empty()) report["shape_error"] = sys.shape_error;
            if (!sys.host_free) report["host_clique"] = sys.host_clique;
            if (!sys.sets_ok) {
                report["bad_set"] = sys.bad_set;
                report["bad_outside_vertex"] = sys.bad_outside_vertex;
            }
            if (!sys.pairwise_ok)
                report["bad_pair"] = {sys.bad_pair.first, sys.bad_pair.second};
            pass = sys.valid();
            if (maximal && pass) {
                MaximalityReport mr = check_maximal(inst);
                report["maximal"] = mr.maximal;
                if (!mr.maximal && mr.violating_edge)
                    report["violating_edge"] = {mr.violating_edge->first,
                                                mr.violating_edge->second};
                pass = mr.maximal;
            }
        } else {
            Graph g = graph6_decode(raw);
            SaturationReport sat = saturation_report(g, r);
            report["kind"] = "graph";
            report["n"] = g.size();
            report["edges"] = g.edge_count();
            report["clique_free"] = sat.is_free;
            report["saturated"] = sat.is_saturated;
            if (!sat.is_free) report["clique_witness"] = sat.clique_witness;
            if (sat.is_free && !sat.is_saturated && sat.violating_pair)
                report["violating_pair"] = {sat.violating_pair->first,
                                            sat.violating_pair->second};
            pass = sat.is_free && sat.is_saturated;
            if (twin_free) {
                bool tf = is_twin_free(g);
                report["twin_free"] = tf;
                pass = pass && tf;
            }
            if (p.t) {
                bool witness = is_tsat_witness(g, r, p.t);
                report["min_degree"] = g.min_degree();
                report["min_degree_witness"] = witness;
                pass = pass && witness;
            }
        }
    } catch (const Graph6ParseError& e) {
        std::cerr << "satlab: parse error at byte " << e.offset << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const json::parse_error& e) {
        std::cerr << "satlab: parse error at byte " << e.byte << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "satlab: " << e.what() << "\n";
        return kExitUsage;
    }
    report["pass"] = pass;
    std::cout << report.dump() << "\n";
    return pass ? kExitOk : kExitVerify;
}

int run_search(const std::string& kind, const Params& p, const EnumerationBudget& budget,
               bool no_cache) {
    std::vector<std::pair<std::string, long long>> key_params;
    auto add = [&](const char* name, const std::optional<int>& v) {
        if (v) key_params.emplace_back(name, *v);
    };
    add("n", p.n);
    add("m", p.m);
    add("s", p.s);
    add("r", p.r);
    add("t", p.t);
    add("k", p.k);

    ResultCache cache = ResultCache::from_environment();
    if (!no_cache) {
        if (auto hit = cache.lookup(kind, key_params, budget)) {
            json j = record_to_json(*hit);
            j["cached"] = true;
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
    }
    ExtremalRecord rec;
    try {
        if (kind == "sat")
            rec = sat_min(require(p.n, "n"), require(p.r, "r"), budget);
        else if (kind == "tsat")
            rec = tsat_min(require(p.n, "n"), require(p.r, "r"), std::nullopt, budget);
        else if (kind == "tsat_min_deg")
            rec = tsat_min(require(p.n, "n"), require(p.r, "r"), require(p.t, "t"), budget);
        else if (kind == "s_rt")
            rec = s_rt(require(p.m, "m"), require(p.r, "r"), require(p.t, "t"), budget);
        else if (kind == "s3t_prime")
            rec = s3t_prime(require(p.m, "m"), require(p.t, "t"), budget);
        else if (kind == "e_rt")
            rec = e_rt(require(p.s, "s"), require(p.r, "r"), require(p.t, "t"), false, budget);
        else if (kind == "e_rt_maximal")
            rec = e_rt(require(p.s, "s"), require(p.r, "r"), require(p.t, "t"), true, budget);
        else if (kind == "e3t_doubleprime")
            rec = e3t_doubleprime(require(p.s, "s"), require(p.t, "t"), budget);
        else if (kind == "m_shatter")
            rec = m_shatter(require(p.k, "k"));
        else {
            std::cerr << "satlab: unknown search kind '" << kind << "'\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "satlab: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!no_cache) cache.store(rec, budget);
    json j = record_to_json(rec);
    j["cached"] = false;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

std::string cell(const std::optional<long long>& v, const std::string& status) {
    if (v) return std::to_string(*v);
    return status;
}

int run_report(const std::string& table, const EnumerationBudget& budget) {
    if (table == "existence") {
        std::cout << "twin-free saturation existence, r=3 (n | searched | construction)\n";
        for (int n = 0; n <= 8; ++n) {
            ExtremalRecord rec = tsat_min(n, 3, std::nullopt, budget);
            std::string constructed;
            try {
                Graph g = twin_free_saturated(n, 3);
                constructed = std::to_string(g.edge_count()) + " edges";
            } catch (const NonexistentError&) {
                constructed = "nonexistent";
            }
            std::cout << n << " | " << cell(rec.value, rec.status) << " | " << constructed
                      << "\n";
        }
        return kExitOk;
    }
    if (table == "s33") {
        std::cout << "max family size, r=3 t=3 (m | searched | formula floor((m-1)/2) | "
                     "construction)\n";
        for (int m = 3; m <= 7; ++m) {
            ExtremalRecord rec = s_rt(m, 3, 3, budget);
            long long formula = (m - 1) / 2;
            long long bound = 0;
            if (m >= 3) {
                SystemInstance inst = lifted_family(2, m - 1);
                bound = static_cast<long long>(inst.family.total_instances());
            }
            std::string flag =
                (rec.value && *rec.value != formula) ? "  <-- mismatch" : "";
            std::cout << m << " | " << cell(rec.value, rec.status) << " | " << formula
                      << " | " << bound << flag << "\n";
        }
        return kExitOk;
    }
    if (table == "e33") {
        std::cout << "min host edges, r=3 t=3 (s | searched | formula s^2-s | construction)\n";
        for (int s = 1; s <= 3; ++s) {
            ExtremalRecord rec = e_rt(s, 3, 3, false, budget);
            long long formula = static_cast<long long>(s) * s - s;
            SystemInstance inst = lifted_family(2, 2 * s);
            long long bound = inst.host.edge_count();
            std::string flag =
                (rec.value && *rec.value != formula) ? "  <-- mismatch" : "";
            std::cout << s << " | " << cell(rec.value, rec.status) << " | " << formula
                      << " | " << bound << flag << "\n";
        }
        return kExitOk;
    }
    std::cerr << "satlab: unknown table '" << table
              << "' (expected existence, s33 or e33)\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"satlab: twin-free saturated graphs and host/family systems"};
    app.require_subcommand(1);

    Params p;
    EnumerationBudget budget;
    bool no_cache = false, verify_flag = false, twin_free = false, maximal = false;
    std::string family, kind, table, input_path;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--n", p.n, "number of vertices");
        cmd->add_option("--m", p.m, "host size");
        cmd->add_option("--s", p.s, "family size");
        cmd->add_option("--r", p.r, "clique order");
        cmd->add_option("--t", p.t, "set size / min degree");
        cmd->add_option("--l", p.l, "construction scale");
        cmd->add_option("--k", p.k, "sequence length");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-max-vertices", budget.max_vertices,
                        "unfiltered enumeration vertex cap");
        cmd->add_option("--budget-max-vertices-filtered", budget.max_vertices_filtered,
                        "filtered enumeration vertex cap");
        cmd->add_option("--budget-clique-nodes", budget.max_clique_nodes,
                        "clique search node cap");
        cmd->add_option("--budget-wall-seconds", budget.wall_seconds, "wall-clock cap");
    };

    CLI::App* construct = app.add_subcommand("construct", "emit a named construction");
    construct->add_option("family", family, "construction name")->required();
    add_params(construct);
    construct->add_flag("--verify", verify_flag, "re-check the defining predicate");

    CLI::App* verify = app.add_subcommand("verify", "check a graph6 string or system JSON");
    verify->add_option("input", input_path, "input file, or - for stdin");
    add_params(verify);
    verify->add_flag("--twin-free", twin_free, "also require twin-freeness");
    verify->add_flag("--maximal", maximal, "also require system maximality");

    CLI::App* search = app.add_subcommand("search", "exhaustive extremal search");
    search->add_option("kind", kind, "sat | tsat | tsat_min_deg | s_rt | s3t_prime | e_rt | "
                                     "e_rt_maximal | e3t_doubleprime | m_shatter")
        ->required();
    add_params(search);
    add_budget(search);
    search->add_flag("--no-cache", no_cache, "bypass the results cache");

    CLI::App* report = app.add_subcommand("report", "comparison tables");
    report->add_option("table", table, "existence | s33 | e33")->required();
    add_budget(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (construct->parsed()) return run_construct(family, p, verify_flag);
    if (verify->parsed()) return run_verify(input_path, p, twin_free, maximal);
    if (search->parsed()) return run_search(kind, p, budget, no_cache);
    if (report->parsed()) return run_report(table, budget);
    return kExitUsage;
}
