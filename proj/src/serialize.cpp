#include "satlab/serialize.hpp"

#include <stdexcept>

#include "satlab/graph6.hpp"

namespace satlab {

using nlohmann::json;

json system_to_json(const SystemInstance& inst) {
    json j;
    j["host"] = graph6_encode(inst.host);
    j["sets"] = inst.family.sets;
    j["mults"] = inst.family.mults.empty()
                     ? std::vector<int>(inst.family.sets.size(), 1)
                     : inst.family.mults;
    j["r"] = inst.r;
    if (inst.t)
        j["t"] = *inst.t;
    else
        j["t"] = nullptr;
    j["primed"] = inst.primed;
    j["maximal"] = inst.maximal;
    return j;
}

SystemInstance system_from_json(const json& j) {
    SystemInstance inst;
    inst.host = graph6_decode(j.at("host").get<std::string>());
    inst.family.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    if (j.contains("mults") && !j["mults"].is_null()) {
        inst.family.mults = j["mults"].get<std::vector<int>>();
        bool all_one = true;
        for (int m : inst.family.mults)
            if (m != 1) all_one = false;
        if (all_one) inst.family.mults.clear();
    }
    inst.r = j.value("r", 3);
    if (j.contains("t") && !j["t"].is_null()) inst.t = j["t"].get<int>();
    inst.primed = j.value("primed", false);
    inst.maximal = j.value("maximal", false);
    return inst;
}

json record_to_json(const ExtremalRecord& rec) {
    json j;
    j["kind"] = rec.kind;
    json params = json::object();
    for (const auto& [name, v] : rec.params) params[name] = v;
    j["params"] = params;
    if (rec.value)
        j["value"] = *rec.value;
    else
        j["value"] = nullptr;
    j["status"] = rec.status;
    j["method"] = rec.method;
    j["budget_spent"] = rec.budget_spent;
    if (rec.witness_graph) j["witness_graph"] = graph6_encode(*rec.witness_graph);
    if (rec.witness_system) j["witness_system"] = system_to_json(*rec.witness_system);
    return j;
}

ExtremalRecord record_from_json(const json& j) {
    ExtremalRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    for (const auto& [name, v] : j.at("params").items())
        rec.params.emplace_back(name, v.get<long long>());
    if (j.contains("value") && !j["value"].is_null()) rec.value = j["value"].get<long long>();
    rec.status = j.value("status", "ok");
    rec.method = j.value("method", "exhaustive");
    rec.budget_spent = j.value("budget_spent", 0LL);
    if (j.contains("witness_graph"))
        rec.witness_graph = graph6_decode(j["witness_graph"].get<std::string>());
    if (j.contains("witness_system")) rec.witness_system = system_from_json(j["witness_system"]);
    return rec;
}

std::string record_to_line(const ExtremalRecord& rec) { return record_to_json(rec).dump(); }

ExtremalRecord record_from_line(const std::string& line) {
    return record_from_json(json::parse(line));
}

}  // namespace satlab
