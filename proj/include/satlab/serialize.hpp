#pragma once

#include <string>

#include "json.hpp"
#include "satlab/search.hpp"
#include "satlab/systems.hpp"

namespace satlab {

/// {host: graph6, sets: [[ints]], mults: [ints], r, t, primed, maximal}
nlohmann::json system_to_json(const SystemInstance& inst);
SystemInstance system_from_json(const nlohmann::json& j);

/// One JSON object per record; witnesses embedded as graph6 or system JSON.
/// Absent value plus a status string distinguishes nonexistent from
/// budget_exceeded.
nlohmann::json record_to_json(const ExtremalRecord& rec);
ExtremalRecord record_from_json(const nlohmann::json& j);

std::string record_to_line(const ExtremalRecord& rec);
ExtremalRecord record_from_line(const std::string& line);

}  // namespace satlab
