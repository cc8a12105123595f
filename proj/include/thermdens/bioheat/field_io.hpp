#pragma once

#include <string>

#include <json.hpp>

#include "thermdens/bioheat/solver.hpp"

namespace thermdens::bioheat {

nlohmann::json to_json(const BoundaryConditions& bc);
nlohmann::json to_json(const BloodConstants& blood);
nlohmann::json to_json(const SolveStats& stats);

// `.tfd`: JSON header line (dims, boundary conditions, blood constants,
// solver stats, extra keys) followed by float32 LE values, NaN outside the
// mask, x-fastest.
void save_field(const std::string& path, const TemperatureField& field, double spacing,
                const BoundaryConditions& bc, const BloodConstants& blood, const SolveStats& stats,
                const nlohmann::json& extra = nlohmann::json::object());
TemperatureField load_field(const std::string& path, nlohmann::json* header = nullptr);

}  // namespace thermdens::bioheat
