#pragma once

#include <string>

#include <json.hpp>

#include "thermdens/render/thermal_image.hpp"

namespace thermdens::render {

// `.tmap`: the line "TMAP1", one JSON header line (width, height, angle,
// subject_id, plus crop placement and extra keys), then float32 LE pixels,
// row-major, NaN where invalid. Cap flags are not stored, so crops are
// cut before an image is saved.
void save_tmap(const std::string& path, const ThermalImage& image,
               const nlohmann::json& extra = nlohmann::json::object());
ThermalImage load_tmap(const std::string& path, nlohmann::json* header = nullptr);

}  // namespace thermdens::render
