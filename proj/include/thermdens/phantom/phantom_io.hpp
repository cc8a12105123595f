#pragma once

#include <string>

#include <json.hpp>

#include "thermdens/phantom/phantom.hpp"

namespace thermdens::phantom {

// `.phm`: one JSON header line (dims, spacing, seed, geometry, label, plus
// any `extra` keys), then the mask as one byte per voxel and f as float32
// little-endian, both x-fastest.
void save_phantom(const std::string& path, const VoxelPhantom& phantom,
                  const nlohmann::json& extra = nlohmann::json::object());
VoxelPhantom load_phantom(const std::string& path, nlohmann::json* header = nullptr);

}  // namespace thermdens::phantom
