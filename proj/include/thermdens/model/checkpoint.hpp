#pragma once

#include <string>

#include <json.hpp>

#include "thermdens/model/train.hpp"

namespace thermdens::model {

nlohmann::json to_json(const EncoderSpec& spec);
EncoderSpec encoder_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrainConfig& config);
TrainConfig train_config_from_json(const nlohmann::json& j);

// One JSON metadata line (encoder spec, train config, seed, epoch, tensor
// layout, extra keys) followed by all parameters as float32 LE in layout
// order.
void save_checkpoint(const std::string& path, const ModelParams& params, const TrainConfig& config, int epoch,
                     const nlohmann::json& extra = nlohmann::json::object());
ModelParams load_checkpoint(const std::string& path, nlohmann::json* header = nullptr);

// Parameters as they read back from a checkpoint (float32-rounded).
ModelParams quantize_like_checkpoint(const ModelParams& params);

}  // namespace thermdens::model
