#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thermdens/model/multiview.hpp"

namespace thermdens::model {

enum class OptimizerKind { adam, sgd };

std::string to_string(OptimizerKind k);
OptimizerKind optimizer_from_string(const std::string& s);

struct TrainConfig {
    double learning_rate = 1e-3;
    int batch_size = 8;
    int epochs = 60;
    OptimizerKind optimizer = OptimizerKind::adam;
    std::uint64_t seed = 0;
    int patience = 10;  // epochs without validation improvement
    int start_from_epoch = 40;  // validation loss is monitored only after this epoch

    void validate() const;
};

struct EpochLog {
    int epoch = 0;
    double train_loss = 0.0;
    double val_loss = 0.0;
};

struct TrainResult {
    ModelParams params;  // parameters of the best validation epoch
    std::vector<EpochLog> log;
    int best_epoch = 0;
};

// Mini-batch training with a seed-derived example order per epoch and early
// stopping on validation loss. Single-threaded and bit-reproducible for a
// fixed (spec, config, data). Throws DataError for an empty split or a
// training split with one class.
TrainResult train(std::span<const Example> train_set, std::span<const Example> val_set, const EncoderSpec& spec,
                  const TrainConfig& config);

// Training log as CSV (epoch,train_loss,val_loss).
std::string log_csv(std::span<const EpochLog> log);

}  // namespace thermdens::model
