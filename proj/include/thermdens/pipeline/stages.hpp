#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thermdens/core/errors.hpp"
#include "thermdens/pipeline/config.hpp"
#include "thermdens/pipeline/manifest.hpp"

namespace thermdens::pipeline {

// A stage could not complete: missing inputs, failed solves, a seed that
// failed to train. Maps to exit code 2.
class StageError : public Error {
public:
    using Error::Error;
};

struct StageResult {
    bool skipped = false;
    std::string summary;
};

// Stage names in pipeline order; each doubles as its CLI command.
const std::vector<std::string>& stage_names();

// One experiment directory. Completed stages are recorded in
// `stages.csv` together with the config hash; a stage already recorded
// for the current hash is skipped unless `force` is set.
class Run {
public:
    Run(ExperimentConfig config, bool force = false, std::ostream* log = nullptr);

    const ExperimentConfig& config() const noexcept { return config_; }
    const std::string& root() const noexcept { return root_; }
    const std::string& config_hash() const noexcept { return hash_; }
    bool force() const noexcept { return force_; }

    std::string path(const std::string& relative) const;
    bool is_complete(const std::string& stage) const;
    void mark_complete(const std::string& stage);
    // Throws StageError naming the command that produces the missing stage.
    void require(const std::string& stage) const;
    void log(const std::string& line) const;

    StageResult run_stage(const std::string& name);

private:
    ExperimentConfig config_;
    std::string root_;
    std::string hash_;
    bool force_;
    std::ostream* log_;
};

StageResult stage_phantom_gen(Run& run);
StageResult stage_solve(Run& run);
StageResult stage_render(Run& run);
StageResult stage_dataset(Run& run);
StageResult stage_train(Run& run);
StageResult stage_baseline(Run& run);
StageResult stage_eval(Run& run);
StageResult stage_stability(Run& run);
StageResult stage_report(Run& run);

}  // namespace thermdens::pipeline
