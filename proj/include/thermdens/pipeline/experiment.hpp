#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thermdens/eval/metrics.hpp"
#include "thermdens/model/train.hpp"
#include "thermdens/pipeline/config.hpp"
#include "thermdens/radiomics/features.hpp"

// In-memory building blocks shared by the command-line stages and the
// end-to-end tests.
namespace thermdens::pipeline {

struct SubjectPlan {
    std::string subject_id;
    phantom::Density density = phantom::Density::fatty;
    double target_mean_f = 0.0;
    int group = 0;
    double radius = 0.07;
    std::uint64_t phantom_seed = 0;
};

// Class list shuffled by the population seed; target fractions uniform in
// the class range; geometry group uniform over the configured groups.
std::vector<SubjectPlan> plan_population(const PopulationSpec& population);

phantom::VoxelPhantom build_phantom(const SubjectPlan& plan, const PopulationSpec& population);

struct RenderedSubject {
    std::vector<render::ThermalImage> full;   // 5 views, canonical order
    std::vector<render::ThermalImage> crops;  // 6 regions
};

// Noise is drawn from a stream keyed by (noise seed, visit, subject index),
// so every visit is independent and the same visit at two sigma values
// shares one standard-normal draw. Crops are cut after the noise is added.
RenderedSubject noisy_views(const std::vector<render::ThermalImage>& clean, double sigma, std::uint64_t noise_seed,
                            int visit, std::size_t subject_index);

struct SimulatedSubject {
    SubjectPlan plan;
    phantom::DensityLabel label;
    bioheat::SolveStats stats;
    std::vector<render::ThermalImage> clean;  // 5 noiseless full-field views
};

// Phantom -> steady field -> five clean views.
SimulatedSubject simulate_subject(const SubjectPlan& plan, const ExperimentConfig& config);

struct DeepSetup {
    bool multiview = true;
    preprocess::InputMode mode = preprocess::InputMode::full_field;
};

// Throws ConfigError for "radiomics" or an unknown name.
DeepSetup deep_setup(const std::string& configuration);

// Samples restricted to a list of ids, in list order. Throws DataError if
// an id is unknown.
std::vector<preprocess::SubjectSample> select(const std::vector<preprocess::SubjectSample>& all,
                                              const std::vector<std::string>& ids);

// Scores with the multi-view head or the single-view max rule.
eval::ScoredCohort score_subjects(const std::vector<preprocess::SubjectSample>& subjects,
                                  const model::ModelParams& params, bool multiview);

struct DeepSeedRun {
    model::TrainResult training;
    eval::ScoredCohort test;  // scored with checkpoint-precision parameters
};

DeepSeedRun run_deep_seed(const std::vector<preprocess::SubjectSample>& samples, const eval::Split& split,
                          const DeepSetup& setup, const model::EncoderSpec& encoder, model::TrainConfig train,
                          std::uint64_t seed);

struct ForestSeedRun {
    radiomics::Forest forest;
    eval::ScoredCohort test;
};

// Forest fitted on the training split only (validation is not used),
// forest seed = evaluation seed.
ForestSeedRun run_forest_seed(const std::vector<radiomics::FeatureVector>& features, const std::vector<int>& groups,
                              const eval::Split& split, radiomics::ForestConfig forest, std::uint64_t seed);

}  // namespace thermdens::pipeline
