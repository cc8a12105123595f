#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermdens/bioheat/solver.hpp"
#include "thermdens/model/train.hpp"
#include "thermdens/phantom/tissue.hpp"
#include "thermdens/radiomics/forest.hpp"
#include "thermdens/render/renderer.hpp"

namespace thermdens::pipeline {

struct GroupSpec {
    int tag = 0;
    double radius = 0.07;
};

struct PopulationSpec {
    int fatty = 100;
    int dense = 100;
    std::uint64_t seed = 1;
    double spacing = 0.0025;
    std::vector<GroupSpec> groups{{0, 0.06}, {1, 0.08}};
    double smoothness_scale = 0.015;
    double heterogeneity = 0.15;
    double slab_thickness = 0.02;
};

struct NoiseSpec {
    double sigma = 0.0;                          // visit-1 pixel noise, C
    std::vector<double> visit2_sigmas{0.0, 0.05, 0.2};
    int stability_subjects = 50;                 // first N subjects by id; 0 = all
    std::uint64_t seed = 7;
};

// Configuration names, in comparison-table order.
inline const std::vector<std::string> kAllConfigurations{"multiview_full", "multiview_cropped", "singleview_full",
                                                         "singleview_cropped", "radiomics"};

std::string display_name(const std::string& configuration);

struct ExperimentConfig {
    std::string output_dir = "runs/default";
    unsigned workers = 1;

    phantom::TissuePair tissues = phantom::table1_properties();
    bioheat::BloodConstants blood;
    bioheat::BoundaryConditions boundary;
    bioheat::SolverConfig solver{1e-8, 50000, bioheat::SolverMethod::cg, 1.8};

    PopulationSpec population;
    render::RenderConfig render;
    NoiseSpec noise;
    preprocess::PreprocessConfig preprocess;
    model::EncoderSpec encoder;
    model::TrainConfig train;  // its seed is replaced by each evaluation seed
    radiomics::ForestConfig forest;

    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::string> configurations = kAllConfigurations;

    void validate() const;

    // Every setting that can change a result. Output location and worker
    // count are excluded.
    nlohmann::json to_json() const;

    // FNV-1a of the canonical (sorted-key, compact) dump of to_json().
    std::string hash() const;

    // Missing keys take defaults; unknown keys are a ConfigError.
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
};

}  // namespace thermdens::pipeline
