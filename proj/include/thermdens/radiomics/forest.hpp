#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace thermdens::radiomics {

struct ForestConfig {
    int trees = 100;
    int max_depth = 0;       // 0 = grow until pure
    int max_features = 0;    // candidates per split; 0 = floor(sqrt(p))
    bool bootstrap = true;
    std::uint64_t seed = 0;
    unsigned workers = 1;    // trees are grown independently; results do not depend on this

    void validate() const;
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;     // x[feature] <= threshold
    int right = -1;
    int negatives = 0;
    int positives = 0;

    double positive_fraction() const noexcept {
        return static_cast<double>(positives) / static_cast<double>(positives + negatives);
    }
};

struct Tree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::vector<std::uint8_t> in_bag;  // per training row, set when drawn at least once

    double predict(std::span<const double> x) const;
};

struct Forest {
    ForestConfig config;
    std::size_t feature_count = 0;
    std::vector<Tree> trees;
};

// Gini-split classification trees on bootstrap samples. Throws DataError
// for fewer than two rows, ragged rows, non-binary labels or a single
// class.
Forest train_forest(const std::vector<std::vector<double>>& features, std::span<const int> labels,
                    const ForestConfig& config);

// Mean over trees of the leaf positive-class fraction. Throws ShapeError on
// a feature-length mismatch.
double forest_predict(const Forest& forest, std::span<const double> x);

// Fraction of rows whose out-of-bag score (trees that did not draw the
// row) thresholded at 0.5 matches the label; rows never out of bag are
// skipped. Returns NaN when no row is out of bag.
double oob_accuracy(const Forest& forest, const std::vector<std::vector<double>>& features,
                    std::span<const int> labels);

double accuracy(const Forest& forest, const std::vector<std::vector<double>>& features, std::span<const int> labels);

nlohmann::json to_json(const ForestConfig& config);
ForestConfig forest_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Forest& forest);
Forest forest_from_json(const nlohmann::json& j);

}  // namespace thermdens::radiomics
