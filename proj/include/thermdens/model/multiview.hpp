#pragma once

#include <span>
#include <string>
#include <vector>

#include "thermdens/model/encoder.hpp"
#include "thermdens/preprocess/preprocess.hpp"

namespace thermdens::model {

struct Prediction {
    std::string subject_id;
    double score = 0.5;  // in (0, 1)
    double logit = 0.0;
};

// Element-wise mean of the latents. The sum runs over the latents in
// lexicographic order so the result is bit-identical under any permutation
// of the input list. Throws DataError on an empty list or ragged lengths.
std::vector<double> pool_views(std::span<const std::vector<double>> latents);

double sigmoid(double x) noexcept;

// sigma(w.z + b). Throws ShapeError if |w| != |z|.
Prediction predict_head(std::span<const double> z, std::span<const double> w, double b);

inline constexpr double kLossEpsilon = 1e-7;

// Binary cross-entropy with y_hat clamped to [eps, 1 - eps].
double bce_loss(int y, double y_hat);

// One training/scoring unit: a subject's views (multi-view) or a single
// view carrying its subject's label (single-view).
struct Example {
    std::string id;
    std::vector<const preprocess::ViewImage*> views;
    int label = 0;
};

std::vector<Example> multiview_examples(std::span<const preprocess::SubjectSample> subjects);
std::vector<Example> singleview_examples(std::span<const preprocess::SubjectSample> subjects);

// Score of one example through encode -> pool -> head.
Prediction forward(const Example& example, const ModelParams& params);

// Mean BCE over the batch, forward only.
double batch_loss(std::span<const Example> batch, const ModelParams& params);

struct Gradients {
    std::vector<double> values;  // same layout as ModelParams::values
    double loss = 0.0;           // mean batch BCE
};

// Exact gradients of the mean batch BCE with respect to every parameter.
// Throws Error naming the first parameter whose gradient is not finite.
Gradients gradients(std::span<const Example> batch, const ModelParams& params);
Gradients gradients(std::span<const preprocess::SubjectSample> batch, const ModelParams& params);

// Throws DataError unless the subject carries 5 (full-field) or 6
// (cropped) views.
Prediction predict_subject_multiview(const preprocess::SubjectSample& subject, const ModelParams& params);

// Max over per-view scores of a model trained on single views.
Prediction predict_subject_singleview_max(const preprocess::SubjectSample& subject, const ModelParams& params);

}  // namespace thermdens::model
