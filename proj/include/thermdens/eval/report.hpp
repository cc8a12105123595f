#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermdens/eval/metrics.hpp"

namespace thermdens::eval {

struct CohortMetrics {
    std::size_t n = 0;
    std::size_t positives = 0;
    double prevalence = 0.0;
    double auroc = 0.0;
    double auprc = 0.0;
    double u = 0.0;
    double u_greater = 0.0;
    double p = 1.0;
    PValueMethod method = PValueMethod::normal;
};

CohortMetrics evaluate_cohort(std::span<const ScoredSubject> cohort);

struct Summary {
    double mean = 0.0;
    double std = 0.0;  // population (1/N)
};

Summary summarize(std::span<const double> values);

struct StratumResult {
    int group = 0;
    std::size_t n = 0;
    std::size_t positives = 0;
    bool flagged = false;  // single-class stratum, metrics not computed
    CohortMetrics metrics;
};

// Metrics within each group tag independently, ordered by tag.
std::vector<StratumResult> stratified_evaluate(std::span<const ScoredSubject> cohort);

struct SeedResult {
    std::uint64_t seed = 0;
    CohortMetrics metrics;
    std::vector<StratumResult> strata;
    ScoredCohort test_scores;
};

struct StratumSummary {
    int group = 0;
    std::size_t seeds_evaluated = 0;
    std::size_t seeds_flagged = 0;
    Summary auroc;
    Summary auprc;
    Summary prevalence;
};

struct MetricsReport {
    std::string configuration;
    std::vector<SeedResult> seeds;
    Summary auroc;
    Summary auprc;
    double p_max = 1.0;
    std::size_t seeds_significant = 0;  // per-seed p < 0.05
    CohortMetrics pooled;               // all test predictions across seeds
    std::vector<StratumSummary> strata;
};

// Train-and-score closure for one seed: returns the scored test split.
using SeedPipeline = std::function<ScoredCohort(std::uint64_t seed)>;

// Runs the closure for every seed (on up to `workers` threads), then
// reduces in seed-list order. A failing seed aborts with its seed named.
MetricsReport multi_seed_evaluate(const std::string& configuration, std::span<const std::uint64_t> seeds,
                                  const SeedPipeline& pipeline, unsigned workers = 1);

// Re-derives every aggregate from the per-seed test scores.
MetricsReport build_report(const std::string& configuration, std::vector<SeedResult> seeds);

nlohmann::json to_json(const CohortMetrics& m);
nlohmann::json to_json(const MetricsReport& r);
nlohmann::json to_json(const StabilityResult& s);

// One row per seed plus mean and std rows.
std::string report_csv(const MetricsReport& r);

// Comparison table: one row per configuration with AUROC and AUPRC as
// "mean ± std" and the largest per-seed p-value.
std::string comparison_table_csv(std::span<const MetricsReport> reports);

// Histogram of pooled test scores per class over [0, 1].
struct ScoreHistogram {
    std::vector<double> edges;  // bins + 1
    std::vector<std::size_t> fatty;
    std::vector<std::size_t> dense;
};

ScoreHistogram score_histogram(std::span<const ScoredSubject> scores, int bins = 20);
std::string histogram_csv(const ScoreHistogram& h);
std::string histogram_svg(const ScoreHistogram& h, const std::string& title);

}  // namespace thermdens::eval
