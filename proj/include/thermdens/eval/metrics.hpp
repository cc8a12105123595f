#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace thermdens::eval {

struct ScoredSubject {
    std::string subject_id;
    double score = 0.0;
    int label = 0;  // 1 = dense
    int group = 0;
};

using ScoredCohort = std::vector<ScoredSubject>;

// Throws DataError on duplicate subject ids or labels other than 0/1.
void validate_cohort(std::span<const ScoredSubject> cohort);

// P(score_pos > score_neg) + 0.5 P(tie). Throws DataError unless both
// classes are present.
double auroc(std::span<const ScoredSubject> cohort);

// Average precision: subjects ranked by descending score, equal scores
// broken by ascending subject id; sum of precision at every positive
// divided by the number of positives. Throws DataError with no positives.
double auprc(std::span<const ScoredSubject> cohort);

enum class PValueMethod { exact, normal };

std::string to_string(PValueMethod m);

struct MannWhitney {
    double u = 0.0;          // U of the first sample: pairs with a > b, ties 1/2
    double u_greater = 0.0;  // U of the second sample, n1*n2 - u
    double p = 1.0;          // two-sided, in (0, 1]
    PValueMethod method = PValueMethod::normal;
};

// Two-sided test of `a` (fatty) against `b` (dense). Uses the exact null
// distribution when min(|a|, |b|) <= 8 and there are no ties, and the
// tie-corrected normal approximation with continuity correction otherwise.
// Throws DataError if either sample is empty.
MannWhitney mann_whitney_u(std::span<const double> a, std::span<const double> b);

// Exact two-sided p for a U statistic without ties, from the null
// distribution of U over all C(n1 + n2, n1) rank assignments.
double mann_whitney_exact_p(double u, std::size_t n1, std::size_t n2);

// Tie-corrected normal approximation. `tie_term` is sum(t^3 - t) over tie
// groups of the pooled sample.
double mann_whitney_normal_p(double u, std::size_t n1, std::size_t n2, double tie_term);

// Label 0 scores against label 1 scores.
MannWhitney mann_whitney_u(std::span<const ScoredSubject> cohort);

struct Split {
    std::vector<std::string> train;
    std::vector<std::string> val;
    std::vector<std::string> test;
};

// Seeded permutation cut at round(0.6 n) and round(0.8 n). Throws DataError
// for fewer than 10 subjects or duplicate ids.
Split split_subjects(std::span<const std::string> subject_ids, std::uint64_t seed);

struct StabilityResult {
    double mean_abs_diff = 0.0;
    double variance_abs_diff = 0.0;  // population variance
    std::vector<std::pair<std::string, double>> per_subject;  // sorted by id
};

// Per-subject |score_visit2 - score_visit1|. Throws DataError unless both
// cohorts cover the same subject ids.
StabilityResult stability_metrics(std::span<const ScoredSubject> visit1, std::span<const ScoredSubject> visit2);

}  // namespace thermdens::eval
