#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thermdens/preprocess/preprocess.hpp"

namespace thermdens::radiomics {

inline constexpr int kGrayLevels = 32;
inline constexpr std::size_t kFirstOrderCount = 18;
inline constexpr std::size_t kGlcmCount = 24;
inline constexpr std::size_t kPerViewCount = kFirstOrderCount + kGlcmCount;
inline constexpr std::size_t kSubjectViewCount = 5;
inline constexpr std::size_t kSubjectFeatureCount = kPerViewCount * kSubjectViewCount;

struct Offset {
    int dy;
    int dx;
};

inline constexpr std::array<Offset, 4> kDefaultOffsets{{{0, 1}, {1, 0}, {1, 1}, {1, -1}}};

const std::array<std::string, kFirstOrderCount>& first_order_names();
const std::array<std::string, kGlcmCount>& glcm_names();

// Gray level in 1..levels for a value in [0, 1].
int quantize(double v, int levels = kGrayLevels) noexcept;

// Statistics over the valid pixels of plane 0. Percentiles interpolate
// linearly between order statistics; entropy and uniformity use 32 bins
// over [0, 1]. Throws DataError with fewer than two valid pixels.
std::array<double, kFirstOrderCount> first_order_features(const preprocess::ViewImage& image);
std::array<double, kFirstOrderCount> first_order_features(std::span<const double> values,
                                                          std::span<const std::uint8_t> valid);

// Symmetric co-occurrence matrix (levels x levels, row-major) normalised
// to sum 1, for one offset. Only pairs with both pixels valid count.
// Returns all zeros when no pair is found.
std::vector<double> cooccurrence(const preprocess::ViewImage& image, Offset offset, int levels = kGrayLevels);

// Texture descriptors computed per offset and averaged over offsets.
// Offsets without any valid pair are skipped; throws DataError if none
// has one.
std::array<double, kGlcmCount> glcm_features(const preprocess::ViewImage& image, int levels = kGrayLevels,
                                             std::span<const Offset> offsets = kDefaultOffsets);

// Descriptors of one normalised co-occurrence matrix.
std::array<double, kGlcmCount> glcm_matrix_features(std::span<const double> p, int levels);

struct FeatureVector {
    std::string subject_id;
    std::vector<double> values;
    int label = 0;
};

// "<view>_<feature>" for every entry of a subject vector.
const std::vector<std::string>& subject_feature_names();

// Five full-field views in canonical order, 42 features each. Throws
// DataError for any other view count.
FeatureVector subject_features(const preprocess::SubjectSample& subject);

// Table with subject_id, label and every named feature column.
std::string features_csv(std::span<const FeatureVector> rows);

}  // namespace thermdens::radiomics
