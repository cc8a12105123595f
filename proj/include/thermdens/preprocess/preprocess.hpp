#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thermdens/phantom/phantom.hpp"
#include "thermdens/render/thermal_image.hpp"

namespace thermdens::preprocess {

// Network input plane(s): channel-major, x-fastest, values in [0, 1].
struct ViewImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<double> data;
    std::vector<std::uint8_t> valid;  // width*height, shared by all channels
    int view_angle = 0;

    std::size_t plane() const noexcept { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
    double at(int c, int x, int y) const noexcept {
        return data[static_cast<std::size_t>(c) * plane() + static_cast<std::size_t>(y) * width + x];
    }
};

struct Extrema {
    double t_min = 0.0;
    double t_max = 0.0;
};

// Joint extrema over the valid pixels of every view. Throws DataError when
// no view has a valid pixel.
Extrema subject_minmax(std::span<const render::ThermalImage> views);

// (T - t_min) / (t_max - t_min) on valid pixels, 0 elsewhere. The first
// overload uses the joint extrema of `views`. Throws DataError when
// t_max == t_min.
std::vector<ViewImage> normalize_views(std::span<const render::ThermalImage> views);
std::vector<ViewImage> normalize_views(std::span<const render::ThermalImage> views, const Extrema& range);

// Bilinear resampling to size x size (pixel-centre aligned); the valid mask
// is resampled by nearest neighbour. Throws DomainError for size < 8.
ViewImage resize(const ViewImage& image, int size);

// Copies a single plane into three identical channels. Throws ShapeError
// if the image already has more than one channel.
ViewImage replicate_channels(const ViewImage& image);

enum class InputMode { full_field, cropped };

std::string to_string(InputMode mode);
InputMode input_mode_from_string(const std::string& s);

struct PreprocessConfig {
    int size = 64;      // S
    int channels = 1;   // 3 replicates the plane for three-channel encoders

    void validate() const;
};

struct SubjectSample {
    std::string subject_id;
    std::vector<ViewImage> views;  // 5 full-field or 6 cropped, each S x S
    phantom::DensityLabel label;
    double t_min = 0.0;
    double t_max = 0.0;
    int group = 0;
};

// Normalises with the extrema of the five full-field views, then resizes
// either those views or the six crops.
SubjectSample build_sample(const std::string& subject_id, std::span<const render::ThermalImage> full_views,
                           std::span<const render::ThermalImage> crops, InputMode mode,
                           const phantom::DensityLabel& label, int group, const PreprocessConfig& config);

}  // namespace thermdens::preprocess
