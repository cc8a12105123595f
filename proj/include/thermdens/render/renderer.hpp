#pragma once

#include <array>
#include <random>
#include <span>
#include <vector>

#include "thermdens/bioheat/solver.hpp"
#include "thermdens/phantom/phantom.hpp"
#include "thermdens/render/thermal_image.hpp"

namespace thermdens::render {

// Orthographic camera rotating about the vertical (y) axis. At angle a the
// camera sits in direction (sin a, 0, cos a) from the grid centre, so 0 is
// frontal and +90 looks at the +x side. Pixel pitch is spacing/subdivision;
// the raster is centred on the grid centre.
struct RenderConfig {
    int width = 320;
    int height = 240;
    int subdivision = 2;

    void validate() const;
};

inline constexpr std::array<int, 5> kViewAngles{0, 45, -45, 90, -90};

bool is_canonical_angle(int degrees) noexcept;

// Nearest-voxel sample of the first mask voxel along each pixel ray.
// Throws RenderError for a non-canonical angle, an empty mask or a field on
// a different grid.
ThermalImage render_view(const bioheat::TemperatureField& field, const phantom::VoxelPhantom& phantom,
                         int angle_degrees, const RenderConfig& config = {},
                         const std::string& subject_id = {});

// Views in the fixed order 0, +45, -45, +90, -90.
std::vector<ThermalImage> render_all_views(const bioheat::TemperatureField& field,
                                           const phantom::VoxelPhantom& phantom,
                                           const RenderConfig& config = {},
                                           const std::string& subject_id = {});

inline constexpr int kCropPadding = 4;

// Bounding box of the projected cap padded by kCropPadding pixels. A
// full-field frontal image yields two crops split at the projected
// midline; every other image yields one. Throws RenderError when no pixel
// sees the cap.
std::vector<ThermalImage> crop_breast_region(const ThermalImage& image);

// Six breast regions for the five canonical views (frontal contributes two).
std::vector<ThermalImage> crop_all(std::span<const ThermalImage> views);

// Additive N(0, sigma^2) noise on valid pixels.
void add_gaussian_noise(ThermalImage& image, double sigma, std::mt19937_64& rng);

}  // namespace thermdens::render
