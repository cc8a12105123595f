#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thermdens/core/grid.hpp"

namespace thermdens::phantom {

// Axes: x lateral (sagittal plane at the grid centre), y vertical,
// z anterior. The chest-wall slab fills z < slab_layers across the whole
// x-y extent; the hemispherical cap sits on the slab's front face.
struct PhantomGeometry {
    double radius = 0.07;          // m
    double slab_thickness = 0.02;  // m
    int group = 0;                 // nuisance stratum tag
};

struct VoxelPhantom {
    GridDims dims;
    double spacing = 0.0;            // voxel edge, m
    std::vector<std::uint8_t> mask;  // 1 inside breast domain
    std::vector<float> f;            // fibroglandular fraction, 0 outside mask
    PhantomGeometry geometry;
    std::uint64_t seed = 0;

    std::size_t slab_layers() const noexcept;
    bool in_cap(std::size_t x, std::size_t y, std::size_t z) const noexcept;
    std::size_t mask_count() const noexcept;
    double mean_fraction() const;
};

struct PhantomParams {
    std::uint64_t seed = 0;
    double radius = 0.07;
    double spacing = 0.0025;
    double target_mean_f = 0.5;
    double smoothness_scale = 0.015;  // Gaussian blur sigma, m
    int group = 0;
    double slab_thickness = 0.02;
    double heterogeneity = 0.15;      // std of the composition field before clamping
    std::size_t margin = 2;           // empty voxels around the cap
};

// Random smoothed composition field on the hemisphere-on-slab geometry,
// shifted so that mean(f over mask) == target_mean_f (to within 1e-6).
// Throws ConfigError if the grid resolves fewer than 24 voxels across the
// diameter or the target lies outside (0, 1).
VoxelPhantom generate_phantom(const PhantomParams& params);

// Same geometry with constant f everywhere in the mask.
VoxelPhantom uniform_phantom(const PhantomParams& params, float f);

// Mirror about the sagittal plane (x -> nx-1-x).
VoxelPhantom mirror_x(const VoxelPhantom& phantom);

enum class Density { fatty = 0, dense = 1 };

struct DensityLabel {
    Density value = Density::fatty;
    double mean_fraction = 0.0;

    int binary() const noexcept { return value == Density::dense ? 1 : 0; }
};

inline constexpr double kDenseThreshold = 0.5;

DensityLabel assign_label(const VoxelPhantom& phantom);

std::string to_string(Density d);
Density density_from_string(const std::string& s);

// Class-conditional target fraction ranges used by the population sampler.
struct FractionRange {
    double lo;
    double hi;
};
FractionRange class_fraction_range(Density d) noexcept;

}  // namespace thermdens::phantom
