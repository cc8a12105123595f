#pragma once

#include <cstddef>

namespace thermdens {

// Voxel grid extents; linear index is x-fastest.
struct GridDims {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::size_t nz = 0;

    std::size_t size() const noexcept { return nx * ny * nz; }
    std::size_t index(std::size_t x, std::size_t y, std::size_t z) const noexcept {
        return x + nx * (y + ny * z);
    }
    std::size_t stride_y() const noexcept { return nx; }
    std::size_t stride_z() const noexcept { return nx * ny; }

    friend bool operator==(const GridDims&, const GridDims&) = default;
};

}  // namespace thermdens
