#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thermdens::render {

enum class CropPart { none, whole, left, right };

std::string to_string(CropPart part);
CropPart crop_part_from_string(const std::string& s);

// Surface temperature raster, row 0 at the top, x-fastest.
struct ThermalImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;       // C; NaN where invalid
    std::vector<std::uint8_t> valid;  // ray hit the body
    std::vector<std::uint8_t> cap;    // ray hit the hemispherical cap
    int view_angle = 0;
    std::string subject_id;
    CropPart part = CropPart::none;
    int origin_x = 0;  // offset inside the full-field raster for crops
    int origin_y = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    }
    std::size_t valid_count() const noexcept;
};

}  // namespace thermdens::render
