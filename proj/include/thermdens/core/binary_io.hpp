#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace thermdens::io {

// Little-endian float32 streams, independent of host byte order.
void write_f32_le(std::ostream& out, std::span<const float> values);
void write_f32_le(std::ostream& out, std::span<const double> values);
std::vector<float> read_f32_le(std::istream& in, std::size_t count);

void write_bytes(std::ostream& out, std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> read_bytes(std::istream& in, std::size_t count);

// Single-line JSON header terminated by '\n'.
void write_header_line(std::ostream& out, const nlohmann::json& header);
nlohmann::json read_header_line(std::istream& in);

void ensure_parent_dir(const std::string& path);

}  // namespace thermdens::io
