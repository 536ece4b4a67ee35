#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fishfresh/image.hpp"

namespace fishfresh {

// Decodes any supported image file (PNG, JPEG, ...) to a 3-channel BGR
// raster. Returns std::nullopt and fills `error` when the file cannot be
// decoded; grayscale inputs are promoted to three channels.
std::optional<RasterImage> decode_image(const std::filesystem::path& path, std::string* error);

// Encodes a raster as PNG. Throws IoError on failure.
void encode_png(const std::filesystem::path& path, const RasterImage& img);

}  // namespace fishfresh
