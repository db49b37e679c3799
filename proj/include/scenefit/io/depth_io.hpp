#pragma once

#include <filesystem>

#include "scenefit/adapters/image.hpp"
#include "scenefit/depthfit/depth_map.hpp"

namespace scenefit {

// PFM, single channel ("Pf"), little-endian, rows stored bottom-to-top.
DepthMap read_pfm(const std::filesystem::path& path);
void write_pfm(const std::filesystem::path& path, const DepthMap& d);

// Masks are 8-bit grayscale PNG, 0 = out, 255 = in (read threshold > 127).
PixelMask read_mask_png(const std::filesystem::path& path);
void write_mask_png(const std::filesystem::path& path, const PixelMask& mask);

// 8-bit RGB/RGBA PNG; grayscale and palette files are expanded to RGB.
ImageBuffer read_image_png(const std::filesystem::path& path);
void write_image_png(const std::filesystem::path& path, const ImageBuffer& img);

}  // namespace scenefit
