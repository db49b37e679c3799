#pragma once

#include <cstdint>

#include "scenefit/depthfit/depth_map.hpp"
#include "scenefit/geom/types.hpp"

namespace scenefit {

// Lifts valid (and masked-in, when a mask is given) pixels into camera-frame
// 3D points using the pixel-center convention:
//   ((u + 0.5 - cx) * z / fx, (v + 0.5 - cy) * z / fy, z)
// One point per selected pixel, scanline order. Throws EmptyResult when no
// pixel qualifies.
Points3d backproject(const CameraIntrinsics& intr, const DepthMap& d,
                     const PixelMask* mask = nullptr);

// backproject restricted to a mask, optionally subsampled (uniform, without
// replacement, deterministic per seed) to at most `budget` points.
// budget <= 0 disables subsampling.
Points3d instance_depth_points(const CameraIntrinsics& intr, const DepthMap& d,
                               const PixelMask& mask, int budget = 2048,
                               std::uint64_t seed = 0);

}  // namespace scenefit
