#pragma once

#include "scenefit/depthfit/depth_map.hpp"

namespace scenefit {

// Affine depth correction: metric = scale * predicted + shift.
struct DepthAlignment {
    double scale = 1.0;
    double shift = 0.0;
};

// Closed-form least squares for (h, q) minimizing
//   sum_valid (h * pred + q - reference)^2
// over pixels that are inside `valid` and carry valid values in both maps.
// Solved from the 2x2 normal equations; no iteration.
// Throws TooFewPixels (< 2 usable pixels) or DegenerateDepth (constant pred).
DepthAlignment solve_scale_shift(const DepthMap& pred, const DepthMap& reference,
                                 const PixelMask& valid);

// v -> h*v + q on valid pixels; results <= 0 become invalid (stored as 0).
DepthMap apply_alignment(const DepthMap& d, const DepthAlignment& a);

}  // namespace scenefit
