#include "scenefit/depthfit/backproject.hpp"

#include <algorithm>
#include <vector>

#include "scenefit/common/rng.hpp"

namespace scenefit {

Points3d backproject(const CameraIntrinsics& intr, const DepthMap& d,
                     const PixelMask* mask) {
    if (d.width != intr.width || d.height != intr.height)
        raise("DimensionMismatch", "depth map does not match intrinsics size");
    if (mask && (mask->width != d.width || mask->height != d.height))
        raise("DimensionMismatch", "mask does not match depth size");

    std::vector<Vec3d> pts;
    pts.reserve(static_cast<size_t>(d.width) * d.height / 4);
    for (int y = 0; y < d.height; ++y) {
        for (int x = 0; x < d.width; ++x) {
            if (mask && !mask->at(x, y)) continue;
            if (!d.valid_at(x, y)) continue;
            const double z = d.at(x, y);
            pts.emplace_back((x + 0.5 - intr.cx) * z / intr.fx,
                             (y + 0.5 - intr.cy) * z / intr.fy, z);
        }
    }
    if (pts.empty()) raise("EmptyResult", "no valid pixel to back-project");
    Points3d out(3, static_cast<Eigen::Index>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[i];
    return out;
}

Points3d instance_depth_points(const CameraIntrinsics& intr, const DepthMap& d,
                               const PixelMask& mask, int budget,
                               std::uint64_t seed) {
    Points3d all = backproject(intr, d, &mask);
    const int n = static_cast<int>(all.cols());
    if (budget <= 0 || n <= budget) return all;

    // Partial Fisher-Yates over indices, then restored to scanline order.
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    Rng rng(seed);
    for (int i = 0; i < budget; ++i) {
        const int j = i + rng.uniform_int(n - i);
        std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    idx.resize(static_cast<size_t>(budget));
    std::sort(idx.begin(), idx.end());

    Points3d out(3, budget);
    for (int i = 0; i < budget; ++i) out.col(i) = all.col(idx[static_cast<size_t>(i)]);
    return out;
}

}  // namespace scenefit
