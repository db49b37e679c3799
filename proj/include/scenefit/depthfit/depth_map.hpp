#pragma once

#include <Eigen/Core>

#include "scenefit/common/error.hpp"

namespace scenefit {

// Single-channel depth grid. Values are meters once aligned; a value <= 0
// (or non-finite) marks an invalid pixel. Indexed (x, y) with row y, col x.
struct DepthMap {
    int width = 0;
    int height = 0;
    Eigen::ArrayXXd values;  // height rows x width cols

    DepthMap() = default;
    DepthMap(int w, int h) : width(w), height(h), values(Eigen::ArrayXXd::Zero(h, w)) {}

    double at(int x, int y) const { return values(y, x); }
    double& at(int x, int y) { return values(y, x); }
    bool valid_at(int x, int y) const {
        const double v = values(y, x);
        return v > 0.0 && std::isfinite(v);
    }
    int valid_count() const {
        int n = 0;
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                if (valid_at(x, y)) ++n;
        return n;
    }
};

// Binary occupancy grid paired with an image or depth map of the same size.
struct PixelMask {
    int width = 0;
    int height = 0;
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> occupancy;

    PixelMask() = default;
    PixelMask(int w, int h)
        : width(w), height(h),
          occupancy(Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(h, w, false)) {}

    bool at(int x, int y) const { return occupancy(y, x); }
    void set(int x, int y, bool v) { occupancy(y, x) = v; }
    int count() const { return static_cast<int>(occupancy.count()); }

    static PixelMask full(int w, int h) {
        PixelMask m(w, h);
        m.occupancy.setConstant(true);
        return m;
    }
};

inline void require_same_shape(const DepthMap& a, const DepthMap& b) {
    if (a.width != b.width || a.height != b.height)
        raise("DimensionMismatch", "depth maps differ in size");
}

}  // namespace scenefit
