#include "scenefit/depthfit/alignment.hpp"

#include <cmath>

namespace scenefit {

DepthAlignment solve_scale_shift(const DepthMap& pred, const DepthMap& reference,
                                 const PixelMask& valid) {
    require_same_shape(pred, reference);
    if (valid.width != pred.width || valid.height != pred.height)
        raise("DimensionMismatch", "validity mask does not match depth size");

    double sp = 0, spp = 0, sr = 0, spr = 0;
    long n = 0;
    for (int y = 0; y < pred.height; ++y) {
        for (int x = 0; x < pred.width; ++x) {
            if (!valid.at(x, y) || !pred.valid_at(x, y) || !reference.valid_at(x, y))
                continue;
            const double p = pred.at(x, y);
            const double r = reference.at(x, y);
            sp += p;
            spp += p * p;
            sr += r;
            spr += p * r;
            ++n;
        }
    }
    if (n < 2) raise("TooFewPixels", "need at least 2 valid pixels to fit scale/shift");

    // Normal equations [spp sp; sp n] [h q]^T = [spr sr]^T.
    const double nd = static_cast<double>(n);
    const double det = nd * spp - sp * sp;  // n^2 * variance of pred
    if (!(det > 1e-12 * std::max(1.0, nd * spp)))
        raise("DegenerateDepth", "predicted depth is constant over valid pixels");

    DepthAlignment a;
    a.scale = (nd * spr - sp * sr) / det;
    a.shift = (sr - a.scale * sp) / nd;
    return a;
}

DepthMap apply_alignment(const DepthMap& d, const DepthAlignment& a) {
    if (!(std::isfinite(a.scale) && a.scale != 0.0 && std::isfinite(a.shift)))
        raise("InvalidArgument", "alignment must have finite nonzero scale");
    DepthMap out(d.width, d.height);
    for (int y = 0; y < d.height; ++y) {
        for (int x = 0; x < d.width; ++x) {
            if (!d.valid_at(x, y)) continue;
            const double v = a.scale * d.at(x, y) + a.shift;
            out.at(x, y) = v > 0.0 ? v : 0.0;
        }
    }
    return out;
}

}  // namespace scenefit
