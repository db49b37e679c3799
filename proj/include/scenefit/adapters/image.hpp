#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scenefit/common/error.hpp"

namespace scenefit {

// Row-major 8-bit image, 3 (RGB) or 4 (RGBA) channels. `tag` is free-form
// provenance (instance id, filename); adapter backends may use it, the wire
// protocol ignores it.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 3;
    std::vector<std::uint8_t> bytes;
    std::string tag;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c)
        : width(w), height(h), channels(c),
          bytes(static_cast<size_t>(w) * h * c, 0) {
        if (c != 3 && c != 4) raise("InvalidArgument", "channels must be 3 or 4");
    }

    std::uint8_t at(int x, int y, int c) const {
        return bytes[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return bytes[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    bool empty() const { return width <= 0 || height <= 0 || bytes.empty(); }
};

}  // namespace scenefit
