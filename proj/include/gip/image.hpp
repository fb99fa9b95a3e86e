#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gip/errors.hpp"

namespace gip {

/// Dense 2D/3D scalar raster with 32-bit float pixels, the granular unit of
/// processing. Immutable after construction. Flat row-major layout,
/// index = ((z * height) + y) * width + x.
class Image {
public:
    Image(int width, int height, int depth, std::vector<float> data);

    /// Constant-filled image.
    static Image filled(int width, int height, int depth, float fill);

    int width() const { return width_; }
    int height() const { return height_; }
    int depth() const { return depth_; }

    std::int64_t pixelCount() const {
        return static_cast<std::int64_t>(width_) * height_ * depth_;
    }

    const std::vector<float>& data() const { return data_; }

    std::int64_t index(int x, int y, int z) const {
        return (static_cast<std::int64_t>(z) * height_ + y) * width_ + x;
    }

    float at(int x, int y, int z = 0) const { return data_[index(x, y, z)]; }

    bool sameShape(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_ &&
               depth_ == other.depth_;
    }

private:
    int width_;
    int height_;
    int depth_;
    std::vector<float> data_;
};

bool operator==(const Image& a, const Image& b);
inline bool operator!=(const Image& a, const Image& b) { return !(a == b); }

Image makeImage(int width, int height, int depth, float fill);

/// An Image constrained to pixel values in {0, 1}. The constructor rejects
/// anything else with a domain error.
class BinaryImage {
public:
    explicit BinaryImage(Image image);

    const Image& image() const { return image_; }
    int width() const { return image_.width(); }
    int height() const { return image_.height(); }
    int depth() const { return image_.depth(); }

private:
    Image image_;
};

inline bool operator==(const BinaryImage& a, const BinaryImage& b) {
    return a.image() == b.image();
}

bool isBinary(const Image& img);

/// Integer raster where 0 is background and object ids form the contiguous
/// set {1..n}. Contiguity is validated on construction; the one-component-
/// per-id invariant is the producing op's responsibility.
struct LabelMap {
    LabelMap(int width, int height, std::vector<std::int32_t> labels);

    int width;
    int height;
    std::vector<std::int32_t> labels;
    std::int32_t labelCount; // n

    std::int64_t index(int x, int y) const {
        return static_cast<std::int64_t>(y) * width + x;
    }
};

bool operator==(const LabelMap& a, const LabelMap& b);

/// Stores a LabelMap as a float Image (exact for ids below 2^24) so label
/// images can live in a BufferStore.
Image imageFromLabelMap(const LabelMap& lm);
LabelMap labelMapFromImage(const Image& img);

/// Ordered frames of channel-sets; every plane has identical dimensions.
/// Planes are stored frame-major: plane(f, c) = planes[f * channels + c].
class TimeLapse {
public:
    TimeLapse(int channels, std::vector<Image> planes);

    int channels() const { return channels_; }
    int frames() const { return static_cast<int>(planes_.size()) / channels_; }

    const Image& plane(int frame, int channel) const;

private:
    int channels_;
    std::vector<Image> planes_;
};

/// 256-bin histogram spanning [lo, hi] = [min, max] of the source image.
struct Histogram {
    std::array<std::int64_t, 256> bins;
    float lo;
    float hi;

    std::int64_t totalCount() const;
};

/// Bin index of pixel v: floor((v - lo) * 255 / (hi - lo)), clamped to
/// [0, 255]. A degenerate lo == hi image collapses into bin 0.
Histogram histogram256(const Image& img);

int histogramBinIndex(float v, float lo, float hi);

} // namespace gip
