#include "gip/image.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace gip {

namespace {

void checkDims(int width, int height, int depth) {
    if (width < 1 || height < 1 || depth < 1) {
        throw Error(ErrorKind::invalid_dimension,
                    "image dimensions must be >= 1, got " + std::to_string(width) +
                        "x" + std::to_string(height) + "x" + std::to_string(depth));
    }
}

} // namespace

Image::Image(int width, int height, int depth, std::vector<float> data)
    : width_(width), height_(height), depth_(depth), data_(std::move(data)) {
    checkDims(width, height, depth);
    if (static_cast<std::int64_t>(data_.size()) != pixelCount()) {
        throw Error(ErrorKind::invalid_dimension,
                    "pixel array length " + std::to_string(data_.size()) +
                        " does not match " + std::to_string(pixelCount()));
    }
    for (float v : data_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::domain, "image pixels must be finite");
        }
    }
}

Image Image::filled(int width, int height, int depth, float fill) {
    checkDims(width, height, depth);
    std::vector<float> data(
        static_cast<std::size_t>(width) * height * depth, fill);
    return Image(width, height, depth, std::move(data));
}

bool operator==(const Image& a, const Image& b) {
    return a.sameShape(b) && a.data() == b.data();
}

Image makeImage(int width, int height, int depth, float fill) {
    if (!std::isfinite(fill)) {
        throw Error(ErrorKind::domain, "fill value must be finite");
    }
    return Image::filled(width, height, depth, fill);
}

BinaryImage::BinaryImage(Image image) : image_(std::move(image)) {
    if (!isBinary(image_)) {
        throw Error(ErrorKind::domain, "image is not binary (values must be 0 or 1)");
    }
}

bool isBinary(const Image& img) {
    for (float v : img.data()) {
        if (v != 0.0f && v != 1.0f) return false;
    }
    return true;
}

LabelMap::LabelMap(int width_, int height_, std::vector<std::int32_t> labels_)
    : width(width_), height(height_), labels(std::move(labels_)), labelCount(0) {
    if (width < 1 || height < 1) {
        throw Error(ErrorKind::invalid_dimension, "label map dimensions must be >= 1");
    }
    if (labels.size() != static_cast<std::size_t>(width) * height) {
        throw Error(ErrorKind::invalid_dimension,
                    "label array length does not match width*height");
    }
    std::int32_t maxId = 0;
    for (std::int32_t v : labels) {
        if (v < 0) {
            throw Error(ErrorKind::domain, "label ids must be non-negative");
        }
        if (v > maxId) maxId = v;
    }
    std::vector<bool> seen(static_cast<std::size_t>(maxId) + 1, false);
    for (std::int32_t v : labels) seen[static_cast<std::size_t>(v)] = true;
    for (std::int32_t id = 1; id <= maxId; ++id) {
        if (!seen[static_cast<std::size_t>(id)]) {
            throw Error(ErrorKind::domain,
                        "label ids are not contiguous: missing " + std::to_string(id));
        }
    }
    labelCount = maxId;
}

bool operator==(const LabelMap& a, const LabelMap& b) {
    return a.width == b.width && a.height == b.height && a.labels == b.labels;
}

Image imageFromLabelMap(const LabelMap& lm) {
    std::vector<float> data(lm.labels.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] = static_cast<float>(lm.labels[i]);
    }
    return Image(lm.width, lm.height, 1, std::move(data));
}

LabelMap labelMapFromImage(const Image& img) {
    if (img.depth() != 1) {
        throw Error(ErrorKind::shape_mismatch, "label maps are 2D (depth must be 1)");
    }
    std::vector<std::int32_t> labels(img.data().size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        float v = img.data()[i];
        auto id = static_cast<std::int32_t>(v);
        if (v < 0.0f || static_cast<float>(id) != v) {
            throw Error(ErrorKind::domain,
                        "image is not a label map (non-integer or negative value)");
        }
        labels[i] = id;
    }
    return LabelMap(img.width(), img.height(), std::move(labels));
}

TimeLapse::TimeLapse(int channels, std::vector<Image> planes)
    : channels_(channels), planes_(std::move(planes)) {
    if (channels_ < 1) {
        throw Error(ErrorKind::invalid_argument, "channel count must be >= 1");
    }
    if (planes_.empty() || planes_.size() % static_cast<std::size_t>(channels_) != 0) {
        throw Error(ErrorKind::invalid_argument,
                    "plane count must be a positive multiple of the channel count");
    }
    for (const Image& p : planes_) {
        if (!p.sameShape(planes_.front())) {
            throw Error(ErrorKind::shape_mismatch,
                        "all planes of a time lapse must have identical dimensions");
        }
    }
}

const Image& TimeLapse::plane(int frame, int channel) const {
    if (frame < 0 || frame >= frames()) {
        throw Error(ErrorKind::index_out_of_range,
                    "frame " + std::to_string(frame) + " out of range [0, " +
                        std::to_string(frames()) + ")");
    }
    if (channel < 0 || channel >= channels_) {
        throw Error(ErrorKind::index_out_of_range,
                    "channel " + std::to_string(channel) + " out of range [0, " +
                        std::to_string(channels_) + ")");
    }
    return planes_[static_cast<std::size_t>(frame) * channels_ + channel];
}

std::int64_t Histogram::totalCount() const {
    std::int64_t total = 0;
    for (std::int64_t c : bins) total += c;
    return total;
}

int histogramBinIndex(float v, float lo, float hi) {
    if (lo >= hi) return 0;
    // (v - lo) * 255 / (hi - lo), evaluated in this order so integer-valued
    // inputs land exactly on bin boundaries.
    double idx = std::floor((static_cast<double>(v) - lo) * 255.0 /
                            (static_cast<double>(hi) - lo));
    if (idx < 0.0) return 0;
    if (idx > 255.0) return 255;
    return static_cast<int>(idx);
}

Histogram histogram256(const Image& img) {
    float lo = img.data().front();
    float hi = lo;
    for (float v : img.data()) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    Histogram h;
    h.bins.fill(0);
    h.lo = lo;
    h.hi = hi;
    for (float v : img.data()) {
        ++h.bins[static_cast<std::size_t>(histogramBinIndex(v, lo, hi))];
    }
    return h;
}

} // namespace gip
