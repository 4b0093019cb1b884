#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace l2k {

struct Signal1D {
    std::vector<double> samples;
    std::optional<int> declared_bits;
};

struct Image2D {
    int width = 0;
    int height = 0;
    std::vector<double> samples;  // row-major
    std::optional<int> declared_bits;

    Image2D() = default;
    Image2D(int w, int h, double fill = 0.0)
        : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
};

/// Rounds every sample to the nearest integer and clamps to [0, 2^bits - 1].
Image2D round_to_bits(const Image2D& img, int bits);

// PGM (P2 ASCII / P5 binary, maxval up to 65535)
Image2D read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Image2D& img, int maxval = 255,
               bool binary = true);

// raw little-endian doubles with a u32 width/height header
Image2D read_f64(const std::string& path);
void write_f64(const std::string& path, const Image2D& img);

/// 3-channel byte image for the colorized error maps.
struct ImageRgb {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // row-major, RGB triples
};

void write_ppm(const std::string& path, const ImageRgb& img);

/// Writes `bytes` to `path` atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& bytes);

} // namespace l2k
