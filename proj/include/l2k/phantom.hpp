#pragma once

#include <optional>
#include <vector>

#include "l2k/image.hpp"
#include "l2k/resample.hpp"

namespace l2k {

enum class LineProfile { HardEdge, AntialiasedEdge };

struct PhantomSpec {
    int size = 257;            // odd, so a center pixel exists
    int num_lines = 8;
    double peak_intensity = 255.0;
    double background = 0.0;
    LineProfile line_profile = LineProfile::HardEdge;
};

Image2D generate_phantom(const PhantomSpec& spec);

struct RoundTripResult {
    Image2D final_image;
    Image2D error_map;      // per-pixel |P' - P|
    double rms_error = 0;   // over the central disk of radius (size-1)/2
    double max_error = 0;
    double rms_error_full = 0;  // full frame, for reference
    double max_error_full = 0;
    KernelSpec kernel;
    int cycles = 0;
};

struct RoundTripOptions {
    int cycles = 11;
    BoundaryPolicy boundary = BoundaryPolicy::Mirror;
    bool interleaved = false;             // alternate forward/inverse per cycle
    std::optional<int> round_bits_per_pass;
    int threads = 1;
};

/// Rational rotate/zoom round trip: (Z R Z^-1 R) applied `cycles` times,
/// then its elementary inverses in reverse order `cycles` times. The
/// composed transform is exactly the identity, so all residual error is
/// interpolation error.
RoundTripResult round_trip(const Image2D& image, const KernelBackend& kernel,
                           const RoundTripOptions& options);

struct KernelComparisonRow {
    KernelSpec kernel;
    RoundTripResult result;
    double runtime_ms = 0;
};

/// Runs the same round trip for every kernel; rows sorted by rms.
std::vector<KernelComparisonRow> compare_kernels(
    const Image2D& image, const std::vector<KernelBackend>& kernels,
    const RoundTripOptions& options);

/// Blue-to-red linear ramp, clamped at scale_max.
ImageRgb error_colormap(const Image2D& error_map, double scale_max);

} // namespace l2k
