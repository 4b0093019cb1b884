#pragma once

#include <optional>

#include "l2k/image.hpp"
#include "l2k/kernel.hpp"
#include "l2k/lut.hpp"
#include "l2k/transform.hpp"

namespace l2k {

enum class BoundaryPolicy { Zero, Clamp, Mirror };

/// Kernel evaluation backend: either the closed-form kernel or a
/// fixed-precision lookup table over it.
struct KernelBackend {
    KernelSpec spec;
    const KernelTable* table = nullptr;  // non-owning; closed form when null

    int support() const { return spec.support; }
    double operator()(double x) const {
        return table ? lut_eval(*table, x) : eval_kernel(spec, x);
    }

    static KernelBackend exact(const KernelSpec& s) { return {s, nullptr}; }
    static KernelBackend lut(const KernelTable& t) { return {t.source, &t}; }
};

/// Resolves an out-of-range index per boundary policy; returns -1 for Zero.
int resolve_index(int i, int n, BoundaryPolicy policy);

double interpolate_1d(const Signal1D& signal, double x,
                      const KernelBackend& kernel, BoundaryPolicy boundary);

/// Separable 2D interpolation: inner convolution along y, outer along x.
double interpolate_2d(const Image2D& image, double x, double y,
                      const KernelBackend& kernel, BoundaryPolicy boundary);

/// Resamples through the inverse transform: output pixel (i, j) is the
/// interpolated input at M^-1 ((i,j) - c) + c, with the source coordinate
/// kept rational until a single final conversion to double. Output size
/// equals input size. `threads` = 0 picks hardware concurrency; results
/// are bitwise identical at any thread count.
Image2D resample_affine(const Image2D& image, const AffineTransform2D& transform,
                        const KernelBackend& kernel, BoundaryPolicy boundary,
                        int threads = 1);

} // namespace l2k
