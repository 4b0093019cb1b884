#pragma once

// Test-side oracles, independent of the library's evaluation paths.

#include <cmath>
#include <numbers>
#include <random>

#include "l2k/image.hpp"
#include "l2k/kernel.hpp"

namespace l2ktest {

// sinc spelled out locally so the oracle does not share the library's guard
inline double osinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

// Hand-coded explicit branches of the optimal kernels for L = 1, 2, 3,
// written term by term from their closed forms.
inline double eq_h1(double x) {
    // 0 <= x <= 1
    return 0.5 * (1.0 + osinc(x) - osinc(1.0 - x));
}

inline double eq_h2(double x) {
    if (x <= 1.0)
        return 0.25 * (1.0 + 3.0 * osinc(x) - osinc(1.0 - x) - osinc(1.0 + x) -
                       osinc(2.0 - x));
    return 0.25 * (1.0 + 3.0 * osinc(x) - osinc(1.0 - x) - osinc(2.0 - x) -
                   osinc(3.0 - x));
}

inline double eq_h3(double x) {
    if (x <= 1.0)
        return (1.0 + 5.0 * osinc(x) - osinc(1.0 - x) - osinc(1.0 + x) -
                osinc(2.0 - x) - osinc(2.0 + x) - osinc(3.0 - x)) / 6.0;
    if (x <= 2.0)
        return (1.0 + 5.0 * osinc(x) - osinc(1.0 - x) - osinc(1.0 + x) -
                osinc(2.0 - x) - osinc(3.0 - x) - osinc(4.0 - x)) / 6.0;
    return (1.0 + 5.0 * osinc(x) - osinc(1.0 - x) - osinc(2.0 - x) -
            osinc(3.0 - x) - osinc(4.0 - x) - osinc(5.0 - x)) / 6.0;
}

inline double explicit_optimal(int L, double x) {
    switch (L) {
        case 1: return eq_h1(x);
        case 2: return eq_h2(x);
        default: return eq_h3(x);
    }
}

// Brute-force 2D convolution over the whole image (valid whenever the
// kernel window lies fully inside, matching any boundary policy there).
inline double brute_force_2d(const l2k::Image2D& img, double x, double y,
                             const l2k::KernelSpec& spec) {
    double acc = 0.0;
    for (int n = 0; n < img.height; ++n)
        for (int k = 0; k < img.width; ++k)
            acc += img.at(k, n) * l2k::eval_kernel(spec, x - k) *
                   l2k::eval_kernel(spec, y - n);
    return acc;
}

// An admissible perturbation of H_L: a bump vanishing at half-segment ends,
// added to one half-segment of the unity decomposition and subtracted from
// another. Preserves symmetry, cardinality, and the partition sum.
struct PerturbedOptimal {
    int L;
    int seg_plus;   // in [0, 2L)
    int seg_minus;  // in [0, 2L), != seg_plus
    double amplitude;
    int mode;       // bump is amplitude * sin(2 pi mode u), u in [0, 1/2]

    double bump(double u) const {
        return amplitude * std::sin(2.0 * std::numbers::pi * mode * u);
    }

    double operator()(double x) const {
        const double ax = std::abs(x);
        if (ax >= L) return 0.0;
        double v = l2k::optimal_kernel_value(L, ax);
        const int k = std::min(static_cast<int>(std::floor(2.0 * ax)), 2 * L - 1);
        const double u = (k % 2 == 0) ? ax - (k + 1) / 2 : (k + 1) / 2 - ax;
        if (k == seg_plus) v += bump(u);
        if (k == seg_minus) v -= bump(u);
        return v;
    }
};

inline std::mt19937_64 seeded_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

} // namespace l2ktest
