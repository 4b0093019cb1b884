#include "l2k/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace l2k {

double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-8) {
        // 2-term Taylor series: 1 - (pi x)^2 / 6, error < 1e-32 here
        const double px = std::numbers::pi * x;
        return 1.0 - px * px / 6.0;
    }
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

KernelSpec KernelSpec::optimal(int L) {
    if (L < 1) throw std::invalid_argument("OptimalL2 support must be >= 1");
    return {KernelKind::OptimalL2, L, -0.5};
}

KernelSpec KernelSpec::truncated_sinc(int L) {
    if (L < 1) throw std::invalid_argument("TruncatedSinc support must be >= 1");
    return {KernelKind::TruncatedSinc, L, -0.5};
}

std::string KernelSpec::name() const {
    switch (kind) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Keys:
            return keys_a == -0.5 ? std::string("keys")
                                  : "keys:" + std::to_string(keys_a);
        case KernelKind::Cubic3: return "cubic3";
        case KernelKind::OptimalL2: return "optimal:" + std::to_string(support);
        case KernelKind::TruncatedSinc: return "truncsinc:" + std::to_string(support);
    }
    return "?";
}

double optimal_kernel_value(int L, double x) {
    if (L < 1) throw std::domain_error("optimal_kernel_value: L must be >= 1");
    if (x < 0.0 || x >= L) throw std::domain_error("optimal_kernel_value: x outside [0, L)");
    return sinc(x) + aliasing_term(L, x);
}

double aliasing_term(int L, double x) {
    if (L < 1) throw std::domain_error("aliasing_term: L must be >= 1");
    if (x < 0.0 || x >= L) throw std::domain_error("aliasing_term: x outside [0, L)");
    const int n = static_cast<int>(std::floor(x));
    double sum = 0.0;
    for (int k = 0; k < 2 * L; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sinc(sign * x + (k + 1) / 2 - sign * n);
    }
    return (1.0 - sum) / (2.0 * L);
}

namespace {

double keys_value(double x, double a) {
    // nonzero segments only; x >= 0
    if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    if (x < 2.0) return a * (((x - 5.0) * x + 8.0) * x - 4.0);
    return 0.0;
}

double cubic3_value(double x) {
    if (x < 1.0) return ((6.0 * x - 11.0) * x * x + 5.0) / 5.0;
    if (x < 2.0) return (((-3.0 * x + 16.0) * x - 27.0) * x + 14.0) / 5.0;
    if (x < 3.0) return (((x - 8.0) * x + 21.0) * x - 18.0) / 5.0;
    return 0.0;
}

} // namespace

double eval_kernel(const KernelSpec& spec, double x) {
    const double ax = std::abs(x);
    if (ax >= spec.support) return 0.0;
    switch (spec.kind) {
        case KernelKind::Linear: return 1.0 - ax;
        case KernelKind::Keys: return keys_value(ax, spec.keys_a);
        case KernelKind::Cubic3: return cubic3_value(ax);
        case KernelKind::OptimalL2: return optimal_kernel_value(spec.support, ax);
        case KernelKind::TruncatedSinc: return sinc(ax);
    }
    return 0.0;
}

KernelConditionReport check_kernel_conditions(const KernelSpec& spec,
                                              int samples_per_unit) {
    if (samples_per_unit < 2)
        throw std::invalid_argument("check_kernel_conditions: samples_per_unit < 2");
    const int L = spec.support;
    KernelConditionReport rep;

    for (int n = -L; n <= L; ++n) {
        const double expect = (n == 0) ? 1.0 : 0.0;
        rep.max_cardinality_violation = std::max(
            rep.max_cardinality_violation,
            std::abs(eval_kernel(spec, static_cast<double>(n)) - expect));
    }

    for (int i = 0; i <= samples_per_unit; ++i) {
        const double x = static_cast<double>(i) / samples_per_unit;
        double sum = 0.0;
        for (int k = -L; k <= L; ++k) sum += eval_kernel(spec, x + k);
        rep.max_partition_violation =
            std::max(rep.max_partition_violation, std::abs(sum - 1.0));
    }

    const double eps = 1e-12;
    for (int n = -(L - 1); n <= L - 1; ++n) {
        const double jump = std::abs(eval_kernel(spec, n - eps) -
                                     eval_kernel(spec, n + eps));
        rep.max_continuity_jump = std::max(rep.max_continuity_jump, jump);
    }

    rep.symmetric = true;
    for (int i = 0; i <= samples_per_unit; ++i) {
        const double x = L * static_cast<double>(i) / samples_per_unit;
        if (eval_kernel(spec, x) != eval_kernel(spec, -x)) {
            rep.symmetric = false;
            break;
        }
    }
    return rep;
}

KernelBounds kernel_bounds(const KernelSpec& spec, int samples_per_unit) {
    if (samples_per_unit < 1000)
        throw std::invalid_argument("kernel_bounds: samples_per_unit < 1000");
    const int L = spec.support;
    const double step = 1e-6;
    double hmax = 0.0, gmax = 0.0;

    for (int n = 0; n < L; ++n) {
        for (int i = 0; i <= samples_per_unit; ++i) {
            const double x = n + static_cast<double>(i) / samples_per_unit;
            hmax = std::max(hmax, std::abs(eval_kernel(spec, x)));
            double d;
            if (i == 0) {
                d = (eval_kernel(spec, x + step) - eval_kernel(spec, x)) / step;
            } else if (i == samples_per_unit) {
                d = (eval_kernel(spec, x) - eval_kernel(spec, x - step)) / step;
            } else {
                d = (eval_kernel(spec, x + step) - eval_kernel(spec, x - step)) /
                    (2.0 * step);
            }
            gmax = std::max(gmax, std::abs(d));
        }
    }
    // sampled suprema underestimate the true ones; Theorem-style bounds need
    // upper bounds, hence the fixed 1% inflation
    return {hmax * 1.01, gmax * 1.01};
}

} // namespace l2k
