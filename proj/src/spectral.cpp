#include "l2k/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "l2k/quadrature.hpp"

namespace l2k {

double fourier_transform(const KernelSpec& spec, double t, double abs_tol) {
    const int L = spec.support;
    // oscillatory integrand: add breakpoints so each segment spans at most
    // half a period of cos(2 pi x t)
    std::vector<double> breaks;
    const double max_seg = (std::abs(t) > 1.0) ? 0.25 / std::abs(t) : 1.0;
    for (int n = 0; n < L; ++n) {
        const int sub = std::max(1, static_cast<int>(std::ceil(1.0 / max_seg)));
        for (int i = 0; i < sub; ++i)
            breaks.push_back(n + static_cast<double>(i) / sub);
    }
    breaks.push_back(static_cast<double>(L));
    const auto r = integrate_segmented(
        [&](double x) {
            return eval_kernel(spec, x) * std::cos(2.0 * std::numbers::pi * x * t);
        },
        breaks, abs_tol);
    return 2.0 * r.value;
}

double sinc_tail(int L) {
    if (L < 0) throw std::domain_error("sinc_tail: L must be >= 0");
    if (L == 0) return 0.5;
    const auto r = integrate_segmented([](double x) { const double s = sinc(x); return s * s; },
                                       unit_breakpoints(L), 1e-12);
    return 0.5 - r.value;
}

FaeReport fae_of(const std::function<double(double)>& h, int L,
                 int breaks_per_unit) {
    std::vector<double> breaks;
    for (int i = 0; i <= L * breaks_per_unit; ++i)
        breaks.push_back(static_cast<double>(i) / breaks_per_unit);
    const auto r = integrate_segmented(
        [&](double x) {
            const double d = h(x) - sinc(x);
            return d * d;
        },
        breaks, 1e-10);
    FaeReport rep;
    rep.e1_component = r.value;
    rep.e2_component = sinc_tail(L);
    rep.quadrature_error_estimate = r.error_estimate;
    rep.e_total = std::sqrt(2.0 * (rep.e1_component + rep.e2_component));
    return rep;
}

FaeReport fae(const KernelSpec& spec) {
    return fae_of([&](double x) { return eval_kernel(spec, x); }, spec.support);
}

double optimal_fae(int L) {
    if (L < 1) throw std::domain_error("optimal_fae: L must be >= 1");
    double sum = 0.0;
    for (int n = 0; n < L; ++n) {
        const auto r = integrate(
            [&](double x) {
                const double t = aliasing_term(L, std::min(x, std::nextafter(static_cast<double>(L), 0.0)));
                return t * t;
            },
            static_cast<double>(n), static_cast<double>(n + 1), 1e-12);
        sum += r.value;
    }
    return std::sqrt(2.0 * sum + 2.0 * sinc_tail(L));
}

double fae_approx(int L) {
    if (L < 1) throw std::domain_error("fae_approx: L must be >= 1");
    return 0.33 * std::pow(static_cast<double>(L), -0.5258);
}

SpectrumTable spectrum_sweep(const KernelSpec& spec, double t_min, double t_max,
                             int points) {
    if (points < 2) throw std::invalid_argument("spectrum_sweep: points < 2");
    if (!(t_min < t_max)) throw std::invalid_argument("spectrum_sweep: t_min >= t_max");
    SpectrumTable table;
    table.kernel = spec;
    table.frequencies.reserve(points);
    table.values.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double t = t_min + (t_max - t_min) * i / (points - 1);
        table.frequencies.push_back(t);
        table.values.push_back(fourier_transform(spec, t));
    }
    return table;
}

} // namespace l2k
