#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

namespace l2k {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
};

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance. The integrand must be smooth on the open interval; callers
/// split at known breakpoints via integrate_segmented.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           int max_depth = 52) {
    struct Rec {
        const std::remove_reference_t<F>& f;
        QuadratureResult run(double a, double m, double b, double fa, double fm,
                             double fb, double whole, double tol, int depth) {
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
                return {left + right + delta / 15.0, std::abs(delta) / 15.0};
            const QuadratureResult l =
                run(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
            const QuadratureResult r =
                run(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
            return {l.value + r.value, l.error_estimate + r.error_estimate};
        }
    };
    if (a == b) return {0.0, 0.0};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Rec rec{f};
    return rec.run(a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Integrates over [breakpoints.front(), breakpoints.back()], splitting the
/// adaptive scheme at every interior breakpoint. The tolerance is divided
/// evenly across segments so the total stays within abs_tol.
template <class F>
QuadratureResult integrate_segmented(F&& f, const std::vector<double>& breakpoints,
                                     double abs_tol) {
    QuadratureResult total;
    const std::size_t nseg = breakpoints.size() > 1 ? breakpoints.size() - 1 : 1;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const QuadratureResult r =
            integrate(f, breakpoints[i], breakpoints[i + 1],
                      abs_tol / static_cast<double>(nseg));
        total.value += r.value;
        total.error_estimate += r.error_estimate;
    }
    return total;
}

/// Breakpoints 0, 1, ..., L (the integer grid of a kernel's support).
inline std::vector<double> unit_breakpoints(int L) {
    std::vector<double> b;
    for (int i = 0; i <= L; ++i) b.push_back(static_cast<double>(i));
    return b;
}

} // namespace l2k
