#pragma once

#include <string>

namespace l2k {

/// sin(pi x)/(pi x), with sinc(0) = 1.
double sinc(double x);

enum class KernelKind { Linear, Keys, Cubic3, OptimalL2, TruncatedSinc };

/// Identifies an interpolation kernel together with its half-support L.
/// All kernels are symmetric and vanish for |x| >= L.
struct KernelSpec {
    KernelKind kind = KernelKind::Linear;
    int support = 1;        // half-width L in samples
    double keys_a = -0.5;   // only meaningful for Keys

    static KernelSpec linear() { return {KernelKind::Linear, 1, -0.5}; }
    static KernelSpec keys(double a = -0.5) { return {KernelKind::Keys, 2, a}; }
    static KernelSpec cubic3() { return {KernelKind::Cubic3, 3, -0.5}; }
    static KernelSpec optimal(int L);
    static KernelSpec truncated_sinc(int L);

    std::string name() const;
};

/// h(x) for the given kernel; symmetric in x, zero for |x| >= L.
double eval_kernel(const KernelSpec& spec, double x);

/// H_L(x) for 0 <= x < L: the general closed form of the L2-optimal kernel.
/// Throws std::domain_error outside [0, L).
double optimal_kernel_value(int L, double x);

/// T_L(x) = H_L(x) - sinc(x), evaluated directly from its own closed form
/// (not by subtraction) so the two routes can be cross-checked.
double aliasing_term(int L, double x);

struct KernelConditionReport {
    double max_cardinality_violation = 0;  // max |h(n) - delta_n| over n in [-L, L]
    double max_partition_violation = 0;    // max |sum_k h(x+k) - 1| over x in [0, 1]
    double max_continuity_jump = 0;        // max |h(n-eps) - h(n+eps)| at interior integers
    bool symmetric = true;
};

KernelConditionReport check_kernel_conditions(const KernelSpec& spec,
                                              int samples_per_unit);

struct KernelBounds {
    double h_max = 0;      // sup |h(x)| on [0, L], inflated by 1%
    double gamma_max = 0;  // sup |h'(x)| on [0, L], one-sided at integers, inflated by 1%
};

KernelBounds kernel_bounds(const KernelSpec& spec, int samples_per_unit);

} // namespace l2k
