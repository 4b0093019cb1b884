#pragma once

#include <functional>
#include <vector>

#include "l2k/kernel.hpp"

namespace l2k {

/// Frequency approximation error E(h) split into its two spatial components:
/// e_total = sqrt(2 (e1 + e2)) with e1 = int_0^L (h - sinc)^2 and
/// e2 = int_L^inf sinc^2.
struct FaeReport {
    double e_total = 0;
    double e1_component = 0;
    double e2_component = 0;
    double quadrature_error_estimate = 0;
};

struct SpectrumTable {
    std::vector<double> frequencies;
    std::vector<double> values;
    KernelSpec kernel;
};

/// Real Fourier transform 2 int_0^L h(x) cos(2 pi x t) dx of a symmetric
/// finite-support kernel, by adaptive quadrature split at integer breakpoints.
double fourier_transform(const KernelSpec& spec, double t, double abs_tol = 1e-10);

/// tail integral int_L^inf sinc^2(x) dx, computed as 1/2 - int_0^L sinc^2.
double sinc_tail(int L);

FaeReport fae(const KernelSpec& spec);

/// FAE of an arbitrary symmetric kernel given by its values on [0, L].
/// `breaks_per_unit` controls where the quadrature splits (1 = integers,
/// 2 = half-integers, for kernels built from half-segment perturbations).
FaeReport fae_of(const std::function<double(double)>& h, int L,
                 int breaks_per_unit = 1);

/// E_L = E(H_L) evaluated through the aliasing-term route.
double optimal_fae(int L);

/// The fitted error law 0.33 * L^-0.5258.
double fae_approx(int L);

SpectrumTable spectrum_sweep(const KernelSpec& spec, double t_min, double t_max,
                             int points);

} // namespace l2k
