#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l2k/kernel.hpp"

namespace l2k {

/// Fixed-precision tabulation of a kernel over [0, L]: entries[i] = h(i/K).
/// Negative arguments are resolved by symmetry before lookup.
struct KernelTable {
    KernelSpec source;
    int precision_k = 1;      // entries per unit interval
    int support = 1;          // L
    std::vector<double> entries;  // length L*K + 1
};

inline constexpr std::int64_t kTabulateEntryCap = 100000000;  // 1e8

KernelTable tabulate(const KernelSpec& spec, int precision_k);

/// Nearest-grid lookup g_K(x) = entries[round(|x| K)], zero outside support.
/// Rounding is half-away-from-zero.
inline double lut_eval(const KernelTable& table, double x) {
    const double ax = x < 0 ? -x : x;
    const auto i = static_cast<std::int64_t>(ax * table.precision_k + 0.5);
    if (i >= static_cast<std::int64_t>(table.entries.size())) return 0.0;
    return table.entries[static_cast<std::size_t>(i)];
}

// flat binary format: 16-byte header (magic "L2KT", version u16, L u16,
// K u32, reserved u32), then (L*K+1) little-endian doubles
void save_table(const std::string& path, const KernelTable& table);
KernelTable load_table(const std::string& path);
void export_table_csv(const std::string& path, const KernelTable& table);

struct ResolutionParams {
    int support_l = 1;
    int dimension_d = 1;
    double h_bound = 1.0;    // sup |h|
    double gamma_bound = 0;  // sup |h'|
    int precision_k = 1;
};

/// Permissible signal resolution
///   B_0 = -log2( 2 (L+1)^D h^D ((1 + gamma/(h K))^D - 1) ).
/// Returns +infinity when gamma = 0 (tabulation introduces no distortion).
double permissible_resolution(const ResolutionParams& params);

/// Large-K asymptote log2 K - log2(2 (L+1)^D h^(D-1) D gamma).
double asymptotic_resolution(const ResolutionParams& params);

/// Smallest K with permissible_resolution(...) >= target_bits.
int min_table_precision(int support_l, int dimension_d, double h_bound,
                        double gamma_bound, int target_bits);

/// M (L+1)^D ((h+e)^D - h^D): worst-case output change when every kernel
/// value is off by at most e.
double distorted_interpolation_bound(double sample_bound_m, int support_l,
                                     int dimension_d, double h_bound,
                                     double e_bound);

/// (h+e)^D - h^D: worst-case change of a D-fold product under per-factor
/// perturbations bounded by e.
double product_perturbation_bound(double h_bound, double e_bound, int dimension_d);

} // namespace l2k
