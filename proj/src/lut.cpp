#include "l2k/lut.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "l2k/image.hpp"

namespace l2k {

KernelTable tabulate(const KernelSpec& spec, int precision_k) {
    if (precision_k < 1) throw std::invalid_argument("tabulate: precision_k < 1");
    const std::int64_t n = static_cast<std::int64_t>(spec.support) * precision_k + 1;
    if (n > kTabulateEntryCap)
        throw std::length_error("tabulate: table exceeds entry cap");
    KernelTable table;
    table.source = spec;
    table.precision_k = precision_k;
    table.support = spec.support;
    table.entries.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        table.entries[static_cast<std::size_t>(i)] =
            eval_kernel(spec, static_cast<double>(i) / precision_k);
    return table;
}

namespace {
constexpr char kMagic[4] = {'L', '2', 'K', 'T'};
constexpr std::uint16_t kVersion = 1;
} // namespace

void save_table(const std::string& path, const KernelTable& table) {
    std::string bytes;
    bytes.append(kMagic, 4);
    const std::uint16_t ver = kVersion;
    const std::uint16_t L = static_cast<std::uint16_t>(table.support);
    const std::uint32_t K = static_cast<std::uint32_t>(table.precision_k);
    const std::uint32_t reserved = 0;
    bytes.append(reinterpret_cast<const char*>(&ver), 2);
    bytes.append(reinterpret_cast<const char*>(&L), 2);
    bytes.append(reinterpret_cast<const char*>(&K), 4);
    bytes.append(reinterpret_cast<const char*>(&reserved), 4);
    bytes.append(reinterpret_cast<const char*>(table.entries.data()),
                 table.entries.size() * sizeof(double));
    write_file_atomic(path, bytes);
}

KernelTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    char header[16];
    in.read(header, 16);
    if (!in || std::memcmp(header, kMagic, 4) != 0)
        throw std::runtime_error("not a kernel table: " + path);
    std::uint16_t ver, L;
    std::uint32_t K;
    std::memcpy(&ver, header + 4, 2);
    std::memcpy(&L, header + 6, 2);
    std::memcpy(&K, header + 8, 4);
    if (ver != kVersion) throw std::runtime_error("unsupported table version");
    KernelTable table;
    table.support = L;
    table.precision_k = static_cast<int>(K);
    table.source = KernelSpec{KernelKind::Linear, static_cast<int>(L), -0.5};
    table.entries.resize(static_cast<std::size_t>(L) * K + 1);
    in.read(reinterpret_cast<char*>(table.entries.data()),
            static_cast<std::streamsize>(table.entries.size() * sizeof(double)));
    if (!in) throw std::runtime_error("truncated kernel table: " + path);
    return table;
}

void export_table_csv(const std::string& path, const KernelTable& table) {
    std::ostringstream out;
    out << "index,x,value\n";
    char buf[64];
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.16e,%.16e\n", i,
                      static_cast<double>(i) / table.precision_k, table.entries[i]);
        out << buf;
    }
    write_file_atomic(path, out.str());
}

double permissible_resolution(const ResolutionParams& p) {
    if (p.h_bound <= 0 || p.gamma_bound < 0 || p.support_l < 1 ||
        p.dimension_d < 1 || p.precision_k < 1)
        throw std::invalid_argument("permissible_resolution: bad parameters");
    if (p.gamma_bound == 0) return std::numeric_limits<double>::infinity();
    const double D = p.dimension_d;
    const double growth =
        std::pow(1.0 + p.gamma_bound / (p.h_bound * p.precision_k), D) - 1.0;
    const double bound =
        2.0 * std::pow(p.support_l + 1.0, D) * std::pow(p.h_bound, D) * growth;
    return -std::log2(bound);
}

double asymptotic_resolution(const ResolutionParams& p) {
    if (p.gamma_bound == 0) return std::numeric_limits<double>::infinity();
    const double D = p.dimension_d;
    return std::log2(static_cast<double>(p.precision_k)) -
           std::log2(2.0 * std::pow(p.support_l + 1.0, D) *
                     std::pow(p.h_bound, D - 1.0) * D * p.gamma_bound);
}

int min_table_precision(int support_l, int dimension_d, double h_bound,
                        double gamma_bound, int target_bits) {
    if (target_bits < 1) throw std::invalid_argument("min_table_precision: target_bits < 1");
    if (gamma_bound == 0) return 1;
    const double D = dimension_d;
    // invert B_0(K) >= target: (1 + g/(hK))^D - 1 <= c
    const double c = std::pow(2.0, -static_cast<double>(target_bits)) /
                     (2.0 * std::pow(support_l + 1.0, D) * std::pow(h_bound, D));
    const double root = std::pow(1.0 + c, 1.0 / D) - 1.0;
    double k0 = gamma_bound / (h_bound * root);
    int K = static_cast<int>(std::ceil(k0));
    if (K < 1) K = 1;
    ResolutionParams p{support_l, dimension_d, h_bound, gamma_bound, K};
    while (permissible_resolution(p) < target_bits) {
        ++K;
        p.precision_k = K;
    }
    while (K > 1) {
        p.precision_k = K - 1;
        if (permissible_resolution(p) < target_bits) break;
        --K;
    }
    return K;
}

double distorted_interpolation_bound(double sample_bound_m, int support_l,
                                     int dimension_d, double h_bound,
                                     double e_bound) {
    return sample_bound_m * std::pow(support_l + 1.0, dimension_d) *
           product_perturbation_bound(h_bound, e_bound, dimension_d);
}

double product_perturbation_bound(double h_bound, double e_bound, int dimension_d) {
    if (h_bound < 0 || e_bound < 0 || dimension_d < 1)
        throw std::invalid_argument("product_perturbation_bound: bad parameters");
    return std::pow(h_bound + e_bound, dimension_d) -
           std::pow(h_bound, dimension_d);
}

} // namespace l2k
