#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "l2k/lut.hpp"
#include "support.hpp"

using namespace l2k;

TEST_CASE("tabulate") {
    const auto t = tabulate(KernelSpec::linear(), 4);
    REQUIRE(t.entries.size() == 5);
    CHECK(t.entries[0] == 1.0);
    CHECK(t.entries[1] == 0.75);
    CHECK(t.entries[2] == 0.5);
    CHECK(t.entries[3] == 0.25);
    CHECK(t.entries[4] == 0.0);

    const auto h3 = tabulate(KernelSpec::optimal(3), 1000);
    CHECK(h3.entries.size() == 3001);
    CHECK(h3.entries[0] == 1.0);
    CHECK(h3.entries[3000] == 0.0);
    for (int i : {17, 500, 2999})
        CHECK(h3.entries[i] == eval_kernel(KernelSpec::optimal(3), i / 1000.0));

    const auto keys = tabulate(KernelSpec::keys(), 1000);
    CHECK(keys.entries[1000] == 0.0);

    CHECK_THROWS_AS(tabulate(KernelSpec::linear(), 0), std::invalid_argument);
    CHECK_THROWS_AS(tabulate(KernelSpec::cubic3(), 100000000), std::length_error);
}

TEST_CASE("lut_eval") {
    const auto t = tabulate(KernelSpec::linear(), 4);
    CHECK(lut_eval(t, 0.26) == 0.75);
    CHECK(lut_eval(t, -0.26) == 0.75);
    CHECK(lut_eval(t, 0.0) == 1.0);
    CHECK(lut_eval(t, 1.0) == 0.0);
    CHECK(lut_eval(t, 7.3) == 0.0);
}

TEST_CASE("lut grid error stays within gamma/K") {
    auto rng = l2ktest::seeded_rng(7);
    for (const auto& s : {KernelSpec::linear(), KernelSpec::keys(),
                          KernelSpec::optimal(2)}) {
        const double gamma = kernel_bounds(s, 10000).gamma_max;
        for (int K : {100, 1000}) {
            const auto t = tabulate(s, K);
            std::uniform_real_distribution<double> xs(0.0, s.support);
            double worst = 0.0;
            for (int i = 0; i < 20000; ++i) {
                const double x = xs(rng);
                worst = std::max(worst, std::abs(lut_eval(t, x) - eval_kernel(s, x)));
            }
            CAPTURE(s.name());
            CAPTURE(K);
            CHECK(worst <= gamma / K);
        }
    }
}

TEST_CASE("table serialization round trip") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "l2k_lut_test";
    fs::create_directories(dir);
    const auto t = tabulate(KernelSpec::keys(), 37);
    const std::string path = (dir / "keys.l2kt").string();
    save_table(path, t);
    const auto back = load_table(path);
    CHECK(back.support == t.support);
    CHECK(back.precision_k == t.precision_k);
    REQUIRE(back.entries.size() == t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        CHECK(back.entries[i] == t.entries[i]);

    // header layout: magic, version, L, K
    std::FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f);
    unsigned char header[16];
    REQUIRE(std::fread(header, 1, 16, f) == 16);
    std::fclose(f);
    CHECK(header[0] == 'L');
    CHECK(header[1] == '2');
    CHECK(header[2] == 'K');
    CHECK(header[3] == 'T');
    CHECK(header[6] == 2);  // L, little-endian u16
    CHECK(header[8] == 37); // K, little-endian u32

    export_table_csv((dir / "keys.csv").string(), t);
    CHECK(fs::file_size(dir / "keys.csv") > 0);
    fs::remove_all(dir);
}

TEST_CASE("permissible resolution") {
    // frozen fixture: -log2(8 ((1.001)^2 - 1))
    ResolutionParams p{1, 2, 1.0, 1.0, 1000};
    CHECK(permissible_resolution(p) == doctest::Approx(5.96506312).epsilon(1e-6));

    ResolutionParams nz = p;
    nz.gamma_bound = 0.0;
    CHECK(std::isinf(permissible_resolution(nz)));

    ResolutionParams p10 = p;
    p10.precision_k = 10000;
    CHECK(permissible_resolution(p10) - permissible_resolution(p) ==
          doctest::Approx(std::log2(10.0)).epsilon(1e-3));

    CHECK_THROWS(permissible_resolution(ResolutionParams{0, 2, 1.0, 1.0, 10}));
}

TEST_CASE("asymptotic resolution") {
    ResolutionParams p{1, 2, 1.0, 1.0, 1000};
    CHECK(asymptotic_resolution(p) ==
          doctest::Approx(std::log2(1000.0) - 4.0).epsilon(1e-12));

    // agreement with the exact formula at large K, for all six kernels
    std::vector<KernelSpec> six = {KernelSpec::linear(), KernelSpec::keys(),
                                   KernelSpec::cubic3(), KernelSpec::optimal(1),
                                   KernelSpec::optimal(2), KernelSpec::optimal(3)};
    for (const auto& s : six) {
        const auto b = kernel_bounds(s, 10000);
        for (int K : {10000, 100000}) {
            ResolutionParams q{s.support, 2, b.h_max, b.gamma_max, K};
            CHECK(std::abs(asymptotic_resolution(q) - permissible_resolution(q)) < 0.01);
        }
    }

    ResolutionParams a = p, b = p;
    a.precision_k = 100000;
    b.precision_k = 10000;
    CHECK(permissible_resolution(a) - permissible_resolution(b) ==
          doctest::Approx(std::log2(10.0)).epsilon(1e-4));
}

TEST_CASE("min table precision") {
    for (int bits : {8, 12, 14}) {
        const int K = min_table_precision(3, 2, 1.1, 1.36, bits);
        ResolutionParams p{3, 2, 1.1, 1.36, K};
        CHECK(permissible_resolution(p) >= bits);
        if (K > 1) {
            p.precision_k = K - 1;
            CHECK(permissible_resolution(p) < bits);
        }
    }
    CHECK(min_table_precision(3, 2, 1.1, 1.36, 13) >
          min_table_precision(3, 2, 1.1, 1.36, 12));
    // the 12-14 bit regime needs K on the order of 1e5
    const int K12 = min_table_precision(3, 2, 1.1, 1.36, 12);
    const int K14 = min_table_precision(3, 2, 1.1, 1.36, 14);
    CHECK(K12 > 10000);
    CHECK(K14 < 10000000);
}

TEST_CASE("product perturbation bound") {
    CHECK(product_perturbation_bound(1.0, 1.0, 2) == 3.0);
    CHECK(product_perturbation_bound(1.0, 0.0, 3) == 0.0);

    auto rng = l2ktest::seeded_rng(11);
    const double h = 0.9, e = 0.2;
    for (int D : {2, 3}) {
        const double bound = product_perturbation_bound(h, e, D);
        std::uniform_real_distribution<double> hs(-h, h), es(-e, e);
        for (int trial = 0; trial < 20000; ++trial) {
            double base = 1.0, pert = 1.0;
            for (int i = 0; i < D; ++i) {
                const double hi = hs(rng), ei = es(rng);
                base *= hi;
                pert *= hi + ei;
            }
            CHECK(std::abs(pert - base) <= bound + 1e-15);
        }
        // extremes achieve the bound exactly
        double base = 1.0, pert = 1.0;
        for (int i = 0; i < D; ++i) {
            base *= h;
            pert *= h + e;
        }
        CHECK(std::abs(pert - base) == doctest::Approx(bound).epsilon(1e-14));
    }
}

TEST_CASE("distorted interpolation bound") {
    CHECK(distorted_interpolation_bound(1.0, 1, 1, 1.0, 0.5) == 1.0);
    CHECK(distorted_interpolation_bound(5.0, 2, 2, 1.1, 0.0) == 0.0);
}

TEST_CASE("resolution curves: slope and kernel grouping") {
    std::vector<KernelSpec> six = {KernelSpec::linear(), KernelSpec::keys(),
                                   KernelSpec::cubic3(), KernelSpec::optimal(1),
                                   KernelSpec::optimal(2), KernelSpec::optimal(3)};
    std::vector<KernelBounds> bounds;
    for (const auto& s : six) bounds.push_back(kernel_bounds(s, 10000));

    // regression of B0 on log10 K
    for (std::size_t i = 0; i < six.size(); ++i) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (double lk = 3.0; lk <= 7.0 + 1e-9; lk += 0.5) {
            const int K = static_cast<int>(std::llround(std::pow(10.0, lk)));
            ResolutionParams p{six[i].support, 2, bounds[i].h_max,
                               bounds[i].gamma_max, K};
            const double b0 = permissible_resolution(p);
            sx += lk; sy += b0; sxx += lk * lk; sxy += lk * b0;
            ++n;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CAPTURE(six[i].name());
        CHECK(slope == doctest::Approx(std::log2(10.0)).epsilon(0.01 / 3.3219));
    }

    // kernels sharing L produce near-overlapping curves; larger L sits lower
    const std::pair<int, int> same_l[] = {{0, 3}, {1, 4}, {2, 5}};
    for (int K : {1000, 100000}) {
        for (auto [a, b] : same_l) {
            ResolutionParams pa{six[a].support, 2, bounds[a].h_max,
                                bounds[a].gamma_max, K};
            ResolutionParams pb{six[b].support, 2, bounds[b].h_max,
                                bounds[b].gamma_max, K};
            CHECK(std::abs(permissible_resolution(pa) - permissible_resolution(pb)) <
                  0.5);
        }
        ResolutionParams l1{1, 2, bounds[0].h_max, bounds[0].gamma_max, K};
        ResolutionParams l2{2, 2, bounds[1].h_max, bounds[1].gamma_max, K};
        ResolutionParams l3{3, 2, bounds[2].h_max, bounds[2].gamma_max, K};
        CHECK(permissible_resolution(l2) < permissible_resolution(l1));
        CHECK(permissible_resolution(l3) < permissible_resolution(l2));
    }
}
