// Command-line front end: kernel tables, spectra, error reports, LUT
// management, resolution calculator, resampling, and the phantom benchmark.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "l2k/image.hpp"
#include "l2k/kernel.hpp"
#include "l2k/lut.hpp"
#include "l2k/phantom.hpp"
#include "l2k/resample.hpp"
#include "l2k/spectral.hpp"
#include "l2k/transform.hpp"

using namespace l2k;

namespace {

KernelSpec parse_kernel(const std::string& s) {
    if (s == "linear") return KernelSpec::linear();
    if (s == "keys") return KernelSpec::keys();
    if (s == "cubic3") return KernelSpec::cubic3();
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string head = s.substr(0, colon);
        const std::string arg = s.substr(colon + 1);
        if (head == "keys") return KernelSpec::keys(std::stod(arg));
        if (head == "optimal") return KernelSpec::optimal(std::stoi(arg));
        if (head == "truncsinc") return KernelSpec::truncated_sinc(std::stoi(arg));
    }
    throw CLI::ValidationError("kernel", "unknown kernel '" + s + "'");
}

std::vector<KernelSpec> parse_kernel_list(const std::string& s) {
    if (s == "all")
        return {KernelSpec::linear(),  KernelSpec::keys(),     KernelSpec::cubic3(),
                KernelSpec::optimal(1), KernelSpec::optimal(2), KernelSpec::optimal(3)};
    std::vector<KernelSpec> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_kernel(item));
    if (out.empty()) throw CLI::ValidationError("kernels", "empty kernel list");
    return out;
}

std::pair<long long, long long> parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string safe_name(const KernelSpec& s) {
    std::string n = s.name();
    for (char& c : n)
        if (c == ':' || c == '.') c = '_';
    return n;
}

int cmd_kernel_dump(const std::string& kernel, double step, const std::string& out) {
    const auto spec = parse_kernel(kernel);
    if (step <= 0) throw CLI::ValidationError("step", "step must be positive");
    std::ostringstream csv;
    csv << "x,h\n";
    for (double x = -spec.support; x <= spec.support + step / 2; x += step)
        csv << fmt(x) << ',' << fmt(eval_kernel(spec, x)) << '\n';
    write_file_atomic(out, csv.str());
    return 0;
}

int cmd_spectrum(const std::string& kernel, double tmax, int points,
                 const std::string& out) {
    const auto table = spectrum_sweep(parse_kernel(kernel), 0.0, tmax, points);
    std::ostringstream csv;
    csv << "t,F\n";
    for (std::size_t i = 0; i < table.frequencies.size(); ++i)
        csv << fmt(table.frequencies[i]) << ',' << fmt(table.values[i]) << '\n';
    write_file_atomic(out, csv.str());
    return 0;
}

int cmd_fae(const std::string& kernel) {
    const auto r = fae(parse_kernel(kernel));
    std::printf("%.4f\n", r.e_total);
    return 0;
}

int cmd_fae_table(int lmax, const std::string& out) {
    if (lmax < 1) throw CLI::ValidationError("Lmax", "Lmax must be >= 1");
    std::ostringstream csv;
    csv << "L,E,fitted\n";
    for (int L = 1; L <= lmax; ++L)
        csv << L << ',' << fmt(optimal_fae(L)) << ',' << fmt(fae_approx(L)) << '\n';
    write_file_atomic(out, csv.str());
    return 0;
}

int cmd_tabulate(const std::string& kernel, int K, const std::string& out) {
    const auto table = tabulate(parse_kernel(kernel), K);
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".csv")
        export_table_csv(out, table);
    else
        save_table(out, table);
    std::printf("%zu entries (%zu bytes of payload)\n", table.entries.size(),
                table.entries.size() * sizeof(double));
    return 0;
}

int cmd_resolution(int L, int D, double h, double gamma, int K, bool sweep,
                   const std::string& out) {
    if (!sweep) {
        ResolutionParams p{L, D, h, gamma, K};
        std::printf("%.6f\n", permissible_resolution(p));
        return 0;
    }
    std::ostringstream csv;
    csv << "log10K,B0,asymptote\n";
    for (double lk = 3.0; lk <= 7.0 + 1e-9; lk += 0.1) {
        const int k = static_cast<int>(std::llround(std::pow(10.0, lk)));
        ResolutionParams p{L, D, h, gamma, k};
        csv << fmt(lk) << ',' << fmt(permissible_resolution(p)) << ','
            << fmt(asymptotic_resolution(p)) << '\n';
    }
    if (out.empty())
        std::fputs(csv.str().c_str(), stdout);
    else
        write_file_atomic(out, csv.str());
    return 0;
}

int cmd_min_k(int L, int D, double h, double gamma, int bits) {
    std::printf("%d\n", min_table_precision(L, D, h, gamma, bits));
    return 0;
}

int cmd_resample(const std::string& in, const std::string& kernel,
                 std::optional<int> lut_k, const std::string& zoom,
                 const std::string& rotate, const std::string& boundary,
                 const std::string& out, int threads) {
    if (zoom.empty() == rotate.empty())
        throw CLI::ValidationError("transform", "give exactly one of --zoom, --rotate");
    Image2D img;
    try {
        img = read_pgm(in);
    } catch (const std::runtime_error& e) {
        // a file that exists but does not parse is a usage error, not a
        // resource failure
        if (std::filesystem::exists(in)) throw std::invalid_argument(e.what());
        throw;
    }
    const auto spec = parse_kernel(kernel);

    AffineTransform2D t;
    if (!zoom.empty()) {
        const auto [a, b] = parse_ratio(zoom);
        t = make_zoom(a, b);
    } else {
        const auto [p, q] = parse_ratio(rotate);
        t = make_rotation_pythagorean(p, q);
    }
    t = t.with_center(Rational(img.width - 1, 2), Rational(img.height - 1, 2));

    BoundaryPolicy bp;
    if (boundary == "zero") bp = BoundaryPolicy::Zero;
    else if (boundary == "clamp") bp = BoundaryPolicy::Clamp;
    else if (boundary == "mirror") bp = BoundaryPolicy::Mirror;
    else throw CLI::ValidationError("boundary", "unknown boundary '" + boundary + "'");

    KernelTable table;
    KernelBackend backend = KernelBackend::exact(spec);
    if (lut_k) {
        table = tabulate(spec, *lut_k);
        backend = KernelBackend::lut(table);
    }

    const auto result = resample_affine(img, t, backend, bp, threads);
    const int maxval = img.declared_bits && *img.declared_bits > 8 ? 65535 : 255;
    write_pgm(out, round_to_bits(result, maxval == 255 ? 8 : 16), maxval);
    return 0;
}

int cmd_phantom(int size, int cycles, const std::string& kernels, bool interleaved,
                std::optional<int> round_bits, const std::string& outdir,
                int threads) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    PhantomSpec pspec;
    pspec.size = size;
    const auto phantom = generate_phantom(pspec);
    write_pgm((fs::path(outdir) / "phantom.pgm").string(), phantom);

    RoundTripOptions opt;
    opt.cycles = cycles;
    opt.interleaved = interleaved;
    opt.round_bits_per_pass = round_bits;
    opt.threads = threads;

    const auto specs = parse_kernel_list(kernels);
    std::vector<KernelBackend> backends;
    for (const auto& s : specs) backends.push_back(KernelBackend::exact(s));
    const auto rows = compare_kernels(phantom, backends, opt);

    double scale_max = 0;
    for (const auto& r : rows) scale_max = std::max(scale_max, r.result.max_error);
    if (scale_max <= 0) scale_max = 1;

    std::ostringstream summary, timings;
    summary << "kernel,L,rms,max,rms_full,max_full\n";
    timings << "kernel,runtime_ms\n";
    for (const auto& r : rows) {
        const auto& res = r.result;
        summary << r.kernel.name() << ',' << r.kernel.support << ','
                << fmt(res.rms_error) << ',' << fmt(res.max_error) << ','
                << fmt(res.rms_error_full) << ',' << fmt(res.max_error_full) << '\n';
        timings << r.kernel.name() << ',' << fmt(r.runtime_ms) << '\n';
        const std::string base = (fs::path(outdir) / safe_name(r.kernel)).string();
        write_pgm(base + "_pprime.pgm", round_to_bits(res.final_image, 8));
        write_f64(base + "_error.f64", res.error_map);
        write_ppm(base + "_error.ppm", error_colormap(res.error_map, scale_max));
    }
    write_file_atomic((fs::path(outdir) / "summary.csv").string(), summary.str());
    write_file_atomic((fs::path(outdir) / "timings.csv").string(), timings.str());
    std::printf("%zu kernels -> %s\n", rows.size(), outdir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"L2-optimal interpolation kernel toolkit"};
    app.require_subcommand(1);
    int threads = 0;

    std::string kernel, out, in, zoom, rotate, boundary = "mirror", kernels = "all",
                outdir = ".";
    double step = 0.01, tmax = 3.0, h = 1.1, gamma = 1.5;
    int points = 301, lmax = 10, K = 1000, L = 3, D = 2, bits = 8, size = 257,
        cycles = 11;
    bool sweep = false, interleaved = false;
    std::optional<int> lut_k, round_bits;

    auto* dump = app.add_subcommand("kernel-dump", "sampled kernel values as CSV");
    dump->add_option("--kernel", kernel)->required();
    dump->add_option("--step", step);
    dump->add_option("--out", out)->required();

    auto* spec_cmd = app.add_subcommand("spectrum", "frequency response as CSV");
    spec_cmd->add_option("--kernel", kernel)->required();
    spec_cmd->add_option("--tmax", tmax);
    spec_cmd->add_option("--points", points);
    spec_cmd->add_option("--out", out)->required();

    auto* fae_cmd = app.add_subcommand("fae", "frequency approximation error");
    fae_cmd->add_option("--kernel", kernel)->required();

    auto* fae_tbl = app.add_subcommand("fae-table", "E_L and fitted law per L");
    fae_tbl->add_option("--Lmax", lmax);
    fae_tbl->add_option("--out", out)->required();

    auto* tab = app.add_subcommand("tabulate", "build a kernel lookup table");
    tab->add_option("--kernel", kernel)->required();
    tab->add_option("--K", K)->required();
    tab->add_option("--out", out)->required();

    auto* res = app.add_subcommand("resolution", "permissible signal resolution");
    res->set_help_flag("--help", "print help");  // frees -h for the bound flag
    res->add_option("--L", L)->required();
    res->add_option("--D", D)->required();
    res->add_option("--h", h)->required();
    res->add_option("--gamma", gamma)->required();
    res->add_option("--K", K);
    res->add_flag("--sweep", sweep, "emit B0 over log10 K in [3, 7]");
    res->add_option("--out", out);

    auto* mink = app.add_subcommand("min-K", "smallest K for a target bit depth");
    mink->set_help_flag("--help", "print help");
    mink->add_option("--L", L)->required();
    mink->add_option("--D", D)->required();
    mink->add_option("--h", h)->required();
    mink->add_option("--gamma", gamma)->required();
    mink->add_option("--bits", bits)->required();

    auto* rs = app.add_subcommand("resample", "affine resampling of a PGM image");
    rs->add_option("--in", in)->required();
    rs->add_option("--kernel", kernel)->required();
    rs->add_option("--lut", lut_k, "evaluate through a K-entry lookup table");
    rs->add_option("--zoom", zoom, "rational zoom a/b");
    rs->add_option("--rotate", rotate, "Pythagorean rotation sin = p/q");
    rs->add_option("--boundary", boundary);
    rs->add_option("--out", out)->required();
    rs->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* ph = app.add_subcommand("phantom", "edge-phantom round-trip benchmark");
    ph->add_option("--size", size);
    ph->add_option("--cycles", cycles);
    ph->add_option("--kernels", kernels, "comma-separated list or 'all'");
    ph->add_flag("--interleaved", interleaved);
    ph->add_option("--round-per-pass", round_bits, "round to this many bits per pass");
    ph->add_option("--outdir", outdir)->required();
    ph->add_option("--threads", threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*dump) return cmd_kernel_dump(kernel, step, out);
        if (*spec_cmd) return cmd_spectrum(kernel, tmax, points, out);
        if (*fae_cmd) return cmd_fae(kernel);
        if (*fae_tbl) return cmd_fae_table(lmax, out);
        if (*tab) return cmd_tabulate(kernel, K, out);
        if (*res) return cmd_resolution(L, D, h, gamma, K, sweep, out);
        if (*mink) return cmd_min_k(L, D, h, gamma, bits);
        if (*rs)
            return cmd_resample(in, kernel, lut_k, zoom, rotate, boundary, out,
                                threads);
        if (*ph)
            return cmd_phantom(size, cycles, kernels, interleaved, round_bits,
                               outdir, threads);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
