#include "l2k/phantom.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace l2k {

namespace {

void plot_ray_bresenham(Image2D& img, int cx, int cy, int ex, int ey,
                        double peak, double r_total) {
    int x = cx, y = cy;
    const int dx = std::abs(ex - cx), sx = cx < ex ? 1 : -1;
    const int dy = -std::abs(ey - cy), sy = cy < ey ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        const double r = std::hypot(x - cx, y - cy);
        const double v = peak * (1.0 - r / r_total);
        img.at(x, y) = std::max(img.at(x, y), v);
        if (x == ex && y == ey) break;
        const int e2 = 2 * err;
        if (e2 >= dy) { err += dy; x += sx; }
        if (e2 <= dx) { err += dx; y += sy; }
    }
}

void plot_ray_dda(Image2D& img, double cx, double cy, double dirx, double diry,
                  double t_total, double peak) {
    const double step = 0.25;
    for (double t = 0.0; t <= t_total; t += step) {
        const double x = cx + t * dirx, y = cy + t * diry;
        const int x0 = static_cast<int>(std::floor(x));
        const int y0 = static_cast<int>(std::floor(y));
        const double fx = x - x0, fy = y - y0;
        const double v = peak * (1.0 - t / t_total);
        const double w[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy,
                             fx * fy};
        const int px[4] = {x0, x0 + 1, x0, x0 + 1};
        const int py[4] = {y0, y0, y0 + 1, y0 + 1};
        for (int i = 0; i < 4; ++i) {
            if (px[i] < 0 || px[i] >= img.width || py[i] < 0 || py[i] >= img.height)
                continue;
            img.at(px[i], py[i]) = std::max(img.at(px[i], py[i]), v * w[i]);
        }
    }
}

} // namespace

Image2D generate_phantom(const PhantomSpec& spec) {
    if (spec.size < 3 || spec.size % 2 == 0)
        throw std::invalid_argument("generate_phantom: size must be odd and >= 3");
    if (spec.num_lines < 1)
        throw std::invalid_argument("generate_phantom: num_lines must be >= 1");
    Image2D img(spec.size, spec.size, spec.background);
    const int c = (spec.size - 1) / 2;
    for (int k = 0; k < spec.num_lines; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / spec.num_lines;
        const double dx = std::cos(theta), dy = std::sin(theta);
        // distance along the ray to the frame border
        double t_exit = std::numeric_limits<double>::infinity();
        if (dx > 1e-12) t_exit = std::min(t_exit, (spec.size - 1 - c) / dx);
        if (dx < -1e-12) t_exit = std::min(t_exit, -c / dx);
        if (dy > 1e-12) t_exit = std::min(t_exit, (spec.size - 1 - c) / dy);
        if (dy < -1e-12) t_exit = std::min(t_exit, -c / dy);
        if (spec.line_profile == LineProfile::HardEdge) {
            const int ex = static_cast<int>(std::lround(c + t_exit * dx));
            const int ey = static_cast<int>(std::lround(c + t_exit * dy));
            plot_ray_bresenham(img, c, c,
                               std::clamp(ex, 0, spec.size - 1),
                               std::clamp(ey, 0, spec.size - 1),
                               spec.peak_intensity, t_exit);
        } else {
            plot_ray_dda(img, c, c, dx, dy, t_exit, spec.peak_intensity);
        }
    }
    img.at(c, c) = spec.peak_intensity;
    return img;
}

RoundTripResult round_trip(const Image2D& image, const KernelBackend& kernel,
                           const RoundTripOptions& options) {
    if (options.cycles < 1) throw std::invalid_argument("round_trip: cycles < 1");
    const Rational cx(image.width - 1, 2), cy(image.height - 1, 2);
    const AffineTransform2D Z = make_zoom(4, 5).with_center(cx, cy);
    const AffineTransform2D R = make_rotation_pythagorean(7, 25).with_center(cx, cy);
    const AffineTransform2D Zi = Z.inverse();
    const AffineTransform2D Ri = R.inverse();

    const std::vector<AffineTransform2D> fwd = {Z, R, Zi, R};
    const std::vector<AffineTransform2D> inv = {Ri, Z, Ri, Zi};

    std::vector<AffineTransform2D> passes;
    if (options.interleaved) {
        for (int c = 0; c < options.cycles; ++c) {
            passes.insert(passes.end(), fwd.begin(), fwd.end());
            passes.insert(passes.end(), inv.begin(), inv.end());
        }
    } else {
        for (int c = 0; c < options.cycles; ++c)
            passes.insert(passes.end(), fwd.begin(), fwd.end());
        for (int c = 0; c < options.cycles; ++c)
            passes.insert(passes.end(), inv.begin(), inv.end());
    }

    // the whole chain must compose to the exact identity before any
    // resampling happens
    AffineTransform2D total;
    total.cx = cx;
    total.cy = cy;
    for (const auto& p : passes) total = p.compose(total);
    if (!total.is_identity())
        throw std::logic_error("round_trip: transform chain does not cancel");

    Image2D current = image;
    for (const auto& p : passes) {
        current = resample_affine(current, p, kernel, options.boundary,
                                  options.threads);
        if (options.round_bits_per_pass)
            current = round_to_bits(current, *options.round_bits_per_pass);
    }

    RoundTripResult res;
    res.kernel = kernel.spec;
    res.cycles = options.cycles;
    res.error_map = Image2D(image.width, image.height);
    const double ccx = (image.width - 1) / 2.0, ccy = (image.height - 1) / 2.0;
    const double disk_r = (std::min(image.width, image.height) - 1) / 2.0;
    double sum2 = 0, sum2_full = 0;
    long n_disk = 0;
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            const double e = std::abs(current.at(x, y) - image.at(x, y));
            res.error_map.at(x, y) = e;
            sum2_full += e * e;
            res.max_error_full = std::max(res.max_error_full, e);
            const double dx = x - ccx, dy = y - ccy;
            if (dx * dx + dy * dy <= disk_r * disk_r) {
                sum2 += e * e;
                ++n_disk;
                res.max_error = std::max(res.max_error, e);
            }
        }
    }
    res.rms_error = std::sqrt(sum2 / n_disk);
    res.rms_error_full = std::sqrt(sum2_full / (static_cast<double>(image.width) *
                                                image.height));
    res.final_image = std::move(current);
    return res;
}

std::vector<KernelComparisonRow> compare_kernels(
    const Image2D& image, const std::vector<KernelBackend>& kernels,
    const RoundTripOptions& options) {
    if (kernels.empty())
        throw std::invalid_argument("compare_kernels: empty kernel list");
    std::vector<KernelComparisonRow> rows;
    rows.reserve(kernels.size());
    for (const auto& k : kernels) {
        const auto t0 = std::chrono::steady_clock::now();
        KernelComparisonRow row;
        row.kernel = k.spec;
        row.result = round_trip(image, k, options);
        const auto t1 = std::chrono::steady_clock::now();
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const KernelComparisonRow& a, const KernelComparisonRow& b) {
                         if (a.result.rms_error != b.result.rms_error)
                             return a.result.rms_error < b.result.rms_error;
                         return a.kernel.name() < b.kernel.name();
                     });
    return rows;
}

ImageRgb error_colormap(const Image2D& error_map, double scale_max) {
    if (!(scale_max > 0)) throw std::invalid_argument("error_colormap: scale_max <= 0");
    ImageRgb out;
    out.width = error_map.width;
    out.height = error_map.height;
    out.samples.resize(static_cast<std::size_t>(out.width) * out.height * 3);
    for (std::size_t i = 0; i < error_map.samples.size(); ++i) {
        double v = error_map.samples[i] / scale_max;
        v = std::clamp(v, 0.0, 1.0);
        const auto r = static_cast<std::uint8_t>(std::lround(255.0 * v));
        out.samples[3 * i + 0] = r;
        out.samples[3 * i + 1] = 0;
        out.samples[3 * i + 2] = static_cast<std::uint8_t>(255 - r);
    }
    return out;
}

} // namespace l2k
