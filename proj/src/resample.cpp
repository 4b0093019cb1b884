#include "l2k/resample.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace l2k {

int resolve_index(int i, int n, BoundaryPolicy policy) {
    if (i >= 0 && i < n) return i;
    switch (policy) {
        case BoundaryPolicy::Zero:
            return -1;
        case BoundaryPolicy::Clamp:
            return i < 0 ? 0 : n - 1;
        case BoundaryPolicy::Mirror:
            // symmetric reflection with edge repeat: ..., 1, 0 | 0, 1, ...
            while (i < 0 || i >= n) {
                if (i < 0) i = -1 - i;
                else i = 2 * n - 1 - i;
            }
            return i;
    }
    return -1;
}

namespace {

constexpr int kMaxTaps = 64;

struct AxisTaps {
    int first = 0;   // sample index of taps[0]
    int count = 0;
    double w[kMaxTaps];
};

// Taps for position base + frac, frac in [0, 1). frac == 0 collapses to the
// single exact sample (cardinality makes the other taps vanish).
void make_taps(const KernelBackend& kernel, int base, double frac, AxisTaps& out) {
    const int L = kernel.support();
    if (frac == 0.0) {
        out.first = base;
        out.count = 1;
        out.w[0] = 1.0;
        return;
    }
    out.first = base - L + 1;
    out.count = 2 * L;
    for (int m = 0; m < 2 * L; ++m)
        out.w[m] = kernel(frac + (L - 1 - m));
}

void make_taps_at(const KernelBackend& kernel, double x, AxisTaps& out) {
    const double base = std::floor(x);
    make_taps(kernel, static_cast<int>(base), x - base, out);
}

double gather_1d(const Signal1D& s, const AxisTaps& taps, BoundaryPolicy boundary) {
    const int n = static_cast<int>(s.samples.size());
    double acc = 0.0;
    for (int m = 0; m < taps.count; ++m) {
        const int k = resolve_index(taps.first + m, n, boundary);
        if (k >= 0) acc += s.samples[static_cast<std::size_t>(k)] * taps.w[m];
    }
    return acc;
}

double gather_2d(const Image2D& img, const AxisTaps& tx, const AxisTaps& ty,
                 BoundaryPolicy boundary) {
    double acc = 0.0;
    for (int mx = 0; mx < tx.count; ++mx) {
        const int k = resolve_index(tx.first + mx, img.width, boundary);
        if (k < 0) continue;
        double inner = 0.0;
        for (int my = 0; my < ty.count; ++my) {
            const int n = resolve_index(ty.first + my, img.height, boundary);
            if (n >= 0) inner += img.at(k, n) * ty.w[my];
        }
        acc += tx.w[mx] * inner;
    }
    return acc;
}

} // namespace

double interpolate_1d(const Signal1D& signal, double x,
                      const KernelBackend& kernel, BoundaryPolicy boundary) {
    if (kernel.support() > kMaxTaps / 2)
        throw std::invalid_argument("interpolate_1d: kernel support too large");
    AxisTaps taps;
    make_taps_at(kernel, x, taps);
    return gather_1d(signal, taps, boundary);
}

double interpolate_2d(const Image2D& image, double x, double y,
                      const KernelBackend& kernel, BoundaryPolicy boundary) {
    if (kernel.support() > kMaxTaps / 2)
        throw std::invalid_argument("interpolate_2d: kernel support too large");
    AxisTaps tx, ty;
    make_taps_at(kernel, x, tx);
    make_taps_at(kernel, y, ty);
    return gather_2d(image, tx, ty, boundary);
}

namespace {

using boost::multiprecision::cpp_int;

// src coordinate as an exact integer-linear form (A i + B j + C) / D
struct LinearForm {
    cpp_int a, b, c, d;  // d > 0
    bool fits64 = false;
    std::int64_t a64 = 0, b64 = 0, c64 = 0, d64 = 1;
};

LinearForm make_form(const Rational& ma, const Rational& mb, const Rational& t,
                     int max_coord) {
    LinearForm f;
    const cpp_int da = denominator(ma), db = denominator(mb), dt = denominator(t);
    cpp_int d = lcm(lcm(da, db), dt);
    f.a = numerator(ma) * (d / da);
    f.b = numerator(mb) * (d / db);
    f.c = numerator(t) * (d / dt);
    f.d = d;
    const cpp_int bound =
        abs(f.a) * max_coord + abs(f.b) * max_coord + abs(f.c) + f.d;
    if (bound < cpp_int(std::int64_t(1) << 62)) {
        f.fits64 = true;
        f.a64 = f.a.convert_to<std::int64_t>();
        f.b64 = f.b.convert_to<std::int64_t>();
        f.c64 = f.c.convert_to<std::int64_t>();
        f.d64 = f.d.convert_to<std::int64_t>();
    }
    return f;
}

// splits N/D into floor and the residue numerator
inline void split64(std::int64_t n, std::int64_t d, std::int64_t& base,
                    std::int64_t& res) {
    base = n / d;
    res = n % d;
    if (res < 0) {
        res += d;
        --base;
    }
}

} // namespace

Image2D resample_affine(const Image2D& image, const AffineTransform2D& transform,
                        const KernelBackend& kernel, BoundaryPolicy boundary,
                        int threads) {
    if (kernel.support() > kMaxTaps / 2)
        throw std::invalid_argument("resample_affine: kernel support too large");
    const AffineTransform2D inv = transform.inverse();
    const int max_coord = std::max(image.width, image.height);
    // src_x = m00 (i - cx) + m01 (j - cy) + cx, likewise src_y
    const Rational tx = inv.cx - inv.m00 * inv.cx - inv.m01 * inv.cy;
    const Rational ty = inv.cy - inv.m10 * inv.cx - inv.m11 * inv.cy;
    const LinearForm fx = make_form(inv.m00, inv.m01, tx, max_coord);
    const LinearForm fy = make_form(inv.m10, inv.m11, ty, max_coord);

    // Weight tables per fractional residue: the rational transform yields only
    // D distinct fractional offsets per axis.
    auto build_cache = [&](const LinearForm& f) {
        std::vector<AxisTaps> cache;
        if (f.fits64 && f.d64 <= 65536) {
            cache.resize(static_cast<std::size_t>(f.d64));
            for (std::int64_t r = 0; r < f.d64; ++r)
                make_taps(kernel, 0, static_cast<double>(r) / static_cast<double>(f.d64),
                          cache[static_cast<std::size_t>(r)]);
        }
        return cache;
    };
    const std::vector<AxisTaps> cache_x = build_cache(fx);
    const std::vector<AxisTaps> cache_y = build_cache(fy);

    Image2D out(image.width, image.height);
    out.declared_bits = image.declared_bits;

    auto taps_for = [&](const LinearForm& f, const std::vector<AxisTaps>& cache,
                        int i, int j, AxisTaps& taps) {
        if (f.fits64) {
            const std::int64_t n = f.a64 * i + f.b64 * j + f.c64;
            std::int64_t base, res;
            split64(n, f.d64, base, res);
            if (!cache.empty()) {
                taps = cache[static_cast<std::size_t>(res)];
                taps.first += static_cast<int>(base);
            } else {
                make_taps(kernel, static_cast<int>(base),
                          static_cast<double>(res) / static_cast<double>(f.d64), taps);
            }
        } else {
            const Rational q =
                (Rational(f.a) * i + Rational(f.b) * j + Rational(f.c)) / Rational(f.d);
            cpp_int num = numerator(q), den = denominator(q);
            cpp_int base = num / den;
            cpp_int rem = num % den;
            if (rem < 0) { rem += den; --base; }
            make_taps(kernel, base.convert_to<int>(),
                      Rational(rem, den).convert_to<double>(), taps);
        }
    };

    auto work = [&](int y0, int y1) {
        AxisTaps txp, typ;
        for (int j = y0; j < y1; ++j) {
            for (int i = 0; i < image.width; ++i) {
                taps_for(fx, cache_x, i, j, txp);
                taps_for(fy, cache_y, i, j, typ);
                out.at(i, j) = gather_2d(image, txp, typ, boundary);
            }
        }
    };

    int nthreads = threads;
    if (nthreads <= 0)
        nthreads = static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, image.height);
    if (nthreads == 1) {
        work(0, image.height);
    } else {
        std::vector<std::thread> pool;
        const int rows = image.height;
        for (int t = 0; t < nthreads; ++t) {
            const int y0 = rows * t / nthreads;
            const int y1 = rows * (t + 1) / nthreads;
            pool.emplace_back(work, y0, y1);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

} // namespace l2k
