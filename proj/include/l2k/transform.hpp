#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace l2k {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact-rational 2x2 affine map about a fixed center:
///   p -> M (p - c) + c
/// Composition and inversion stay in rational arithmetic, so transform
/// algebra contributes no roundoff: any residual error downstream is the
/// interpolation's.
struct AffineTransform2D {
    Rational m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Rational cx = 0, cy = 0;

    Rational det() const { return m00 * m11 - m01 * m10; }

    AffineTransform2D inverse() const {
        const Rational d = det();
        if (d == 0) throw std::invalid_argument("AffineTransform2D: singular matrix");
        AffineTransform2D inv;
        inv.m00 = m11 / d;
        inv.m01 = -m01 / d;
        inv.m10 = -m10 / d;
        inv.m11 = m00 / d;
        inv.cx = cx;
        inv.cy = cy;
        return inv;
    }

    /// this ∘ other: applies `other` first.
    AffineTransform2D compose(const AffineTransform2D& other) const {
        if (cx != other.cx || cy != other.cy)
            throw std::invalid_argument("AffineTransform2D: centers differ");
        AffineTransform2D r;
        r.m00 = m00 * other.m00 + m01 * other.m10;
        r.m01 = m00 * other.m01 + m01 * other.m11;
        r.m10 = m10 * other.m00 + m11 * other.m10;
        r.m11 = m10 * other.m01 + m11 * other.m11;
        r.cx = cx;
        r.cy = cy;
        return r;
    }

    bool is_identity() const {
        return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1;
    }

    AffineTransform2D with_center(const Rational& x, const Rational& y) const {
        AffineTransform2D r = *this;
        r.cx = x;
        r.cy = y;
        return r;
    }
};

/// Isotropic zoom z -> (num/den) z.
inline AffineTransform2D make_zoom(long long num, long long den) {
    if (num == 0 || den == 0)
        throw std::invalid_argument("make_zoom: zero numerator or denominator");
    AffineTransform2D t;
    t.m00 = Rational(num, den);
    t.m11 = Rational(num, den);
    return t;
}

/// Rotation with sin = sin_num/hyp and cos = sqrt(hyp^2 - sin_num^2)/hyp.
/// Requires a Pythagorean triple so the matrix stays exactly rational.
inline AffineTransform2D make_rotation_pythagorean(long long sin_num, long long hyp) {
    if (hyp <= 0) throw std::invalid_argument("make_rotation_pythagorean: hyp <= 0");
    const long long c2 = hyp * hyp - sin_num * sin_num;
    if (c2 < 0) throw std::invalid_argument("make_rotation_pythagorean: |sin| > 1");
    const long long c = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(c2))));
    if (c * c != c2)
        throw std::invalid_argument("make_rotation_pythagorean: not a Pythagorean triple");
    AffineTransform2D t;
    t.m00 = Rational(c, hyp);
    t.m01 = Rational(-sin_num, hyp);
    t.m10 = Rational(sin_num, hyp);
    t.m11 = Rational(c, hyp);
    return t;
}

} // namespace l2k
