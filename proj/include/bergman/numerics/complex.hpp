#pragma once

// A small complex value type usable with any real scalar R. std::complex is
// only specified for the built-in floating point types, so multiprecision
// scalars need their own carrier; keeping one type for all scalars avoids
// duplicating the arithmetic.

#include <bergman/numerics/real.hpp>

#include <cmath>

namespace bergman::num {

template <class R>
struct complex_t {
    R re{};
    R im{};

    complex_t() = default;
    complex_t(R r) : re(std::move(r)), im(R(0)) {}
    complex_t(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    complex_t operator-() const { return {-re, -im}; }

    friend complex_t operator+(const complex_t& a, const complex_t& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend complex_t operator-(const complex_t& a, const complex_t& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend complex_t operator*(const complex_t& a, const complex_t& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend complex_t operator*(const R& s, const complex_t& b)
    {
        return {s * b.re, s * b.im};
    }
    friend complex_t operator*(const complex_t& a, const R& s)
    {
        return {a.re * s, a.im * s};
    }

    // Smith's algorithm: avoids spurious overflow for components spanning
    // most of the exponent range.
    friend complex_t operator/(const complex_t& a, const complex_t& b)
    {
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            R r = b.im / b.re;
            R den = b.re + b.im * r;
            return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
        }
        R r = b.re / b.im;
        R den = b.re * r + b.im;
        return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
    }
    friend complex_t operator/(const complex_t& a, const R& s)
    {
        return {a.re / s, a.im / s};
    }

    friend bool operator==(const complex_t& a, const complex_t& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

template <class R>
complex_t<R> conj(const complex_t<R>& z)
{
    return {z.re, -z.im};
}

template <class R>
R abs(const complex_t<R>& z)
{
    using std::hypot;
    return hypot(z.re, z.im);
}

template <class R>
R norm_sq(const complex_t<R>& z)
{
    return z.re * z.re + z.im * z.im;
}

template <class R>
R arg(const complex_t<R>& z)
{
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class R>
complex_t<R> exp(const complex_t<R>& z)
{
    using std::cos;
    using std::exp;
    using std::sin;
    R m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

template <class R>
complex_t<R> sqrt(const complex_t<R>& z)
{
    using std::sqrt;
    R m = abs(z);
    if (m == R(0))
        return {R(0), R(0)};
    R half = (m + z.re) / R(2);
    if (half < R(0))
        half = R(0);
    R u = sqrt(half);
    if (u == R(0)) {
        R v = sqrt(m);
        return {R(0), z.im >= R(0) ? v : -v};
    }
    R v = z.im / (R(2) * u);
    return {u, v};
}

template <class R>
complex_t<R> imaginary_unit()
{
    return {R(0), R(1)};
}

}  // namespace bergman::num
