#pragma once

// Scalar-generic helpers shared by all numeric code. Every algorithm in this
// library is templated on a real type R (hardware double by default, software
// wide floats for high-weight scans); this header keeps the small set of
// R-generic primitives in one place.

#include <cmath>
#include <limits>
#include <type_traits>

namespace bergman::num {

template <class R>
R pi_value()
{
    static const R value = atan(R(1)) * R(4);
    return value;
}

template <>
inline double pi_value<double>()
{
    return 3.141592653589793238462643383279502884;
}

template <class R>
R pos_infinity()
{
    return std::numeric_limits<R>::has_infinity
               ? std::numeric_limits<R>::infinity()
               : (std::numeric_limits<R>::max)();
}

template <class R>
R neg_infinity()
{
    return -pos_infinity<R>();
}

template <class R>
bool is_finite(const R& x)
{
    using std::isfinite;
    return bool(isfinite(x));
}

// Reduce an angle into (-pi, pi]. The generic path uses floor division by
// 2*pi at the working precision; the double path does one fma-compensated
// step against a two-word 2*pi so that arguments of size ~1e6 (weight times
// phase) keep absolute error well below 1e-9.
template <class R>
R wrap_angle(const R& x)
{
    using std::floor;
    const R pi = pi_value<R>();
    const R two_pi = R(2) * pi;
    if (x > -pi && x <= pi)
        return x;
    R k = floor((x + pi) / two_pi);
    R r = x - k * two_pi;
    if (r > pi)
        r -= two_pi;
    if (r <= -pi)
        r += two_pi;
    return r;
}

inline double wrap_angle(const double& x)
{
    constexpr double pi = 3.141592653589793238462643383279502884;
    constexpr double two_pi_hi = 6.283185307179586476925286766559;
    constexpr double two_pi_lo = 2.4492935982947063545442e-16;
    if (x > -pi && x <= pi)
        return x;
    double n = std::nearbyint(x / two_pi_hi);
    double r = std::fma(-n, two_pi_hi, x);
    r = std::fma(-n, two_pi_lo, r);
    // one more corrective turn in case the rounded quotient left us outside
    if (r > pi) {
        r = std::fma(-1.0, two_pi_hi, r) - two_pi_lo;
    } else if (r <= -pi) {
        r = std::fma(1.0, two_pi_hi, r) + two_pi_lo;
    }
    return r;
}

template <class R>
R wrap_angle_generic_or_double(const R& x)
{
    return wrap_angle(x);
}

}  // namespace bergman::num
