#pragma once

// Complex values stored as (log-magnitude, argument). Series terms such as
// (cz+d)^{-p} at weights in the hundreds span far more than the double
// exponent range, so all term arithmetic happens in the log domain and only
// final, rescaled quantities are materialized as ordinary complex numbers.
//
// Zero is encoded canonically as log_mag = -inf with arg = 0, which keeps
// argument arithmetic NaN-free. The argument is kept in (-pi, pi].

#include <bergman/numerics/complex.hpp>
#include <bergman/numerics/real.hpp>

#include <cmath>
#include <stdexcept>

namespace bergman::num {

template <class R>
struct log_complex {
    R log_mag;
    R arg;

    log_complex() : log_mag(neg_infinity<R>()), arg(R(0)) {}
    log_complex(R lm, R a) : log_mag(std::move(lm)), arg(wrap_angle(a))
    {
        if (is_zero())
            arg = R(0);
    }

    static log_complex zero() { return log_complex(); }
    static log_complex one() { return log_complex(R(0), R(0)); }

    bool is_zero() const { return !(log_mag > neg_infinity<R>()); }

    complex_t<R> to_complex() const
    {
        using std::cos;
        using std::exp;
        using std::sin;
        if (is_zero())
            return complex_t<R>(R(0), R(0));
        R m = exp(log_mag);
        return {m * cos(arg), m * sin(arg)};
    }
};

template <class R>
log_complex<R> log_from_complex(const complex_t<R>& z)
{
    using std::log;
    R m = abs(z);
    if (m == R(0))
        return log_complex<R>::zero();
    return log_complex<R>(log(m), arg(z));
}

template <class R>
log_complex<R> log_from_real(const R& x)
{
    using std::log;
    if (x == R(0))
        return log_complex<R>::zero();
    if (x > R(0))
        return log_complex<R>(log(x), R(0));
    return log_complex<R>(log(-x), pi_value<R>());
}

template <class R>
log_complex<R> log_mul(const log_complex<R>& a, const log_complex<R>& b)
{
    if (a.is_zero() || b.is_zero())
        return log_complex<R>::zero();
    return log_complex<R>(a.log_mag + b.log_mag, a.arg + b.arg);
}

template <class R>
log_complex<R> log_div(const log_complex<R>& a, const log_complex<R>& b)
{
    if (b.is_zero())
        throw std::domain_error("log_div: division by zero");
    if (a.is_zero())
        return log_complex<R>::zero();
    return log_complex<R>(a.log_mag - b.log_mag, a.arg - b.arg);
}

// Integer powers are exact in the value sense: the argument is multiplied
// before a single range reduction, so no branch-cut ambiguity arises.
template <class R>
log_complex<R> log_pow(const log_complex<R>& a, long k)
{
    if (a.is_zero()) {
        if (k < 0)
            throw std::domain_error("log_pow: zero base with negative exponent");
        if (k == 0)
            return log_complex<R>::one();
        return log_complex<R>::zero();
    }
    return log_complex<R>(a.log_mag * R(k), a.arg * R(k));
}

template <class R>
log_complex<R> log_conj(const log_complex<R>& a)
{
    if (a.is_zero())
        return a;
    return log_complex<R>(a.log_mag, -a.arg);
}

template <class R>
log_complex<R> log_neg(const log_complex<R>& a)
{
    if (a.is_zero())
        return a;
    return log_complex<R>(a.log_mag, a.arg + pi_value<R>());
}

// |a/b - 1|, evaluated without leaving the log domain until the end; the
// usual residual measure for identities whose two sides overflow doubles.
template <class R>
R relative_deviation(const log_complex<R>& a, const log_complex<R>& b)
{
    using std::exp;
    using std::sqrt;
    if (a.is_zero() && b.is_zero())
        return R(0);
    if (b.is_zero() || a.is_zero())
        return pos_infinity<R>();
    log_complex<R> q = log_div(a, b);
    if (q.log_mag > R(1))
        return pos_infinity<R>();
    // |e^{x+iy} - 1|^2 = e^{2x} - 2 e^x cos y + 1
    using std::cos;
    R ex = exp(q.log_mag);
    R d2 = ex * ex - R(2) * ex * cos(q.arg) + R(1);
    if (d2 < R(0))
        d2 = R(0);
    return sqrt(d2);
}

}  // namespace bergman::num
