#pragma once

// Compensated (Neumaier) summation and the rescaled complex accumulator used
// by the series engine. The accumulator keeps real/imag sums relative to a
// running maximum log-magnitude, so series whose terms span thousands of
// orders of magnitude collapse to well-scaled arithmetic.

#include <bergman/numerics/log_complex.hpp>

#include <cmath>
#include <cstdint>

namespace bergman::num {

template <class R>
struct compensated_sum {
    R sum{0};
    R comp{0};

    void add(const R& x)
    {
        using std::abs;
        R t = sum + x;
        if (abs(sum) >= abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    void scale(const R& f)
    {
        sum *= f;
        comp *= f;
    }

    R value() const { return sum + comp; }
};

// Accumulates log-domain complex terms. All state is relative to scale_log,
// the largest term log-magnitude seen so far; pushing a larger term rescales
// the running sums.
template <class R>
struct rescaled_accumulator {
    R scale_log = neg_infinity<R>();
    compensated_sum<R> re;
    compensated_sum<R> im;
    std::int64_t terms = 0;

    void add(const log_complex<R>& t)
    {
        using std::cos;
        using std::exp;
        using std::sin;
        ++terms;
        if (t.is_zero())
            return;
        if (t.log_mag > scale_log) {
            if (scale_log > neg_infinity<R>()) {
                R f = exp(scale_log - t.log_mag);
                re.scale(f);
                im.scale(f);
            }
            scale_log = t.log_mag;
        }
        R m = exp(t.log_mag - scale_log);
        re.add(m * cos(t.arg));
        im.add(m * sin(t.arg));
    }

    // Ordered merge: callers reduce per-chunk accumulators in chunk order so
    // results do not depend on how chunks were scheduled.
    void merge(const rescaled_accumulator& o)
    {
        using std::exp;
        terms += o.terms;
        if (!(o.scale_log > neg_infinity<R>()))
            return;
        if (o.scale_log > scale_log) {
            if (scale_log > neg_infinity<R>()) {
                R f = exp(scale_log - o.scale_log);
                re.scale(f);
                im.scale(f);
            }
            scale_log = o.scale_log;
        }
        R f = exp(o.scale_log - scale_log);
        re.add(o.re.sum * f);
        re.add(o.re.comp * f);
        im.add(o.im.sum * f);
        im.add(o.im.comp * f);
    }

    log_complex<R> value() const
    {
        using std::atan2;
        using std::hypot;
        using std::log;
        if (!(scale_log > neg_infinity<R>()))
            return log_complex<R>::zero();
        R x = re.value();
        R y = im.value();
        R m = hypot(x, y);
        if (m == R(0))
            return log_complex<R>::zero();
        return log_complex<R>(scale_log + log(m), atan2(y, x));
    }
};

}  // namespace bergman::num
