#pragma once

// Adaptive quadrature on intervals and on y-graph regions of the plane
// (x in [a,b], ylo(x) <= y <= yhi(x)). Nested dyadic refinement of Simpson
// panels with Richardson error estimation; integrals over cusp directions are
// expected to be pre-truncated by the caller at a height where the integrand
// tail is negligible.

#include <bergman/numerics/complex.hpp>

#include <cstdint>
#include <utility>

namespace bergman::num {

template <class R>
struct quad_result {
    complex_t<R> value{};
    R error_estimate{0};
    std::int64_t evaluations = 0;
    bool converged = true;

    quad_result& operator+=(const quad_result& o)
    {
        value = value + o.value;
        error_estimate += o.error_estimate;
        evaluations += o.evaluations;
        converged = converged && o.converged;
        return *this;
    }
};

namespace detail {

template <class R, class F>
void adapt_panel(F& f, const R& a, const R& b, const complex_t<R>& fa,
                 const complex_t<R>& fm, const complex_t<R>& fb,
                 const complex_t<R>& whole, const R& tol, int depth,
                 std::int64_t budget, quad_result<R>& out)
{
    R m = (a + b) / R(2);
    R lm = (a + m) / R(2);
    R rm = (m + b) / R(2);
    complex_t<R> flm = f(lm);
    complex_t<R> frm = f(rm);
    out.evaluations += 2;
    R h6 = (b - a) / R(12);
    complex_t<R> left = h6 * (fa + R(4) * flm + fm);
    complex_t<R> right = h6 * (fm + R(4) * frm + fb);
    complex_t<R> delta = (left + right) - whole;
    R err = abs(delta) / R(15);
    if (depth <= 0 || out.evaluations > budget || err <= tol) {
        out.value = out.value + left + right + delta / R(15);
        out.error_estimate += err;
        if (depth <= 0 || out.evaluations > budget)
            out.converged = out.converged && (err <= tol);
        return;
    }
    adapt_panel(f, a, m, fa, flm, fm, left, tol / R(2), depth - 1, budget, out);
    adapt_panel(f, m, b, fm, frm, fb, right, tol / R(2), depth - 1, budget, out);
}

}  // namespace detail

// f : R -> complex_t<R>. tol is an absolute tolerance on the result.
template <class R, class F>
quad_result<R> integrate_1d(F f, R a, R b, R tol, int max_depth = 42,
                            std::int64_t budget = 4000000)
{
    quad_result<R> out;
    if (a == b)
        return out;
    complex_t<R> fa = f(a);
    complex_t<R> fb = f(b);
    R m = (a + b) / R(2);
    complex_t<R> fm = f(m);
    out.evaluations = 3;
    complex_t<R> whole = ((b - a) / R(6)) * (fa + R(4) * fm + fb);
    detail::adapt_panel(f, a, b, fa, fm, fb, whole, tol, max_depth, budget, out);
    return out;
}

// Iterated integral over { (x,y) : a <= x <= b, ylo(x) <= y <= yhi(x) }.
template <class R, class F, class Lo, class Hi>
quad_result<R> integrate_graph(F f, R a, R b, Lo ylo, Hi yhi, R tol,
                               int max_depth = 30,
                               std::int64_t inner_budget = 200000)
{
    R width = b - a;
    R inner_tol = tol / (width * R(4));
    std::int64_t evals = 0;
    R inner_err = R(0);
    bool inner_ok = true;
    auto outer = [&](R x) {
        auto slice = [&](R y) { return f(x, y); };
        quad_result<R> inner =
            integrate_1d<R>(slice, ylo(x), yhi(x), inner_tol, max_depth, inner_budget);
        evals += inner.evaluations;
        if (inner.error_estimate > inner_err)
            inner_err = inner.error_estimate;
        inner_ok = inner_ok && inner.converged;
        return inner.value;
    };
    quad_result<R> out = integrate_1d<R>(outer, a, b, tol / R(2), max_depth);
    out.evaluations = evals;
    out.error_estimate += inner_err * width;
    out.converged = out.converged && inner_ok;
    return out;
}

}  // namespace bergman::num
