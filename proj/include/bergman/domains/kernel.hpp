#pragma once

// Closed-form Bergman kernels of the four model domains, hyperbolic
// distances, and the sigma-trivialization metric factors. Kernel values are
// the coefficient in the sigma_z^p (x) conj(sigma_w)^p trivialization, kept
// in the log domain:
//   half_plane: ((p-1)/4pi)^n prod_j (2i/(z_j - conj w_j))^p,   p > 2
//   siegel:     a_{n,p} det(Z - conj W)^{-p},                   p > 2n
//   ball:       (n!/pi^n) C(n+p, n) (1 - <z,w>)^{-p},           p >= 1
//   fock:       p exp(pi p z conj(w)),                          p >= 1
// The Siegel constant a_{n,p} is pinned for n = 1 by matching the half-plane
// kernel (H_1 = H); for n >= 2 it is configurable and defaults to 1, so only
// constant-free identities are asserted there.

#include <bergman/domains/action.hpp>
#include <bergman/domains/point.hpp>
#include <bergman/numerics/log_complex.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>

namespace bergman::dom {

template <class R>
struct kernel_value {
    log_complex<R> value;
    long p = 0;
    domain_kind kind = domain_kind::half_plane;
};

template <class R>
struct kernel_options {
    std::optional<log_complex<R>> siegel_constant{};
};

namespace detail {

template <class R>
log_complex<R> siegel_constant(int n, long p, const kernel_options<R>& opt)
{
    using std::log;
    if (opt.siegel_constant)
        return *opt.siegel_constant;
    if (n == 1) {
        const R pi = num::pi_value<R>();
        R lm = log(R(p - 1) / (R(4) * pi)) + R(p) * log(R(2));
        return log_complex<R>(lm, R(p) * pi / R(2));
    }
    return log_complex<R>::one();
}

}  // namespace detail

template <class R>
R log_h_sigma(const domain_point<R>& z)
{
    using std::log;
    using std::log1p;
    switch (z.kind) {
        case domain_kind::half_plane: {
            R s{0};
            for (const auto& c : z.z)
                s += log(c.im);
            return s;
        }
        case domain_kind::siegel: {
            if (z.n == 1)
                return log(z.z[0].im);
            cmat<R> y;
            y.n = z.n;
            for (int i = 0; i < z.n; ++i)
                for (int j = 0; j < z.n; ++j)
                    y.at(i, j) = complex_t<R>(siegel_entry(z, i, j).im, R(0));
            cmat<R> scratch;
            complex_t<R> det = cmat_invert(y, scratch);
            return log(det.re);
        }
        case domain_kind::ball: {
            R s{0};
            for (const auto& c : z.z)
                s += num::norm_sq(c);
            return log1p(-s);
        }
        case domain_kind::fock:
            return -num::pi_value<R>() * num::norm_sq(z.z[0]);
    }
    throw std::domain_error("unsupported domain");
}

// Gauge-invariant log magnitude of a sigma^q-coefficient at z.
template <class R>
R normalized_log_magnitude(const R& log_mag, const domain_point<R>& z, long q)
{
    return log_mag + R(q) / R(2) * log_h_sigma(z);
}

template <class R>
kernel_value<R> fock_kernel(const domain_point<R>& z, const domain_point<R>& w, long p)
{
    using std::log;
    if (z.kind != domain_kind::fock || w.kind != domain_kind::fock)
        throw std::domain_error("fock_kernel expects Fock plane points");
    if (p < 1)
        throw std::domain_error("fock kernel needs weight p >= 1");
    const R pi = num::pi_value<R>();
    complex_t<R> zw = z.z[0] * num::conj(w.z[0]);
    return {log_complex<R>(log(R(p)) + pi * R(p) * zw.re, pi * R(p) * zw.im), p,
            domain_kind::fock};
}

template <class R>
kernel_value<R> bergman_kernel(const domain_point<R>& z, const domain_point<R>& w, long p,
                               const kernel_options<R>& opt = {})
{
    using std::log;
    if (z.kind != w.kind || z.n != w.n)
        throw std::domain_error("kernel arguments must share a domain");
    if (p < weight_floor(z.kind, z.n))
        throw std::domain_error("weight below the convergence threshold of this domain");
    const R pi = num::pi_value<R>();
    switch (z.kind) {
        case domain_kind::half_plane: {
            log_complex<R> acc(R(z.n) * log(R(p - 1) / (R(4) * pi)), R(0));
            const log_complex<R> two_i(log(R(2)), pi / R(2));
            for (int j = 0; j < z.n; ++j) {
                complex_t<R> den = z.z[static_cast<std::size_t>(j)] -
                                   num::conj(w.z[static_cast<std::size_t>(j)]);
                log_complex<R> core = log_div(two_i, num::log_from_complex(den));
                acc = log_mul(acc, log_pow(core, p));
            }
            return {acc, p, z.kind};
        }
        case domain_kind::siegel: {
            cmat<R> zm = detail::siegel_point_matrix(z);
            cmat<R> wm = detail::siegel_point_matrix(w);
            cmat<R> diff;
            diff.n = z.n;
            for (int i = 0; i < z.n; ++i)
                for (int j = 0; j < z.n; ++j)
                    diff.at(i, j) = zm.at(i, j) - num::conj(wm.at(i, j));
            cmat<R> scratch;
            complex_t<R> det = cmat_invert(diff, scratch);
            log_complex<R> core = log_pow(num::log_from_complex(det), -p);
            return {log_mul(detail::siegel_constant(z.n, p, opt), core), p, z.kind};
        }
        case domain_kind::ball: {
            // n!/pi^n * C(n+p, n) = pi^{-n} prod_{k=1..n} (p+k)
            R lc = -R(z.n) * log(pi);
            for (int k = 1; k <= z.n; ++k)
                lc += log(R(p + k));
            complex_t<R> s{};
            for (int j = 0; j < z.n; ++j)
                s = s + z.z[static_cast<std::size_t>(j)] *
                            num::conj(w.z[static_cast<std::size_t>(j)]);
            complex_t<R> den = complex_t<R>(R(1), R(0)) - s;
            log_complex<R> core = log_pow(num::log_from_complex(den), -p);
            return {log_mul(log_complex<R>(lc, R(0)), core), p, z.kind};
        }
        case domain_kind::fock:
            return fock_kernel(z, w, p);
    }
    throw std::domain_error("unsupported domain");
}

// Riemannian distance, normalized so that d(i, 2i) = log 2 on the half plane
// and the ball slice through real points is isometric to it. Near-diagonal
// evaluation uses cancellation-free forms.
template <class R>
R hyperbolic_distance(const domain_point<R>& z, const domain_point<R>& w)
{
    using std::asinh;
    using std::sqrt;
    if (z.kind != w.kind || z.n != w.n)
        throw std::domain_error("distance arguments must share a domain");
    switch (z.kind) {
        case domain_kind::half_plane: {
            // product metric: l2 combination of the factor distances
            R total{0};
            for (int j = 0; j < z.n; ++j) {
                const complex_t<R>& a = z.z[static_cast<std::size_t>(j)];
                const complex_t<R>& b = w.z[static_cast<std::size_t>(j)];
                R chord = num::abs(a - b);
                R dj = R(2) * asinh(chord / (R(2) * sqrt(a.im * b.im)));
                total += dj * dj;
            }
            return sqrt(total);
        }
        case domain_kind::ball: {
            // sinh^2(d/2) = (|z-w|^2 - (|z|^2|w|^2 - |<z,w>|^2)) / ((1-|z|^2)(1-|w|^2))
            R nz{0}, nw{0};
            complex_t<R> ip{};
            R chord2{0};
            for (int j = 0; j < z.n; ++j) {
                const complex_t<R>& a = z.z[static_cast<std::size_t>(j)];
                const complex_t<R>& b = w.z[static_cast<std::size_t>(j)];
                nz += num::norm_sq(a);
                nw += num::norm_sq(b);
                ip = ip + a * num::conj(b);
                chord2 += num::norm_sq(a - b);
            }
            R numer = chord2 - (nz * nw - num::norm_sq(ip));
            if (numer < R(0))
                numer = R(0);
            R denom = (R(1) - nz) * (R(1) - nw);
            return R(2) * asinh(sqrt(numer / denom));
        }
        case domain_kind::fock:
            return num::abs(z.z[0] - w.z[0]);
        case domain_kind::siegel:
            throw std::domain_error("hyperbolic distance not implemented for the Siegel domain");
    }
    throw std::domain_error("unsupported domain");
}

}  // namespace bergman::dom
