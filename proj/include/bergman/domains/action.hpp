#pragma once

// Embedded group elements and their action on the model domains, together
// with the automorphy cocycles:
//   half_plane: g.z = (az+b)/(cz+d) per factor,  j(g,z) = prod_j (c_j z_j + d_j)
//   siegel:     g.Z = (AZ+B)(CZ+D)^{-1},         J(g,Z) = det(CZ+D)
//   ball:       g.z = (Az+b)/(c.z+d),            Jb(g,z) = c.z + d
//   fock:       z -> z + lambda, multiplier chi_p(lambda) e^{pi p (z conj(lambda) + |lambda|^2/2)}
// Weight-p cocycles are returned in the log domain; for the matrix domains
// they are p-th powers of the base cocycle, for the Fock plane the weight
// sits inside the exponent.

#include <bergman/domains/point.hpp>
#include <bergman/groups/element.hpp>
#include <bergman/numerics/log_complex.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bergman::dom {

using grp::group_element;
using grp::group_kind;
using num::complex_t;
using num::log_complex;

// dense complex matrix of dimension <= 4, used for the Siegel action
template <class R>
struct cmat {
    int n = 0;
    std::array<complex_t<R>, 16> a{};

    complex_t<R>& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    const complex_t<R>& at(int i, int j) const
    {
        return a[static_cast<std::size_t>(i * n + j)];
    }
};

template <class R>
cmat<R> cmat_mul(const cmat<R>& x, const cmat<R>& y)
{
    cmat<R> out;
    out.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            complex_t<R> s{};
            for (int k = 0; k < x.n; ++k)
                s = s + x.at(i, k) * y.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

template <class R>
cmat<R> cmat_add(const cmat<R>& x, const cmat<R>& y)
{
    cmat<R> out = x;
    for (int k = 0; k < x.n * x.n; ++k)
        out.a[static_cast<std::size_t>(k)] =
            out.a[static_cast<std::size_t>(k)] + y.a[static_cast<std::size_t>(k)];
    return out;
}

// LU with partial pivoting; returns det and writes the inverse. Throws on a
// (numerically) singular input.
template <class R>
complex_t<R> cmat_invert(const cmat<R>& m, cmat<R>& inv)
{
    using std::abs;
    int n = m.n;
    cmat<R> w = m;
    inv.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = complex_t<R>(i == j ? R(1) : R(0), R(0));
    complex_t<R> det(R(1), R(0));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        R best = num::abs(w.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            R v = num::abs(w.at(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (!(best > R(0)))
            throw std::domain_error("singular matrix in domain action");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
            det = -det;
        }
        complex_t<R> d = w.at(col, col);
        det = det * d;
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = w.at(col, j) / d;
            inv.at(col, j) = inv.at(col, j) / d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col)
                continue;
            complex_t<R> f = w.at(i, col);
            if (f == complex_t<R>())
                continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return det;
}

// A group element embedded at the working precision: one complex matrix per
// archimedean factor (two for the real quadratic Hilbert case).
template <class R>
struct embedded_element {
    group_kind kind = group_kind::special_linear;
    int factors = 1;
    int dim = 2;
    std::vector<cmat<R>> m;
    // lattice: the translation and its chi sign data
    complex_t<R> lambda{};
    std::int64_t lat_a = 0, lat_b = 0;
};

template <class R>
embedded_element<R> embed(const group_element& g,
                          const complex_t<R>& tau = complex_t<R>(R(0), R(1)))
{
    embedded_element<R> out;
    out.kind = g.kind;
    out.dim = g.m.dim;
    out.factors = g.ring.embedding_count();
    out.m.resize(static_cast<std::size_t>(out.factors));
    for (int f = 0; f < out.factors; ++f) {
        cmat<R>& mf = out.m[static_cast<std::size_t>(f)];
        mf.n = g.m.dim;
        for (int i = 0; i < g.m.dim; ++i)
            for (int j = 0; j < g.m.dim; ++j)
                mf.at(i, j) = grp::embed_scalar<R>(g.ring, g.m.at(i, j), f, tau);
    }
    if (g.kind == group_kind::lattice) {
        out.lat_a = g.m.at(0, 1).a;
        out.lat_b = g.m.at(0, 1).b;
        out.lambda = grp::embed_scalar<R>(g.ring, g.m.at(0, 1), 0, tau);
    }
    return out;
}

namespace detail {

template <class R>
void siegel_blocks(const cmat<R>& g, int n, cmat<R>& A, cmat<R>& B, cmat<R>& C, cmat<R>& D)
{
    A.n = B.n = C.n = D.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A.at(i, j) = g.at(i, j);
            B.at(i, j) = g.at(i, j + n);
            C.at(i, j) = g.at(i + n, j);
            D.at(i, j) = g.at(i + n, j + n);
        }
}

template <class R>
cmat<R> siegel_point_matrix(const domain_point<R>& p)
{
    cmat<R> Z;
    Z.n = p.n;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            Z.at(i, j) = siegel_entry(p, i, j);
    return Z;
}

}  // namespace detail

template <class R>
domain_point<R> act(const embedded_element<R>& g, const domain_point<R>& z)
{
    switch (z.kind) {
        case domain_kind::half_plane: {
            if (g.kind != group_kind::special_linear || g.factors != z.n)
                throw std::domain_error("element does not act on this domain");
            domain_point<R> out = z;
            for (int f = 0; f < z.n; ++f) {
                const cmat<R>& m = g.m[static_cast<std::size_t>(f)];
                complex_t<R> den = m.at(1, 0) * z.z[static_cast<std::size_t>(f)] + m.at(1, 1);
                if (den == complex_t<R>())
                    throw std::domain_error("singular action: cz + d = 0");
                out.z[static_cast<std::size_t>(f)] =
                    (m.at(0, 0) * z.z[static_cast<std::size_t>(f)] + m.at(0, 1)) / den;
            }
            return out;
        }
        case domain_kind::siegel: {
            if (g.kind != group_kind::symplectic || g.dim != 2 * z.n)
                throw std::domain_error("element does not act on this domain");
            cmat<R> A, B, C, D;
            detail::siegel_blocks(g.m[0], z.n, A, B, C, D);
            cmat<R> Z = detail::siegel_point_matrix(z);
            cmat<R> den = cmat_add(cmat_mul(C, Z), D);
            cmat<R> inv;
            cmat_invert(den, inv);
            cmat<R> res = cmat_mul(cmat_add(cmat_mul(A, Z), B), inv);
            domain_point<R> out = z;
            // result is symmetric up to roundoff; store the symmetrized triangle
            for (int i = 0; i < z.n; ++i)
                for (int j = i; j < z.n; ++j)
                    out.z[static_cast<std::size_t>(sym_index(z.n, i, j))] =
                        (res.at(i, j) + res.at(j, i)) * (R(1) / R(2));
            return out;
        }
        case domain_kind::ball: {
            if (g.kind != group_kind::unitary || g.dim != z.n + 1)
                throw std::domain_error("element does not act on this domain");
            const cmat<R>& m = g.m[0];
            complex_t<R> den{};
            for (int j = 0; j < z.n; ++j)
                den = den + m.at(z.n, j) * z.z[static_cast<std::size_t>(j)];
            den = den + m.at(z.n, z.n);
            if (den == complex_t<R>())
                throw std::domain_error("singular action: c.z + d = 0");
            domain_point<R> out = z;
            for (int i = 0; i < z.n; ++i) {
                complex_t<R> num = m.at(i, z.n);
                for (int j = 0; j < z.n; ++j)
                    num = num + m.at(i, j) * z.z[static_cast<std::size_t>(j)];
                out.z[static_cast<std::size_t>(i)] = num / den;
            }
            return out;
        }
        case domain_kind::fock: {
            if (g.kind != group_kind::lattice)
                throw std::domain_error("element does not act on this domain");
            domain_point<R> out = z;
            out.z[0] = z.z[0] + g.lambda;
            return out;
        }
    }
    throw std::domain_error("unsupported domain");
}

// Weight-p automorphy factor at z, in the log domain.
template <class R>
log_complex<R> cocycle_log(const embedded_element<R>& g, const domain_point<R>& z, long p)
{
    using std::log;
    switch (z.kind) {
        case domain_kind::half_plane: {
            log_complex<R> j = log_complex<R>::one();
            for (int f = 0; f < z.n; ++f) {
                const cmat<R>& m = g.m[static_cast<std::size_t>(f)];
                complex_t<R> v = m.at(1, 0) * z.z[static_cast<std::size_t>(f)] + m.at(1, 1);
                if (v == complex_t<R>())
                    throw std::domain_error("singular action: cz + d = 0");
                j = log_mul(j, num::log_from_complex(v));
            }
            return log_pow(j, p);
        }
        case domain_kind::siegel: {
            cmat<R> A, B, C, D;
            detail::siegel_blocks(g.m[0], z.n, A, B, C, D);
            cmat<R> Z = detail::siegel_point_matrix(z);
            cmat<R> den = cmat_add(cmat_mul(C, Z), D);
            cmat<R> scratch;
            complex_t<R> det = cmat_invert(den, scratch);
            return log_pow(num::log_from_complex(det), p);
        }
        case domain_kind::ball: {
            const cmat<R>& m = g.m[0];
            complex_t<R> v{};
            for (int j = 0; j < z.n; ++j)
                v = v + m.at(z.n, j) * z.z[static_cast<std::size_t>(j)];
            v = v + m.at(z.n, z.n);
            if (v == complex_t<R>())
                throw std::domain_error("singular action: c.z + d = 0");
            return log_pow(num::log_from_complex(v), p);
        }
        case domain_kind::fock: {
            // chi_p(m + n tau) = (-1)^{p y m n} with y = Im tau, p y integral
            const R pi = num::pi_value<R>();
            complex_t<R> lam = g.lambda;
            complex_t<R> zl = z.z[0] * num::conj(lam);
            R expo = pi * R(p) * (zl.re + num::norm_sq(lam) / R(2));
            R phase = pi * R(p) * zl.im;
            // semicharacter sign: chi_p(a + b tau) = (-1)^{(p Im tau) a b},
            // defined only when p * Im(tau) is an integer
            if (g.lat_b != 0) {
                using std::floor;
                R ptau = R(p) * (lam.im / R(g.lat_b));
                R rounded = floor(ptau + R(1) / R(2));
                R gap = ptau - rounded;
                if (!(gap < R(1) / R(1000) && -gap < R(1) / R(1000)))
                    throw std::domain_error(
                        "lattice weight incompatible with tau: p * Im(tau) must be an integer");
                long py = static_cast<long>(static_cast<double>(rounded));
                if ((py * g.lat_a * g.lat_b) % 2 != 0)
                    phase += pi;
            }
            return log_complex<R>(expo, phase);
        }
    }
    throw std::domain_error("unsupported domain");
}

// Base (weight-1) cocycle for the matrix domains; Fock reports its weight-1
// multiplier. This is the object whose chain rule gets verified.
template <class R>
log_complex<R> cocycle_base(const embedded_element<R>& g, const domain_point<R>& z)
{
    return cocycle_log(g, z, 1);
}

}  // namespace bergman::dom
