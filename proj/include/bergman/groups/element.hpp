#pragma once

// Exact group elements: small square matrices over an exact ring, tagged with
// the symmetry group they belong to. Everything here is integer arithmetic;
// discreteness of a user-supplied generator set is the user's business.

#include <bergman/groups/ring.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bergman::grp {

enum class group_kind {
    special_linear,  // SL2 over Z or Z[sqrt(d)] acting on H^m
    symplectic,      // Sp_{2n}(Z) acting on the Siegel space H_n
    unitary,         // SU(n,1) over Z[i] acting on the ball B_n
    lattice,         // Z + Z*tau acting on the Fock plane by translation
};

inline constexpr int max_matrix_dim = 4;

struct exact_matrix {
    int dim = 2;
    std::array<exact_scalar, max_matrix_dim * max_matrix_dim> e{};

    exact_scalar& at(int i, int j) { return e[static_cast<std::size_t>(i * dim + j)]; }
    const exact_scalar& at(int i, int j) const
    {
        return e[static_cast<std::size_t>(i * dim + j)];
    }

    friend bool operator==(const exact_matrix& x, const exact_matrix& y)
    {
        if (x.dim != y.dim)
            return false;
        for (int k = 0; k < x.dim * x.dim; ++k)
            if (x.e[static_cast<std::size_t>(k)] != y.e[static_cast<std::size_t>(k)])
                return false;
        return true;
    }
};

inline exact_matrix identity_matrix(int dim)
{
    exact_matrix m;
    m.dim = dim;
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = exact_scalar{1, 0};
    return m;
}

inline exact_matrix mat_mul(const ring_desc& r, const exact_matrix& x, const exact_matrix& y)
{
    if (x.dim != y.dim)
        throw std::invalid_argument("matrix dimension mismatch");
    exact_matrix out;
    out.dim = x.dim;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) {
            exact_scalar s{};
            for (int k = 0; k < x.dim; ++k)
                s = add(s, mul(r, x.at(i, k), y.at(k, j)));
            out.at(i, j) = s;
        }
    return out;
}

inline exact_matrix mat_neg(const exact_matrix& x)
{
    exact_matrix out = x;
    for (int k = 0; k < x.dim * x.dim; ++k)
        out.e[static_cast<std::size_t>(k)] = neg(out.e[static_cast<std::size_t>(k)]);
    return out;
}

inline exact_matrix mat_transpose(const exact_matrix& x)
{
    exact_matrix out;
    out.dim = x.dim;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j)
            out.at(i, j) = x.at(j, i);
    return out;
}

inline exact_matrix mat_conj_transpose(const exact_matrix& x)
{
    exact_matrix out = mat_transpose(x);
    for (int k = 0; k < x.dim * x.dim; ++k)
        out.e[static_cast<std::size_t>(k)] = conj(out.e[static_cast<std::size_t>(k)]);
    return out;
}

inline exact_scalar mat_det(const ring_desc& r, const exact_matrix& x)
{
    const auto& m = x;
    if (x.dim == 1)
        return m.at(0, 0);
    if (x.dim == 2)
        return sub(mul(r, m.at(0, 0), m.at(1, 1)), mul(r, m.at(0, 1), m.at(1, 0)));
    // cofactor expansion along the first row
    exact_scalar s{};
    for (int j = 0; j < x.dim; ++j) {
        exact_matrix minor;
        minor.dim = x.dim - 1;
        for (int i = 1; i < x.dim; ++i) {
            int jj = 0;
            for (int k = 0; k < x.dim; ++k) {
                if (k == j)
                    continue;
                minor.at(i - 1, jj++) = x.at(i, k);
            }
        }
        exact_scalar t = mul(r, m.at(0, j), mat_det(r, minor));
        s = (j % 2 == 0) ? add(s, t) : sub(s, t);
    }
    return s;
}

inline exact_scalar mat_trace(const exact_matrix& x)
{
    exact_scalar s{};
    for (int i = 0; i < x.dim; ++i)
        s = add(s, x.at(i, i));
    return s;
}

struct group_element {
    group_kind kind = group_kind::special_linear;
    ring_desc ring;
    exact_matrix m;

    friend bool operator==(const group_element& x, const group_element& y)
    {
        return x.kind == y.kind && x.ring == y.ring && x.m == y.m;
    }

    bool is_identity() const { return m == identity_matrix(m.dim); }
};

inline group_element g_mul(const group_element& x, const group_element& y)
{
    group_element out = x;
    out.m = mat_mul(x.ring, x.m, y.m);
    return out;
}

// Inverses use the defining relations of each group, so they stay exact.
inline group_element g_inverse(const group_element& g)
{
    group_element out = g;
    const ring_desc& r = g.ring;
    switch (g.kind) {
        case group_kind::special_linear: {
            out.m.at(0, 0) = g.m.at(1, 1);
            out.m.at(1, 1) = g.m.at(0, 0);
            out.m.at(0, 1) = neg(g.m.at(0, 1));
            out.m.at(1, 0) = neg(g.m.at(1, 0));
            return out;
        }
        case group_kind::symplectic: {
            // g^{-1} = -J0 g^T J0 with J0 = [[0, I], [-I, 0]]
            int n = g.m.dim / 2;
            exact_matrix j0;
            j0.dim = g.m.dim;
            for (int i = 0; i < n; ++i) {
                j0.at(i, n + i) = exact_scalar{1, 0};
                j0.at(n + i, i) = exact_scalar{-1, 0};
            }
            out.m = mat_neg(mat_mul(r, j0, mat_mul(r, mat_transpose(g.m), j0)));
            return out;
        }
        case group_kind::unitary: {
            // g^H J g = J with J = diag(1, ..., 1, -1) gives g^{-1} = J g^H J
            exact_matrix j = identity_matrix(g.m.dim);
            j.at(g.m.dim - 1, g.m.dim - 1) = exact_scalar{-1, 0};
            out.m = mat_mul(r, j, mat_mul(r, mat_conj_transpose(g.m), j));
            return out;
        }
        case group_kind::lattice: {
            out.m.at(0, 1) = neg(g.m.at(0, 1));
            return out;
        }
    }
    return out;
}

// Membership invariants, exact in the ring. Returns an empty string when the
// element satisfies its group's defining relations.
inline std::string invariant_violation(const group_element& g)
{
    const ring_desc& r = g.ring;
    const exact_scalar one{1, 0};
    switch (g.kind) {
        case group_kind::special_linear: {
            if (g.m.dim != 2)
                return "SL2 element must be 2x2";
            if (!(mat_det(r, g.m) == one))
                return "determinant is not 1";
            return {};
        }
        case group_kind::symplectic: {
            if (g.m.dim % 2 != 0)
                return "Sp element must have even dimension";
            int n = g.m.dim / 2;
            exact_matrix j0;
            j0.dim = g.m.dim;
            for (int i = 0; i < n; ++i) {
                j0.at(i, n + i) = exact_scalar{1, 0};
                j0.at(n + i, i) = exact_scalar{-1, 0};
            }
            exact_matrix lhs = mat_mul(r, mat_transpose(g.m), mat_mul(r, g.m, j0));
            // g^T J0 g = J0  <=>  A^T C, B^T D symmetric and A^T D - C^T B = I
            exact_matrix check = mat_mul(r, mat_transpose(g.m), mat_mul(r, j0, g.m));
            (void)lhs;
            if (!(check == j0))
                return "symplectic relation g^T J0 g = J0 fails";
            return {};
        }
        case group_kind::unitary: {
            exact_matrix j = identity_matrix(g.m.dim);
            j.at(g.m.dim - 1, g.m.dim - 1) = exact_scalar{-1, 0};
            exact_matrix check = mat_mul(r, mat_conj_transpose(g.m), mat_mul(r, j, g.m));
            if (!(check == j))
                return "unitary relation g^H J g = J fails";
            if (!(mat_det(r, g.m) == one))
                return "determinant is not 1";
            return {};
        }
        case group_kind::lattice: {
            if (g.m.dim != 2)
                return "lattice element must be 2x2";
            if (!(g.m.at(0, 0) == one && g.m.at(1, 1) == one && g.m.at(1, 0).is_zero()))
                return "lattice element must be upper unipotent";
            return {};
        }
    }
    return {};
}

enum class sl2_class { identity, elliptic, parabolic, hyperbolic };

// Trace classification for SL2 elements (first real embedding). +-identity
// is reported as identity since it acts trivially on the upper half plane.
inline sl2_class classify(const group_element& g)
{
    if (g.kind != group_kind::special_linear)
        throw std::domain_error("classify expects an SL2 element");
    if (g.m == identity_matrix(2) || g.m == mat_neg(identity_matrix(2)))
        return sl2_class::identity;
    exact_scalar t = mat_trace(g.m);
    double tr = static_cast<double>(t.a);
    if (g.ring.kind == ring_kind::real_quadratic)
        tr += static_cast<double>(t.b) * std::sqrt(static_cast<double>(g.ring.d));
    double a = std::abs(tr);
    if (a < 2.0 - 1e-12)
        return sl2_class::elliptic;
    if (a > 2.0 + 1e-12)
        return sl2_class::hyperbolic;
    return sl2_class::parabolic;
}

inline std::string to_string(const group_element& g)
{
    std::string s = "[";
    for (int i = 0; i < g.m.dim; ++i) {
        s += "[";
        for (int j = 0; j < g.m.dim; ++j) {
            s += to_string(g.ring, g.m.at(i, j));
            if (j + 1 < g.m.dim)
                s += ",";
        }
        s += "]";
        if (i + 1 < g.m.dim)
            s += ",";
    }
    return s + "]";
}

}  // namespace bergman::grp
