#pragma once

// Exact scalars for group matrices: Z, real quadratic Z[sqrt(d)], Gaussian
// integers Z[i], and lattice coefficients in the basis (1, tau). All
// arithmetic is 64-bit integer exact with overflow checks; embeddings into a
// floating scalar R happen only at evaluation time.

#include <bergman/numerics/complex.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bergman::grp {

enum class ring_kind {
    integers,        // Z, coefficient b unused
    real_quadratic,  // Z[sqrt(d)], d > 0 squarefree; two real embeddings
    gauss,           // Z[i]
    lattice,         // a + b*tau, tau a domain parameter; additive use only
};

struct ring_desc {
    ring_kind kind = ring_kind::integers;
    std::int64_t d = 0;  // only meaningful for real_quadratic

    friend bool operator==(const ring_desc&, const ring_desc&) = default;

    std::int64_t omega_square() const
    {
        switch (kind) {
            case ring_kind::integers: return 0;
            case ring_kind::real_quadratic: return d;
            case ring_kind::gauss: return -1;
            case ring_kind::lattice: return 0;
        }
        return 0;
    }

    int embedding_count() const
    {
        return kind == ring_kind::real_quadratic ? 2 : 1;
    }

    bool embeddings_real() const
    {
        return kind == ring_kind::integers || kind == ring_kind::real_quadratic;
    }
};

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("exact scalar addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("exact scalar multiplication overflow");
    return r;
}

}  // namespace detail

// a + b*omega where omega is sqrt(d), i, or tau depending on the ring.
struct exact_scalar {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const exact_scalar&, const exact_scalar&) = default;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
};

inline exact_scalar add(const exact_scalar& x, const exact_scalar& y)
{
    return {detail::checked_add(x.a, y.a), detail::checked_add(x.b, y.b)};
}

inline exact_scalar sub(const exact_scalar& x, const exact_scalar& y)
{
    return {detail::checked_add(x.a, -y.a), detail::checked_add(x.b, -y.b)};
}

inline exact_scalar neg(const exact_scalar& x)
{
    return {-x.a, -x.b};
}

inline exact_scalar mul(const ring_desc& r, const exact_scalar& x, const exact_scalar& y)
{
    if (r.kind == ring_kind::lattice && x.b != 0 && y.b != 0)
        throw std::logic_error("lattice coefficients admit no internal multiplication");
    using detail::checked_add;
    using detail::checked_mul;
    std::int64_t w2 = r.omega_square();
    std::int64_t a = checked_add(checked_mul(x.a, y.a), checked_mul(w2, checked_mul(x.b, y.b)));
    std::int64_t b = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
    return {a, b};
}

// Ring conjugation: sqrt(d) -> -sqrt(d), i -> -i.
inline exact_scalar conj(const exact_scalar& x)
{
    return {x.a, -x.b};
}

// sign of the leading coefficient, used for projective normalization
inline int lex_sign(const exact_scalar& x)
{
    if (x.a != 0)
        return x.a > 0 ? 1 : -1;
    if (x.b != 0)
        return x.b > 0 ? 1 : -1;
    return 0;
}

inline std::string to_string(const ring_desc& r, const exact_scalar& x)
{
    switch (r.kind) {
        case ring_kind::integers: return std::to_string(x.a);
        case ring_kind::real_quadratic:
            return std::to_string(x.a) + (x.b >= 0 ? "+" : "") + std::to_string(x.b) +
                   "*sqrt(" + std::to_string(r.d) + ")";
        case ring_kind::gauss:
            return std::to_string(x.a) + (x.b >= 0 ? "+" : "") + std::to_string(x.b) + "i";
        case ring_kind::lattice:
            return std::to_string(x.a) + (x.b >= 0 ? "+" : "") + std::to_string(x.b) + "*tau";
    }
    return {};
}

// Embedding j of the scalar into complex numbers over R. Real quadratic
// rings have two real embeddings (j = 0, 1); for lattice scalars tau is
// supplied by the caller.
template <class R>
num::complex_t<R> embed_scalar(const ring_desc& r, const exact_scalar& x, int j,
                               const num::complex_t<R>& tau = num::complex_t<R>(R(0), R(1)))
{
    using num::complex_t;
    switch (r.kind) {
        case ring_kind::integers:
            return complex_t<R>(R(x.a), R(0));
        case ring_kind::real_quadratic: {
            using std::sqrt;
            R root = sqrt(R(r.d));
            R v = j == 0 ? R(x.a) + R(x.b) * root : R(x.a) - R(x.b) * root;
            return complex_t<R>(v, R(0));
        }
        case ring_kind::gauss:
            return complex_t<R>(R(x.a), R(x.b));
        case ring_kind::lattice:
            return complex_t<R>(R(x.a), R(0)) + R(x.b) * tau;
    }
    return complex_t<R>(R(0), R(0));
}

}  // namespace bergman::grp
