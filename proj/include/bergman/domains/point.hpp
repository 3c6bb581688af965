#pragma once

// Points of the four model domains. Coordinates are a flat complex vector:
//   half_plane: n coordinates, each with positive imaginary part
//   siegel:     the upper triangle (row-major) of a symmetric n x n matrix Z
//               with Im Z positive definite
//   ball:       n coordinates with |z| < 1
//   fock:       one coordinate, unconstrained
//
// Validity is a predicate plus a human-readable violation, which the CLI
// surfaces verbatim on bad input.

#include <bergman/numerics/complex.hpp>

#include <string>
#include <vector>

namespace bergman::dom {

enum class domain_kind { half_plane, siegel, ball, fock };

inline const char* domain_name(domain_kind k)
{
    switch (k) {
        case domain_kind::half_plane: return "h";
        case domain_kind::siegel: return "siegel";
        case domain_kind::ball: return "ball";
        case domain_kind::fock: return "fock";
    }
    return "?";
}

inline int coordinate_count(domain_kind k, int n)
{
    switch (k) {
        case domain_kind::half_plane: return n;
        case domain_kind::siegel: return n * (n + 1) / 2;
        case domain_kind::ball: return n;
        case domain_kind::fock: return 1;
    }
    return 0;
}

template <class R>
struct domain_point {
    domain_kind kind = domain_kind::half_plane;
    int n = 1;
    std::vector<num::complex_t<R>> z;

    static domain_point make(domain_kind k, int n, std::vector<num::complex_t<R>> coords)
    {
        return domain_point{k, n, std::move(coords)};
    }
};

// upper-triangle index of the (i,j) entry, i <= j
inline int sym_index(int n, int i, int j)
{
    if (i > j)
        std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

template <class R>
num::complex_t<R> siegel_entry(const domain_point<R>& p, int i, int j)
{
    return p.z[static_cast<std::size_t>(sym_index(p.n, i, j))];
}

// minimum admissible weight for the Bergman kernel of each domain
inline int weight_floor(domain_kind k, int n)
{
    switch (k) {
        case domain_kind::half_plane: return 3;       // p > 2
        case domain_kind::siegel: return 2 * n + 1;   // p > 2n
        case domain_kind::ball: return 1;
        case domain_kind::fock: return 1;
    }
    return 1;
}

template <class R>
std::string point_violation(const domain_point<R>& p)
{
    using std::size_t;
    if (static_cast<int>(p.z.size()) != coordinate_count(p.kind, p.n))
        return "coordinate count does not match the domain";
    switch (p.kind) {
        case domain_kind::half_plane: {
            for (const auto& c : p.z)
                if (!(c.im > R(0)))
                    return "upper half plane violated: Im z must be positive";
            return {};
        }
        case domain_kind::siegel: {
            // leading principal minors of Im Z (n <= 3 shipped)
            if (p.n == 1) {
                if (!(p.z[0].im > R(0)))
                    return "Siegel domain violated: Im Z must be positive definite";
                return {};
            }
            if (p.n == 2) {
                R y11 = siegel_entry(p, 0, 0).im;
                R y12 = siegel_entry(p, 0, 1).im;
                R y22 = siegel_entry(p, 1, 1).im;
                if (!(y11 > R(0)) || !(y11 * y22 - y12 * y12 > R(0)))
                    return "Siegel domain violated: Im Z must be positive definite";
                return {};
            }
            return "Siegel domain supported for n <= 2";
        }
        case domain_kind::ball: {
            R s{0};
            for (const auto& c : p.z)
                s += num::norm_sq(c);
            if (!(s < R(1)))
                return "unit ball violated: |z| must be < 1";
            return {};
        }
        case domain_kind::fock: {
            for (const auto& c : p.z)
                if (!num::is_finite(c.re) || !num::is_finite(c.im))
                    return "Fock plane violated: coordinates must be finite";
            return {};
        }
    }
    return {};
}

template <class R>
bool point_valid(const domain_point<R>& p)
{
    return point_violation(p).empty();
}

}  // namespace bergman::dom
