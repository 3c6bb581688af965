#pragma once

// Seeded random sampling of domain points and word-ball elements, shared by
// the verification suites and the test code. All draws go through an
// explicitly seeded engine so runs reproduce.

#include <bergman/domains/point.hpp>
#include <bergman/groups/enumerate.hpp>

#include <random>
#include <vector>

namespace bergman::ver {

using rng_t = std::mt19937_64;

template <class R>
dom::domain_point<R> random_point(dom::domain_kind kind, int n, rng_t& rng)
{
    using num::complex_t;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    dom::domain_point<R> p;
    p.kind = kind;
    p.n = n;
    p.z.resize(static_cast<std::size_t>(dom::coordinate_count(kind, n)));
    switch (kind) {
        case dom::domain_kind::half_plane: {
            for (auto& c : p.z)
                c = complex_t<R>(R(2.0 * u(rng)), R(0.35 + 1.4 * (u(rng) + 1.0)));
            return p;
        }
        case dom::domain_kind::siegel: {
            // X symmetric with entries in [-1, 1]; Y = L L^T + eps for a
            // random lower-triangular L, guaranteeing positive definiteness
            std::vector<double> L(static_cast<std::size_t>(n * n), 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    L[static_cast<std::size_t>(i * n + j)] =
                        (i == j) ? 0.7 + 0.6 * (u(rng) + 1.0) : 0.4 * u(rng);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    double y = 0.0;
                    for (int k = 0; k < n; ++k)
                        y += L[static_cast<std::size_t>(i * n + k)] *
                             L[static_cast<std::size_t>(j * n + k)];
                    if (i == j)
                        y += 0.05;
                    p.z[static_cast<std::size_t>(dom::sym_index(n, i, j))] =
                        complex_t<R>(R(u(rng)), R(y));
                }
            return p;
        }
        case dom::domain_kind::ball: {
            // keep |z| <= 0.8 so random pairs stay well inside
            while (true) {
                double s = 0.0;
                std::vector<double> re(static_cast<std::size_t>(n)),
                    im(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) {
                    re[static_cast<std::size_t>(j)] = 0.6 * u(rng);
                    im[static_cast<std::size_t>(j)] = 0.6 * u(rng);
                    s += re[static_cast<std::size_t>(j)] * re[static_cast<std::size_t>(j)] +
                         im[static_cast<std::size_t>(j)] * im[static_cast<std::size_t>(j)];
                }
                if (s <= 0.64) {
                    for (int j = 0; j < n; ++j)
                        p.z[static_cast<std::size_t>(j)] =
                            complex_t<R>(R(re[static_cast<std::size_t>(j)]),
                                         R(im[static_cast<std::size_t>(j)]));
                    return p;
                }
            }
        }
        case dom::domain_kind::fock: {
            p.z[0] = complex_t<R>(R(1.5 * u(rng)), R(1.5 * u(rng)));
            return p;
        }
    }
    return p;
}

inline const grp::group_element& random_element(const grp::word_ball& ball, rng_t& rng)
{
    std::uniform_int_distribution<std::int64_t> pick(0, ball.count - 1);
    std::int64_t k = pick(rng);
    for (const auto& shell : ball.shells) {
        if (k < static_cast<std::int64_t>(shell.size()))
            return shell[static_cast<std::size_t>(k)];
        k -= static_cast<std::int64_t>(shell.size());
    }
    return ball.shells[0][0];
}

}  // namespace bergman::ver
