#include <bergman/domains/kernel.hpp>
#include <bergman/verify/random.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace bergman;
using dom::domain_kind;
using dom::domain_point;
using num::complex_t;
using C = complex_t<double>;
using P = domain_point<double>;

static P hp(double x, double y)
{
    return P{domain_kind::half_plane, 1, {C(x, y)}};
}

static grp::group_element sl2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    auto p = grp::preset_sl2z();
    grp::exact_matrix m;
    m.dim = 2;
    m.at(0, 0) = {a, 0};
    m.at(0, 1) = {b, 0};
    m.at(1, 0) = {c, 0};
    m.at(1, 1) = {d, 0};
    return p.element_from(m);
}

TEST_CASE("point validity predicates")
{
    REQUIRE(dom::point_valid(hp(0, 1)));
    REQUIRE_FALSE(dom::point_valid(hp(0, -1)));
    REQUIRE(dom::point_violation(hp(0, -1)).find("upper half plane") != std::string::npos);

    P ball{domain_kind::ball, 2, {C(0.5, 0), C(0.5, 0.5)}};
    REQUIRE(dom::point_valid(ball));
    P ballbad{domain_kind::ball, 2, {C(0.9, 0), C(0.5, 0.5)}};
    REQUIRE_FALSE(dom::point_valid(ballbad));
}

TEST_CASE("half-plane action examples")
{
    auto T = dom::embed<double>(sl2(1, 1, 0, 1));
    auto S = dom::embed<double>(sl2(0, -1, 1, 0));
    auto G = dom::embed<double>(sl2(2, 1, 1, 1));

    auto zi = hp(0, 1);
    auto t = dom::act(T, zi);
    REQUIRE(t.z[0].re == Catch::Approx(1.0));
    REQUIRE(t.z[0].im == Catch::Approx(1.0));

    auto s = dom::act(S, zi);
    REQUIRE(s.z[0].re == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(s.z[0].im == Catch::Approx(1.0));

    auto g = dom::act(G, zi);  // (2i+1)/(i+1) = (3+i)/2
    REQUIRE(g.z[0].re == Catch::Approx(1.5));
    REQUIRE(g.z[0].im == Catch::Approx(0.5));
}

TEST_CASE("cocycle examples")
{
    auto id = dom::embed<double>(grp::preset_sl2z().identity());
    auto T = dom::embed<double>(sl2(1, 1, 0, 1));
    auto G = dom::embed<double>(sl2(2, 1, 1, 1));
    auto zi = hp(0, 1);

    auto j_id = dom::cocycle_base(id, zi).to_complex();
    REQUIRE(j_id.re == Catch::Approx(1.0));
    REQUIRE(j_id.im == Catch::Approx(0.0).margin(1e-15));

    auto j_T = dom::cocycle_base(T, zi).to_complex();
    REQUIRE(j_T.re == Catch::Approx(1.0));

    auto j_G = dom::cocycle_base(G, zi).to_complex();  // i + 1
    REQUIRE(j_G.re == Catch::Approx(1.0));
    REQUIRE(j_G.im == Catch::Approx(1.0));
}

TEST_CASE("cocycle chain rule across all shipped groups")
{
    ver::rng_t rng(421);
    for (auto name : {"sl2z", "sl2zsqrt2", "sp4z", "picard", "fock_gauss"}) {
        auto p = grp::builtin_preset(name);
        auto ball = grp::enumerate_ball(p, {.depth = name == std::string("picard") ? 4 : 5});
        double worst = 0;
        for (int k = 0; k < 1000; ++k) {
            auto z = ver::random_point<double>(p.domain, p.domain_n, rng);
            auto ge = ver::random_element(ball, rng);
            auto he = ver::random_element(ball, rng);
            auto gE = dom::embed<double>(ge);
            auto hE = dom::embed<double>(he);
            auto ghE = dom::embed<double>(grp::g_mul(ge, he));
            auto lhs = dom::cocycle_base(ghE, z);
            auto rhs = num::log_mul(dom::cocycle_base(gE, dom::act(hE, z)),
                                    dom::cocycle_base(hE, z));
            worst = std::max(worst, num::relative_deviation(lhs, rhs));
        }
        INFO(name);
        REQUIRE(worst < 1e-11);
    }
}

TEST_CASE("kernel closed-form examples")
{
    // H, n=1, p=4, diagonal at i: (p-1)/(4 pi)
    auto ki = dom::bergman_kernel<double>(hp(0, 1), hp(0, 1), 4);
    REQUIRE(ki.value.to_complex().re == Catch::Approx(3.0 / (4.0 * M_PI)).epsilon(1e-13));
    REQUIRE(std::abs(ki.value.arg) < 1e-13);

    // H, p=4, z=2i, w=i: (3/(4 pi)) (2/3)^4
    auto kz = dom::bergman_kernel<double>(hp(0, 2), hp(0, 1), 4);
    REQUIRE(kz.value.to_complex().re ==
            Catch::Approx(3.0 / (4.0 * M_PI) * std::pow(2.0 / 3.0, 4)).epsilon(1e-13));

    // Ball, n=2, p=3 at the origin: 20 / pi^2
    P o{domain_kind::ball, 2, {C(0, 0), C(0, 0)}};
    auto kb = dom::bergman_kernel<double>(o, o, 3);
    REQUIRE(kb.value.to_complex().re == Catch::Approx(20.0 / (M_PI * M_PI)).epsilon(1e-13));

    // weight below the convergence threshold
    REQUIRE_THROWS_AS(dom::bergman_kernel<double>(hp(0, 1), hp(0, 1), 2), std::domain_error);

    // Siegel n=1 must agree with the half-plane kernel (H_1 = H)
    P s1{domain_kind::siegel, 1, {C(0.3, 1.2)}};
    P s2{domain_kind::siegel, 1, {C(-0.1, 0.7)}};
    auto ks = dom::bergman_kernel<double>(s1, s2, 5);
    auto kh = dom::bergman_kernel<double>(hp(0.3, 1.2), hp(-0.1, 0.7), 5);
    REQUIRE(num::relative_deviation(ks.value, kh.value) < 1e-12);
}

TEST_CASE("fock kernel basics and reproducing property")
{
    P z0{domain_kind::fock, 1, {C(0, 0)}};
    auto k = dom::fock_kernel<double>(z0, z0, 1);
    REQUIRE(k.value.to_complex().re == Catch::Approx(1.0));

    P z1{domain_kind::fock, 1, {C(0.4, -0.3)}};
    auto kd = dom::fock_kernel<double>(z1, z1, 5);
    REQUIRE(kd.value.arg == Catch::Approx(0.0).margin(1e-14));
    REQUIRE(kd.value.log_mag ==
            Catch::Approx(std::log(5.0) + M_PI * 5 * 0.25).epsilon(1e-12));

    // quadrature oracle: int K(0,w) K(w,0) dmu_p(w) = K(0,0) over |w| <= 4/sqrt(p)
    const long p = 4;
    const double lim = 4.0 / std::sqrt(double(p));
    auto f = [&](double x, double y) {
        P w{domain_kind::fock, 1, {C(x, y)}};
        auto a = dom::fock_kernel<double>(z0, w, p).value;
        auto b = dom::fock_kernel<double>(w, z0, p).value;
        double weight = std::exp(-M_PI * p * (x * x + y * y));
        return num::log_mul(a, b).to_complex() * weight;
    };
    auto r = num::integrate_graph<double>(
        f, -lim, lim, [&](double) { return -lim; }, [&](double) { return lim; }, 1e-10);
    REQUIRE(r.converged);
    double expect = dom::fock_kernel<double>(z0, z0, p).value.to_complex().re;
    REQUIRE(r.value.re == Catch::Approx(expect).epsilon(1e-8));
    REQUIRE(std::abs(r.value.im) < 1e-9);
}

TEST_CASE("kernel Hermitian symmetry and diagonal positivity")
{
    ver::rng_t rng(99);
    struct cfg {
        domain_kind kind;
        int n;
        long p;
    };
    for (auto c : {cfg{domain_kind::half_plane, 1, 5},
                   cfg{domain_kind::siegel, 2, 6},
                   cfg{domain_kind::ball, 2, 3},
                   cfg{domain_kind::fock, 1, 2}}) {
        double worst = 0;
        for (int k = 0; k < 1000; ++k) {
            auto z = ver::random_point<double>(c.kind, c.n, rng);
            auto w = ver::random_point<double>(c.kind, c.n, rng);
            auto kzw = dom::bergman_kernel<double>(z, w, c.p).value;
            auto kwz = dom::bergman_kernel<double>(w, z, c.p).value;
            worst = std::max(worst, num::relative_deviation(kzw, num::log_conj(kwz)));
            auto diag = dom::bergman_kernel<double>(z, z, c.p).value;
            REQUIRE(std::abs(diag.arg) < 1e-12);
        }
        REQUIRE(worst < 1e-13);
    }
}

TEST_CASE("kernel equivariance under the group action")
{
    ver::rng_t rng(7);
    struct cfg {
        const char* preset;
        long p;
        int depth;
    };
    for (auto c : {cfg{"sl2z", 6, 6}, cfg{"sl2zsqrt2", 6, 4}, cfg{"sp4z", 10, 4},
                   cfg{"picard", 2, 4}, cfg{"fock_gauss", 2, 6}}) {
        auto preset = grp::builtin_preset(c.preset);
        auto ball = grp::enumerate_ball(preset, {.depth = c.depth});
        double worst = 0;
        for (int k = 0; k < 200; ++k) {
            auto g = dom::embed<double>(ver::random_element(ball, rng));
            auto z = ver::random_point<double>(preset.domain, preset.domain_n, rng);
            auto w = ver::random_point<double>(preset.domain, preset.domain_n, rng);
            auto lhs = dom::bergman_kernel<double>(dom::act(g, z), dom::act(g, w), c.p).value;
            lhs = num::log_div(lhs, dom::cocycle_log(g, z, c.p));
            lhs = num::log_div(lhs, num::log_conj(dom::cocycle_log(g, w, c.p)));
            auto rhs = dom::bergman_kernel<double>(z, w, c.p).value;
            worst = std::max(worst, num::relative_deviation(lhs, rhs));
        }
        INFO(c.preset);
        REQUIRE(worst < 1e-10);
    }
}

TEST_CASE("hyperbolic distance")
{
    REQUIRE(dom::hyperbolic_distance(hp(0, 1), hp(0, 1)) == 0.0);
    REQUIRE(dom::hyperbolic_distance(hp(0, 1), hp(0, 2)) ==
            Catch::Approx(std::log(2.0)).epsilon(1e-13));

    // symmetry, positivity, triangle inequality spot checks
    ver::rng_t rng(31);
    for (int k = 0; k < 200; ++k) {
        auto a = ver::random_point<double>(domain_kind::half_plane, 1, rng);
        auto b = ver::random_point<double>(domain_kind::half_plane, 1, rng);
        auto c = ver::random_point<double>(domain_kind::half_plane, 1, rng);
        double ab = dom::hyperbolic_distance(a, b);
        REQUIRE(ab == Catch::Approx(dom::hyperbolic_distance(b, a)).margin(1e-13));
        REQUIRE(ab >= 0);
        REQUIRE(ab <= dom::hyperbolic_distance(a, c) + dom::hyperbolic_distance(c, b) + 1e-12);
    }
    for (int k = 0; k < 200; ++k) {
        auto a = ver::random_point<double>(domain_kind::ball, 2, rng);
        auto b = ver::random_point<double>(domain_kind::ball, 2, rng);
        auto c = ver::random_point<double>(domain_kind::ball, 2, rng);
        double ab = dom::hyperbolic_distance(a, b);
        REQUIRE(ab == Catch::Approx(dom::hyperbolic_distance(b, a)).margin(1e-13));
        REQUIRE(ab <= dom::hyperbolic_distance(a, c) + dom::hyperbolic_distance(c, b) + 1e-12);
    }

    // parabolic translate: d(z, z+1) decreases to 0 with height
    double prev = 1e9;
    for (double y : {1.0, 4.0, 16.0, 64.0, 256.0}) {
        double d = dom::hyperbolic_distance(hp(0, y), hp(1, y));
        REQUIRE(d < prev);
        prev = d;
    }
    REQUIRE(prev < 0.01);

    // ball/half-plane compatibility through a real slice: d(0, r e_1)
    P b0{domain_kind::ball, 1, {C(0, 0)}};
    P br{domain_kind::ball, 1, {C(0.5, 0)}};
    REQUIRE(dom::hyperbolic_distance(b0, br) ==
            Catch::Approx(2 * std::atanh(0.5)).epsilon(1e-13));

    P s{domain_kind::siegel, 2, {C(0, 1), C(0, 0), C(0, 1)}};
    REQUIRE_THROWS_AS(dom::hyperbolic_distance(s, s), std::domain_error);
}

TEST_CASE("off-diagonal decay rate grows with the weight")
{
    // normalized kernel magnitude along a horizontal ray from i
    auto rate_for = [](long p) {
        std::vector<double> ds, logs;
        for (double x = 0.5; x <= 3.0; x += 0.25) {
            auto z = hp(0, 1);
            auto w = hp(x, 1);
            double d = dom::hyperbolic_distance(z, w);
            auto k = dom::bergman_kernel<double>(z, w, p);
            double nl = k.value.log_mag +
                        double(p) / 2.0 *
                            (dom::log_h_sigma(z) + dom::log_h_sigma(w));
            ds.push_back(d);
            logs.push_back(-nl);
        }
        double n = double(ds.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            sx += ds[i];
            sy += logs[i];
            sxx += ds[i] * ds[i];
            sxy += ds[i] * logs[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    double r4 = rate_for(4), r16 = rate_for(16), r64 = rate_for(64);
    REQUIRE(r4 > 0);
    REQUIRE(r16 > r4);
    REQUIRE(r64 > r16);
    // at least sqrt(p) growth between the sampled weights
    REQUIRE(r16 >= 1.9 * r4);
    REQUIRE(r64 >= 1.9 * r16);
}
