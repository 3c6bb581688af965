#include <bergman/numerics/compensated.hpp>
#include <bergman/numerics/log_complex.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace bergman::num;

using LC = log_complex<double>;
using C = complex_t<double>;

static C roundtrip(const C& z)
{
    return log_from_complex(z).to_complex();
}

TEST_CASE("log_complex round trip over the full exponent range")
{
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uangle(-3.141592653589793, 3.141592653589793);
    std::uniform_real_distribution<double> umag(-300.0, 300.0);
    for (int k = 0; k < 2000; ++k) {
        double m = std::pow(10.0, umag(rng));
        double a = uangle(rng);
        C z(m * std::cos(a), m * std::sin(a));
        C back = roundtrip(z);
        REQUIRE(abs(back - z) <= 1e-14 * abs(z));
    }
}

TEST_CASE("log_mul basics")
{
    // unit modulus rotation
    LC a(0.0, 0.0);
    LC b(0.0, 1.5707963267948966);
    LC ab = log_mul(a, b);
    REQUIRE(ab.log_mag == 0.0);
    REQUIRE(ab.arg == Catch::Approx(1.5707963267948966));

    // zero absorbs
    LC z = LC::zero();
    REQUIRE(log_mul(z, b).is_zero());
    REQUIRE(log_mul(b, z).is_zero());
    REQUIRE(log_mul(z, b).arg == 0.0);

    // (3+4i)(3-4i) = 25
    LC p = log_mul(log_from_complex(C(3, 4)), log_from_complex(C(3, -4)));
    C v = p.to_complex();
    REQUIRE(v.re == Catch::Approx(25.0).epsilon(1e-14));
    REQUIRE(std::abs(v.im) < 1e-13);
}

TEST_CASE("log_pow basics")
{
    // i^4 = 1
    LC i4 = log_pow(log_from_complex(C(0, 1)), 4);
    REQUIRE(i4.to_complex().re == Catch::Approx(1.0).epsilon(1e-15));
    REQUIRE(std::abs(i4.arg) < 1e-15);

    // 2^100 in exact log arithmetic
    LC big = log_pow(log_from_complex(C(2, 0)), 100);
    REQUIRE(big.log_mag == Catch::Approx(100.0 * std::log(2.0)).epsilon(1e-15));
    REQUIRE(big.arg == 0.0);

    // 0^3 = 0, 0^-1 is a domain error
    REQUIRE(log_pow(LC::zero(), 3).is_zero());
    REQUIRE_THROWS_AS(log_pow(LC::zero(), -1), std::domain_error);
    REQUIRE_FALSE(log_pow(LC::zero(), 0).is_zero());
}

TEST_CASE("argument stays in (-pi, pi] and wraps accurately")
{
    const double pi = pi_value<double>();
    LC t(0.0, pi);
    REQUIRE(log_pow(t, 2).arg == Catch::Approx(0.0).margin(1e-12));
    // p*arg with p ~ 1e3 keeps phase error small
    double phase = 2.39996322972865332;  // some angle
    LC u(0.0, phase);
    LC up = log_pow(u, 1001);
    double expected = std::remainder(1001.0 * phase, 2 * pi);
    REQUIRE(std::abs(std::remainder(up.arg - expected, 2 * pi)) < 1e-9);
    for (double x : {1e3, -1e3, 12345.678, -98765.4321}) {
        double w = wrap_angle(x);
        REQUIRE(w > -pi);
        REQUIRE(w <= pi);
        REQUIRE(std::abs(std::remainder(w - x, 2 * pi)) < 1e-10);
    }
}

TEST_CASE("log_mul associativity over wide magnitude spread")
{
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> umag(-500.0, 500.0);
    std::uniform_real_distribution<double> uangle(-3.14159, 3.14159);
    for (int k = 0; k < 3000; ++k) {
        LC a(umag(rng), uangle(rng));
        LC b(umag(rng), uangle(rng));
        LC c(umag(rng), uangle(rng));
        LC left = log_mul(log_mul(a, b), c);
        LC right = log_mul(a, log_mul(b, c));
        REQUIRE(std::abs(left.log_mag - right.log_mag) <=
                1e-13 * (1.0 + std::abs(left.log_mag)));
        REQUIRE(std::abs(std::remainder(left.arg - right.arg, 2 * pi_value<double>())) < 1e-12);
    }
}

TEST_CASE("compensated sum: alternating harmonic series")
{
    compensated_sum<double> acc;
    for (long k = 1; k <= 1000000; ++k) {
        double term = (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
        acc.add(term);
    }
    // ln 2 minus the exact tail of the alternating series
    long N = 1000000;
    double tail = 0.0;
    // tail = sum_{k>N} (-1)^{k+1}/k, bracketed by consecutive partial fractions
    // use 60 extra terms of the continued expansion for a reference
    for (long k = N + 60; k > N; --k) {
        double term = (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
        tail += term;
    }
    double expected = std::log(2.0) - tail;
    REQUIRE(acc.value() == Catch::Approx(expected).margin(1e-12));
}

TEST_CASE("compensated sum is near-exact on integer-valued vectors")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> ui(-1000000, 1000000);
    const int n = 100000;
    compensated_sum<double> acc;
    long long exact = 0;
    for (int k = 0; k < n; ++k) {
        long v = ui(rng);
        exact += v;
        acc.add(static_cast<double>(v));
    }
    double err = std::abs(acc.value() - static_cast<double>(exact));
    double ulp = std::ldexp(1.0, -52) * 1e6;
    REQUIRE(err <= 4.0 * n * ulp);
}

TEST_CASE("rescaled accumulator matches direct summation and survives huge scales")
{
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    rescaled_accumulator<double> acc;
    C direct{};
    for (int k = 0; k < 500; ++k) {
        C t(u(rng), u(rng));
        acc.add(log_from_complex(t));
        direct = direct + t;
    }
    C got = acc.value().to_complex();
    REQUIRE(abs(got - direct) < 1e-12);

    // terms spanning hundreds of orders of magnitude: only the largest counts
    rescaled_accumulator<double> wide;
    wide.add(LC(-900.0, 0.3));
    wide.add(LC(500.0, 1.0));
    wide.add(LC(-200.0, -2.0));
    LC v = wide.value();
    REQUIRE(v.log_mag == Catch::Approx(500.0).epsilon(1e-12));
    REQUIRE(v.arg == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("relative deviation in the log domain")
{
    LC a(1000.0, 1.0);
    LC b(1000.0, 1.0 + 1e-8);
    REQUIRE(relative_deviation(a, b) == Catch::Approx(1e-8).epsilon(1e-3));
    REQUIRE(relative_deviation(a, a) == 0.0);
    REQUIRE(relative_deviation(LC::zero(), LC::zero()) == 0.0);
}
