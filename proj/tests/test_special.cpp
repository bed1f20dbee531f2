#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hht/special.hpp"

using namespace hht;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma function reference values")
{
    CHECK(std::abs(gamma_complex({0.5, 0.0}) - std::sqrt(kPi)) < 1e-13);
    CHECK(std::abs(gamma_complex({1.0, 0.0}) - 1.0) < 1e-13);
    CHECK(std::abs(gamma_complex({5.0, 0.0}) - 24.0) < 1e-11);
    // reflection path
    CHECK(std::abs(gamma_complex({-0.5, 0.0}) - (-2.0 * std::sqrt(kPi))) <
          1e-12);
    // |Gamma(1 + i)| = sqrt(pi / sinh(pi))
    const double want = std::sqrt(kPi / std::sinh(kPi));
    CHECK(std::abs(std::abs(gamma_complex({1.0, 1.0})) - want) < 1e-13);
}

TEST_CASE("cotangent multiplier values")
{
    CHECK(cot_pi({0.25, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cot_pi({0.125, 0.0}).real() ==
          doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(tan_pi({0.125, 0.0}).real() ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));

    // Saturation at -i far up the line, without overflow.
    const complexd far = cot_pi({0.25, 10.0});
    CHECK(std::abs(far - complexd(0.0, -1.0)) < 1e-15);
    const complexd very_far = cot_pi({0.3, 200.0});
    CHECK(std::abs(very_far - complexd(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(cot_pi({0.3, -200.0}) - complexd(0.0, 1.0)) < 1e-15);
}

TEST_CASE("tan and cot are reciprocal on the strip")
{
    for (const complexd s : {complexd(0.3, 2.0), complexd(0.1, -7.5),
                             complexd(0.45, 30.0), complexd(0.2, 0.0)}) {
        CHECK(std::abs(tan_pi(s) * cot_pi(s) - 1.0) < 1e-14);
    }
}

TEST_CASE("cotangent magnitude envelope on a vertical line")
{
    // min(1, cot(pi a)) <= |cot(pi(a + i tau))| <= max(1, cot(pi a)).
    for (double alpha : {0.1, 0.25, 0.4}) {
        const double c = 1.0 / std::tan(kPi * alpha);
        const double lo = std::min(1.0, c) * (1.0 - 1e-12);
        const double hi = std::max(1.0, c) * (1.0 + 1e-12);
        for (int i = 0; i < 1000; ++i) {
            const double tau = -50.0 + i * 0.1;
            const double mag = std::abs(cot_pi({alpha, tau}));
            CHECK(mag >= lo);
            CHECK(mag <= hi);
        }
    }
}

TEST_CASE("multiplier poles raise")
{
    CHECK_THROWS_AS((void)cot_pi({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)tan_pi({0.5, 0.0}), std::domain_error);
}
