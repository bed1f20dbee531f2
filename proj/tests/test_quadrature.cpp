#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hht/quadrature.hpp"

using namespace hht;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("adaptive rule on smooth integrands")
{
    const auto r = integrate([](double x) { return std::sin(x); }, kPi,
                             2.0 * kPi);
    CHECK(r.value.real() == doctest::Approx(-2.0).epsilon(1e-13));

    const auto g = integrate(
        [](double x) { return std::exp(-x * x); }, -12.0, 12.0);
    CHECK(g.value.real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
}

TEST_CASE("endpoint algebraic singularity")
{
    // int_0^1 t^{-3/4} dt = 4, integrable but steep at 0.
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    const auto r =
        integrate([](double t) { return std::pow(t, -0.75); }, 0.0, 1.0, opt);
    CHECK(std::abs(r.value.real() - 4.0) < 1e-8);
}

TEST_CASE("oscillatory complex integrand")
{
    // int_0^1 e^{i w t} dt = (e^{iw} - 1)/(i w)
    const double w = 120.0;
    const auto r = integrate(
        [&](double t) {
            return std::exp(std::complex<double>(0.0, w * t));
        },
        0.0, 1.0);
    const std::complex<double> want =
        (std::exp(std::complex<double>(0.0, w)) - 1.0) /
        std::complex<double>(0.0, w);
    CHECK(std::abs(r.value - want) < 1e-11);
}

TEST_CASE("segmented integration respects breakpoints")
{
    const auto r = integrate_segmented(
        [](double x) { return std::abs(x); }, {-1.0, 0.0, 2.0});
    CHECK(r.value.real() == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("extrapolation to zero")
{
    // Quadratic data reproduced exactly by a second-order tableau.
    std::vector<double> xs = {1e-1, 1e-2, 1e-3};
    std::vector<std::complex<double>> ys;
    for (double x : xs)
        ys.emplace_back(3.5 - 2.0 * x + 7.0 * x * x, 0.0);
    CHECK(std::abs(extrapolate_to_zero(xs, ys, 2) - 3.5) < 1e-12);
    CHECK_THROWS_AS((void)extrapolate_to_zero({}, {}, 2),
                    std::invalid_argument);
}
