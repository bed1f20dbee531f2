#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hht/grid.hpp"
#include "hht/random.hpp"
#include "hht/sie.hpp"

using namespace hht;
namespace {
constexpr double kPi = std::numbers::pi;
double beta_boundary() { return std::asin(1.0 / 3.0) / kPi; }
} // namespace

TEST_CASE("regime dispatch")
{
    CHECK(kernel_regime(0.25) == KernelRegime::Oscillatory);
    CHECK(kernel_regime(1.0 / 12.0) == KernelRegime::Hyperbolic);
    CHECK(kernel_regime(beta_boundary()) == KernelRegime::Boundary);
    CHECK(kernel_regime(beta_boundary() + 1e-4) ==
          KernelRegime::Oscillatory);
    CHECK_THROWS_AS((void)kernel_regime(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)kernel_regime(0.5), std::invalid_argument);
}

TEST_CASE("kernel values at the fixed point")
{
    // x = 1 limits of the three closed forms.
    {
        const KernelParams p = make_kernel_params(0.25);
        const double root = std::sqrt(9.0 * 0.5 - 1.0);
        const double want = p.L / (kPi * kPi * root); // tan(pi/4) = 1
        CHECK(kernel_value(p, 1.0) == doctest::Approx(want).epsilon(1e-13));
        CHECK(p.L ==
              doctest::Approx(std::log(3.0 * std::sin(kPi / 4.0) + root))
                  .epsilon(1e-14));
    }
    {
        const KernelParams p = make_kernel_params(beta_boundary());
        const double want = std::tan(kPi * p.beta) / (kPi * kPi);
        CHECK(kernel_value(p, 1.0) == doctest::Approx(want).epsilon(1e-10));
    }
    {
        const KernelParams p = make_kernel_params(1.0 / 12.0);
        const double want = std::tan(kPi / 12.0) * p.gamma /
                            (kPi * kPi * std::sin(p.gamma));
        CHECK(kernel_value(p, 1.0) == doctest::Approx(want).epsilon(1e-13));
        CHECK(std::cos(p.gamma) ==
              doctest::Approx(3.0 * std::sin(kPi / 12.0)).epsilon(1e-14));
    }
}

TEST_CASE("kernel matches its contour integral")
{
    for (double beta : {1.0 / 12.0, beta_boundary(), 0.25}) {
        const KernelParams p = make_kernel_params(beta);
        for (double x : {0.5, 1.0, 2.0, std::exp(1.0)}) {
            const complexd oracle = kernel_contour_oracle(beta, 0.2, x);
            CHECK(std::abs(kernel_value(p, x) - oracle.real()) < 1e-8);
            CHECK(std::abs(oracle.imag()) < 1e-10);
        }
    }
    // contour position inside the admissible strip is immaterial
    CHECK(std::abs(kernel_contour_oracle(0.25, 0.15, 2.0) -
                   kernel_contour_oracle(0.25, 0.2, 2.0)) < 1e-10);
    CHECK_THROWS_AS((void)kernel_contour_oracle(0.25, 0.05, 1.0),
                    std::invalid_argument);
}

TEST_CASE("kernel reflection law")
{
    Rng rng(23);
    for (double beta : {1.0 / 12.0, beta_boundary(), 0.25}) {
        const KernelParams p = make_kernel_params(beta);
        for (int i = 0; i < 100; ++i) {
            const double x =
                std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
            const double lhs = kernel_value(p, 1.0 / x);
            const double rhs = std::pow(x, beta + 0.5) * kernel_value(p, x);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("kernel continuous across the regime boundary")
{
    const double bstar = beta_boundary();
    const KernelParams center = make_kernel_params(bstar);
    for (double beta : {bstar - 1e-4, bstar + 1e-4}) {
        const KernelParams side = make_kernel_params(beta);
        for (double x : {0.5, 1.0, 2.0})
            CHECK(std::abs(kernel_value(side, x) -
                           kernel_value(center, x)) < 1e-3);
    }
}

TEST_CASE("multiplier pair inverts exactly")
{
    const SieMultipliers m = sie_multipliers({0.2, 3.0}, 0.25);
    CHECK(std::abs(m.forward * m.solve - 1.0) < 1e-14);

    // value at the real point, against the assembled trigonometric form
    const SieMultipliers real_pt = sie_multipliers({0.2, 0.0}, 0.25);
    const double S = std::sin(kPi * (0.4 - 0.25));
    const double mm = std::sin(kPi * 0.25);
    CHECK(real_pt.solve.real() ==
          doctest::Approx((S + mm) / (S + 3.0 * mm)).epsilon(1e-13));
    CHECK(real_pt.forward.real() ==
          doctest::Approx((1.0 / std::tan(kPi * 0.25)) * (S + 3.0 * mm) /
                          (S + mm))
              .epsilon(1e-13));

    // the solve denominator keeps a positive floor along admissible lines
    double floor = 1e300;
    for (double tau = -50.0; tau <= 50.0; tau += 0.25)
        floor = std::min(floor,
                         std::abs(sie_multipliers({0.1, tau}, 1.0 / 12.0).solve));
    CHECK(floor > 0.01);
}

TEST_CASE("forward operator routes agree")
{
    const double beta = 0.25;
    SieConfig cfg;
    cfg.alpha = 0.2;
    const LogGrid g = make_log_grid(16384, -40.0, 40.0);
    const FunctionSpec spec = FunctionSpec::bump(1.0, 2.0);
    const SampledFunction f = sample(spec, g);
    const SampledFunction h = sie_forward(f, beta, cfg);

    // weighted L2 over a node subsample, in the x^{1-beta}-scaled metric
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < g.size(); k += 32) {
        const double x = g.t(k);
        if (x < 0.05 || x > 50.0)
            continue;
        const complexd q = sie_forward_quadrature(spec, beta, x);
        const double w =
            std::exp(2.0 * cfg.alpha * g.u(k)) * std::pow(x, 2.0 - 2.0 * beta);
        num += std::norm(h.values[k] - q) * w;
        den += std::norm(q) * w;
    }
    CHECK(std::sqrt(num / den) < 1e-6);

    // zero input
    const SampledFunction z = sie_forward(sample(FunctionSpec::zero(), g),
                                          beta, cfg);
    for (const auto& v : z.values)
        CHECK(std::abs(v) == 0.0);

    // the literal integral needs decay at zero
    CHECK_THROWS_AS(
        (void)sie_forward_quadrature(FunctionSpec::exp_decay(), beta, 1.0),
        std::domain_error);
}

TEST_CASE("solve inverts forward across the three regimes")
{
    const SampledFunction f =
        sample(FunctionSpec::bump(1.0, 2.0), default_grid());
    for (double beta : {1.0 / 12.0, beta_boundary(), 0.25}) {
        SieConfig cfg;
        cfg.alpha = 0.5 * (0.5 * beta + 0.25);
        const SampledFunction h = sie_forward(f, beta, cfg);
        const SampledFunction back = sie_solve(h, beta, cfg);
        const SampledFunction diff = add(back, scale(f, -1.0));
        CHECK(weighted_norm(diff, cfg.alpha) <=
              1e-5 * weighted_norm(f, cfg.alpha));
    }
}

TEST_CASE("kernel route of the solver agrees with the multiplier route")
{
    const double beta = 0.25;
    SieConfig cfg;
    cfg.alpha = 0.2;
    const LogGrid g = make_log_grid(8192, -80.0, 40.0);
    const SampledFunction f = sample(FunctionSpec::exp_decay(), g);
    const SampledFunction h = sie_forward(f, beta, cfg);
    const SampledFunction fm = sie_solve(h, beta, cfg);
    const SampledFunction fk = sie_solve(h, beta, cfg, SolveRoute::Kernel);
    const SampledFunction diff = add(fk, scale(fm, -1.0));
    CHECK(weighted_norm(diff, cfg.alpha) <=
          1e-5 * weighted_norm(fm, cfg.alpha));
}

TEST_CASE("admissibility is enforced")
{
    const SampledFunction f =
        sample(FunctionSpec::bump(1.0, 2.0), default_grid());
    SieConfig bad;
    bad.alpha = 0.05; // below beta/2 for beta = 0.25
    CHECK_THROWS_AS((void)sie_forward(f, 0.25, bad), std::invalid_argument);
    bad.alpha = 0.3;
    CHECK_THROWS_AS((void)sie_solve(f, 0.25, bad), std::invalid_argument);
    SieConfig ok;
    ok.alpha = 0.2;
    CHECK_THROWS_AS((void)sie_forward(f, 0.6, ok), std::invalid_argument);
}
