#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hht/convolution.hpp"
#include "hht/grid.hpp"
#include "hht/mellin.hpp"
#include "hht/quadrature.hpp"
#include "hht/random.hpp"
#include "hht/special.hpp"

using namespace hht;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("direct oracle against closed forms")
{
    // Indicator: antiderivative 1/s.
    const complexd s0(0.25, 3.0);
    CHECK(std::abs(mellin_direct_oracle(FunctionSpec::indicator01(), s0) -
                   1.0 / s0) < 1e-10);

    // e^{-t}: Gamma, via the independently implemented routine and the
    // textbook value of Gamma(1/2).
    CHECK(std::abs(mellin_direct_oracle(FunctionSpec::exp_decay(),
                                        {0.5, 0.0}) -
                   std::sqrt(kPi)) < 1e-10);
    CHECK(std::abs(mellin_direct_oracle(FunctionSpec::exp_decay(),
                                        {0.25, 0.0}) -
                   gamma_complex({0.25, 0.0})) < 1e-10);

    // 1/(1+t): pi/sin(pi s); at s = 1/4 this is pi sqrt(2).
    CHECK(std::abs(mellin_direct_oracle(FunctionSpec::rational1p(),
                                        {0.25, 0.0}) -
                   kPi * std::sqrt(2.0)) < 1e-9);

    // log-Gaussian closed form.
    const FunctionSpec lg = FunctionSpec::log_gaussian(0.3, 1.2);
    for (const complexd s : {complexd(0.2, 0.0), complexd(0.1, -4.0)})
        CHECK(std::abs(mellin_direct_oracle(lg, s) -
                       *mellin_closed_form(lg, s)) < 1e-9);
}

TEST_CASE("direct oracle rejects non-convergent integrands")
{
    CHECK_THROWS_AS((void)mellin_direct_oracle(FunctionSpec::rational1p(),
                                               {1.2, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS((void)mellin_direct_oracle(FunctionSpec::exp_decay(),
                                               {-0.1, 0.0}),
                    std::domain_error);
}

TEST_CASE("fft path on the default grid")
{
    const LogGrid g = default_grid();
    const MellinLine line{0.25};

    // Discontinuous input: the jump at a node costs O(du) in the plain
    // trapezoid weights, and truncating (0, e^{-40}) costs ~2e-4; the
    // transform is still a faithful 1/s to those limits.
    const MellinData ind =
        mellin_forward(sample(FunctionSpec::indicator01(), g), line);
    CHECK(std::abs(ind.values[g.size() / 2] - 4.0) < 2e-2);

    // Smooth but not decayed at t -> 0: left-end truncation ~e^{-10}/|s|.
    const MellinData ed =
        mellin_forward(sample(FunctionSpec::exp_decay(), g), line);
    CHECK(std::abs(ed.values[g.size() / 2] - gamma_complex({0.25, 0.0})) <
          5e-4);

    const MellinData rat =
        mellin_forward(sample(FunctionSpec::rational1p(), g), line);
    CHECK(std::abs(rat.values[g.size() / 2] - kPi * std::sqrt(2.0)) < 5e-4);
}

TEST_CASE("fft path matches the oracle where the weighted tails vanish")
{
    const MellinLine line{0.25};
    const std::vector<std::pair<FunctionSpec, LogGrid>> cases = {
        {FunctionSpec::power_exp(1.0), default_grid()},
        {FunctionSpec::log_gaussian(0.0, 1.0), default_grid()},
        {FunctionSpec::bump(1.0, 2.0), make_log_grid(32768, -40.0, 40.0)},
    };
    Rng rng(11);
    for (const auto& [spec, grid] : cases) {
        const MellinData m = mellin_forward(sample(spec, grid), line);
        for (int i = 0; i < 32; ++i) {
            // random nodes in the central half of the tau band
            const std::size_t j =
                grid.size() / 4 +
                static_cast<std::size_t>(rng.uniform() *
                                         static_cast<double>(grid.size() / 2));
            CHECK(std::abs(m.values[j] - mellin_direct_oracle(spec, m.s(j))) <
                  1e-7);
        }
    }
}

TEST_CASE("inverse transform undoes the forward transform")
{
    const LogGrid g = default_grid();
    const MellinLine line{0.25};

    MellinData zero = mellin_forward(sample(FunctionSpec::zero(), g), line);
    const SampledFunction z = mellin_inverse(zero);
    for (const auto& v : z.values)
        CHECK(std::abs(v) == 0.0);

    const SampledFunction f = sample(FunctionSpec::bump(1.0, 2.0), g);
    const SampledFunction back = mellin_inverse(mellin_forward(f, line));
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        worst = std::max(worst, std::abs(back.values[k] - f.values[k]));
    CHECK(worst < 1e-10 * weighted_norm(f, line.alpha));

    const SampledFunction ed = sample(FunctionSpec::exp_decay(), g);
    const SampledFunction ed2 = mellin_inverse(mellin_forward(ed, line));
    CHECK(std::abs(eval_at(ed2, 1.0) - std::exp(-1.0)) < 1e-8);
}

TEST_CASE("parseval equality is exact for the discrete pair")
{
    const LogGrid g = default_grid();
    for (double alpha : {0.1, 0.25, 0.4}) {
        for (const auto& spec :
             {FunctionSpec::bump(1.0, 2.0), FunctionSpec::exp_decay()}) {
            const SampledFunction f = sample(spec, g);
            const double wn = weighted_norm(f, alpha);
            const double pn =
                parseval_norm(mellin_forward(f, MellinLine{alpha}));
            CHECK(std::abs(pn - wn) <= 1e-7 * wn);
        }
    }
    MellinData m =
        mellin_forward(sample(FunctionSpec::zero(), g), MellinLine{0.25});
    CHECK(parseval_norm(m) == 0.0);
}

TEST_CASE("hermitian symmetry for real input")
{
    const LogGrid g = default_grid();
    const MellinData m =
        mellin_forward(sample(FunctionSpec::exp_decay(), g), MellinLine{0.3});
    const std::size_t n = m.size();
    for (std::size_t j : {1ul, 5ul, 100ul, 2000ul}) {
        const complexd mirrored = m.values[n - j];
        CHECK(std::abs(std::conj(mirrored) - m.values[j]) <
              1e-13 * std::abs(m.values[j]) + 1e-15);
    }
}

TEST_CASE("generalized pairing identity at sample points")
{
    // int f1(x/t) f2(t) dt/t equals the reconstructed product of the two
    // transforms, pointwise in x.
    // fine spacing so the bump factor is spectrally converged
    const LogGrid g = make_log_grid(32768, -40.0, 40.0);
    const MellinLine line{0.25};
    const FunctionSpec f1 = FunctionSpec::bump(1.0, 2.0);
    const FunctionSpec f2 = FunctionSpec::power_exp(1.0);
    const MellinData m1 = mellin_forward(sample(f1, g), line);
    const MellinData m2 = mellin_forward(sample(f2, g), line);

    for (double x : {0.5, 1.0, 2.0}) {
        const auto direct = integrate(
            [&](double w) {
                const double t = std::exp(w);
                return f1(x / t) * f2(t);
            },
            std::log(x / 2.0), std::log(x), QuadOptions{}); // t in [x/2, x]
        complexd spectral = 0.0;
        for (std::size_t j = 0; j < m1.size(); ++j)
            spectral += m1.values[j] * m2.values[j] *
                        std::exp(-m1.s(j) * std::log(x));
        spectral *= m1.dtau() / (2.0 * kPi);
        CHECK(std::abs(spectral - direct.value) <
              1e-6 * std::abs(direct.value));
    }
}

TEST_CASE("raised cosine taper damps ringing of transformed jumps")
{
    // The discrete pair reproduces samples exactly, so Gibbs bursts show
    // up only once a multiplier reshuffles the spectrum. Transform the
    // indicator with and without the taper and compare against the closed
    // form (1/pi) log|(1-x)/x| past the jump.
    const LogGrid g = default_grid();
    const MellinLine line{0.25};
    const SampledFunction ind = sample(FunctionSpec::indicator01(), g);

    MellinData plain = mellin_forward(ind, line);
    MellinData soft = plain;
    apply_raised_cosine_taper(soft, 0.5);
    apply_multiplier(plain, [](complexd s) { return cot_pi(s); });
    apply_multiplier(soft, [](complexd s) { return cot_pi(s); });
    const SampledFunction hp = mellin_inverse(plain);
    const SampledFunction hs = mellin_inverse(soft);

    double err_plain = 0.0, err_soft = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double x = g.t(k);
        if (x < 1.05 || x > 2.0)
            continue;
        const double want = std::log((x - 1.0) / x) / std::numbers::pi;
        err_plain = std::max(err_plain, std::abs(hp.values[k] - want));
        err_soft = std::max(err_soft, std::abs(hs.values[k] - want));
    }
    CHECK(err_soft < err_plain);
}

TEST_CASE("taper rejects bad fractions")
{
    MellinData m = mellin_forward(
        sample(FunctionSpec::exp_decay(), default_grid()), MellinLine{0.25});
    CHECK_THROWS_AS(apply_raised_cosine_taper(m, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_raised_cosine_taper(m, 1.5), std::invalid_argument);
}

TEST_CASE("tau tail decay probe")
{
    const LogGrid g = default_grid();
    CHECK(mellin_tail_decayed(
        mellin_forward(sample(FunctionSpec::exp_decay(), g), MellinLine{0.25})));
    CHECK(!mellin_tail_decayed(
        mellin_forward(sample(FunctionSpec::indicator01(), g), MellinLine{0.25})));
}
