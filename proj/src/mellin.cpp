#include "hht/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hht/fft.hpp"
#include "hht/quadrature.hpp"

namespace hht {

namespace {
constexpr double kPi = std::numbers::pi;
}

double MellinData::dtau() const
{
    return 2.0 * kPi / (grid.u_max() - grid.u_min());
}

double MellinData::tau(std::size_t j) const
{
    const auto half = static_cast<std::ptrdiff_t>(grid.size() / 2);
    return static_cast<double>(static_cast<std::ptrdiff_t>(j) - half) * dtau();
}

MellinData mellin_forward(const SampledFunction& f, MellinLine line)
{
    if (!(line.alpha > 0.0 && line.alpha < 1.0))
        throw std::invalid_argument("mellin_forward: alpha outside (0,1)");
    require_weighted_decay(f, line.alpha, "mellin_forward");

    const LogGrid& g = f.grid;
    const std::size_t n = g.size();
    std::vector<complexd> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        const complexd gk = f.values[k] * std::exp(line.alpha * g.u(k));
        a[k] = (k % 2 == 0) ? gk : -gk;
    }
    fft(a, +1);

    MellinData m;
    m.line = line;
    m.grid = g;
    m.values.resize(n);
    // F_j = du * e^{i tau_j u_min} * sum_k (-1)^k g_k e^{2 pi i jk/n}.
    for (std::size_t j = 0; j < n; ++j) {
        const double tau = m.tau(j);
        const complexd phase(std::cos(tau * g.u_min()),
                             std::sin(tau * g.u_min()));
        m.values[j] = g.du() * phase * a[j];
    }
    return m;
}

SampledFunction mellin_inverse(const MellinData& m)
{
    const LogGrid& g = m.grid;
    const std::size_t n = g.size();
    if (m.values.size() != n)
        throw std::invalid_argument("mellin_inverse: grid mismatch");

    std::vector<complexd> b(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double tau = m.tau(j);
        const complexd phase(std::cos(tau * g.u_min()),
                             -std::sin(tau * g.u_min()));
        b[j] = m.values[j] * phase;
    }
    fft(b, -1);

    std::vector<complexd> values(n);
    const double scale = m.dtau() / (2.0 * kPi);
    for (std::size_t k = 0; k < n; ++k) {
        const complexd v = scale * b[k] * std::exp(-m.line.alpha * g.u(k));
        values[k] = (k % 2 == 0) ? v : -v;
    }
    return make_sampled(g, std::move(values));
}

double parseval_norm(const MellinData& m)
{
    double acc = 0.0;
    for (const auto& v : m.values)
        acc += std::norm(v);
    return std::sqrt(acc * m.dtau() / (2.0 * kPi));
}

complexd mellin_direct_oracle(const FunctionSpec& spec, complexd s)
{
    if (!(s.real() > spec.mellin_power_low() &&
          s.real() < spec.mellin_power_high()))
        throw std::domain_error(
            "mellin_direct_oracle: s outside the integrability strip of " +
            spec.name());
    const auto [u0, u1] = spec.log_range(s.real());
    if (u0 >= u1)
        return 0.0;
    QuadOptions opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-12;
    const auto res = integrate(
        [&](double u) {
            return spec(std::exp(u)) * std::exp(s * u);
        },
        u0, u1, opt);
    return res.value;
}

complexd mellin_eval_analytic(const MellinData& m, complexd z)
{
    if (!(std::abs(z) > 0.0) || (z.imag() == 0.0 && z.real() > 0.0))
        throw std::domain_error(
            "mellin_eval_analytic: z must lie off the positive real axis");
    double peak = 0.0;
    for (const auto& v : m.values)
        peak = std::max(peak, std::abs(v));
    const complexd logz = std::log(z);
    complexd acc = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (std::abs(m.values[j]) <= 1e-14 * peak)
            continue;
        acc += m.values[j] * std::exp(-m.s(j) * logz);
    }
    return acc * m.dtau() / (2.0 * kPi);
}

void apply_raised_cosine_taper(MellinData& m, double fraction)
{
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::invalid_argument("taper fraction outside (0,1)");
    const std::size_t n = m.size();
    const double tau_max = 0.5 * static_cast<double>(n) * m.dtau();
    const double edge = (1.0 - fraction) * tau_max;
    for (std::size_t j = 0; j < n; ++j) {
        const double a = std::abs(m.tau(j));
        if (a <= edge)
            continue;
        const double x = (a - edge) / (tau_max - edge);
        m.values[j] *= 0.5 * (1.0 + std::cos(kPi * std::min(1.0, x)));
    }
}

bool mellin_tail_decayed(const MellinData& m, double fraction)
{
    const std::size_t n = m.size();
    const std::size_t edge = n / 20;
    double peak = 0.0;
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::abs(m.s(j)) * std::abs(m.values[j]);
        peak = std::max(peak, w[j]);
    }
    if (peak == 0.0)
        return true;
    double tail = 0.0;
    for (std::size_t j = 0; j < edge; ++j)
        tail = std::max({tail, w[j], w[n - 1 - j]});
    return tail <= fraction * peak;
}

} // namespace hht
