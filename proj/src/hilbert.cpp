#include "hht/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hht/quadrature.hpp"
#include "hht/special.hpp"

namespace hht {

namespace {

constexpr double kPi = std::numbers::pi;

void check_strip(complexd s)
{
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw std::domain_error("multiplier: Re s outside (0,1)");
}

void check_half_strip(double alpha)
{
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("hilbert: alpha outside (0,1/2)");
}

} // namespace

ComplexPoint::ComplexPoint(complexd zz) : z(zz)
{
    if (!(std::abs(z) > 0.0))
        throw std::domain_error("ComplexPoint: zero modulus");
    if (z.imag() == 0.0 && z.real() > 0.0)
        throw std::domain_error("ComplexPoint: on the positive real axis");
}

complexd cot_multiplier(complexd s)
{
    check_strip(s);
    return cot_pi(s);
}

complexd tan_multiplier(complexd s)
{
    check_strip(s);
    return tan_pi(s);
}

SampledFunction hilbert_forward(const SampledFunction& f, MellinLine line)
{
    check_half_strip(line.alpha);
    MellinData m = mellin_forward(f, line);
    apply_multiplier(m, [](complexd s) { return cot_pi(s); });
    return mellin_inverse(m);
}

namespace {

// Integration bounds in log t for quadratures of a catalog member: the
// lower end from the t-measure mass, the upper end from the slowest
// admissible tail weight.
std::pair<double, double> oracle_bounds(const FunctionSpec& spec)
{
    const double lo = spec.log_range(1.0).first;
    const double hi = spec.log_range(0.05).second;
    return {lo, hi};
}

} // namespace

PvOracleResult hilbert_pv_oracle_full(const FunctionSpec& spec, double x,
                                      const PVConfig& cfg)
{
    if (!(x > 0.0))
        throw std::domain_error("hilbert_pv_oracle: x must be positive");
    QuadOptions opt;
    opt.abs_tol = cfg.quad_tol;
    opt.rel_tol = 1e-13;

    const auto [ulo, uhi] = oracle_bounds(spec);
    const double um = std::log(0.5 * x);
    const double up = std::log(2.0 * x);

    const auto log_integrand = [&](double w) {
        const double t = std::exp(w);
        return spec(t) * t / (t - x);
    };

    complexd acc = 0.0;
    if (ulo < um)
        acc += integrate(log_integrand, ulo, um, opt).value;
    if (up < uhi)
        acc += integrate(log_integrand, up, uhi, opt).value;

    // Middle band [x/2, 2x]: subtract the value at the pole; the explicit
    // principal value of the subtracted term over the band is ln 2.
    const complexd fx = spec(x);
    const auto sub = [&](double t) {
        if (t == x)
            return spec.derivative(x);
        return (spec(t) - fx) / (t - x);
    };
    acc += integrate(sub, 0.5 * x, x, opt).value;
    acc += integrate(sub, x, 2.0 * x, opt).value;
    acc += fx * std::log(2.0);

    PvOracleResult out;
    out.value = acc / kPi;

    // Excision cross-check along the schedule.
    std::vector<double> eps(cfg.epsilons);
    std::sort(eps.begin(), eps.end(), std::greater<>());
    std::vector<complexd> vals;
    vals.reserve(eps.size());
    for (double e : eps) {
        complexd v = 0.0;
        const double a = std::log(x * (1.0 - e));
        const double b = std::log(x * (1.0 + e));
        if (ulo < um)
            v += integrate(log_integrand, ulo, um, opt).value;
        v += integrate(log_integrand, std::max(um, ulo), a, opt).value;
        v += integrate(log_integrand, b, up, opt).value;
        if (up < uhi)
            v += integrate(log_integrand, up, uhi, opt).value;
        vals.push_back(v / kPi);
    }
    out.excision_limit = extrapolate_to_zero(eps, vals, cfg.richardson_order);
    out.consistency = std::abs(out.value - out.excision_limit);
    return out;
}

complexd hilbert_pv_oracle(const FunctionSpec& spec, double x,
                           const PVConfig& cfg)
{
    return hilbert_pv_oracle_full(spec, x, cfg).value;
}

complexd excised_phi(complexd s, double eps)
{
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw std::domain_error("excised_phi: Re s outside (0,1)");
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("excised_phi: eps outside (0,1/2)");

    QuadOptions opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-13;
    const auto integrand = [&](double w) {
        return std::exp(s * w) / (1.0 - std::exp(w));
    };

    const double wl = 42.0 / s.real();
    const double wr = 42.0 / (1.0 - s.real());

    complexd acc = integrate(integrand, -wl, std::log1p(-eps), opt).value;
    acc += integrate(integrand, std::log1p(eps), wr, opt).value;

    // Analytic tails: 1/(1-e^w) expanded geometrically on both sides.
    for (int k = 0; k < 6; ++k)
        acc += std::exp(-(s + static_cast<double>(k)) * wl) /
               (s + static_cast<double>(k));
    for (int k = 1; k <= 6; ++k)
        acc -= std::exp((s - static_cast<double>(k)) * wr) /
               (static_cast<double>(k) - s);

    return acc / kPi;
}

complexd excised_phi_limit(complexd s, const PVConfig& cfg)
{
    std::vector<double> eps(cfg.epsilons);
    std::sort(eps.begin(), eps.end(), std::greater<>());
    std::vector<complexd> vals;
    vals.reserve(eps.size());
    for (double e : eps)
        vals.push_back(excised_phi(s, e));
    return extrapolate_to_zero(eps, vals, cfg.richardson_order);
}

SampledFunction hilbert_inverse(const SampledFunction& h, MellinLine line,
                                InverseRoute route)
{
    check_half_strip(line.alpha);
    if (route == InverseRoute::Multiplier) {
        MellinData m = mellin_forward(h, line);
        apply_multiplier(m, [](complexd s) { return tan_pi(s); });
        return mellin_inverse(m);
    }

    // Reciprocal formula. In log coordinates the kernel becomes the
    // Toeplitz weight 1/(1 + e^{(u-v)/2}); the integrand is smooth and
    // decayed at both ends, so the grid trapezoid sum is spectrally
    // accurate and avoids probing the interpolant between nodes.
    const SampledFunction hh = hilbert_forward(h, line);
    const LogGrid& g = h.grid;
    const std::size_t n = g.size();
    std::vector<double> weight(2 * n - 1);
    for (std::size_t d = 0; d < 2 * n - 1; ++d) {
        const double diff =
            (static_cast<double>(d) - static_cast<double>(n - 1)) * g.du();
        weight[d] = 1.0 / (1.0 + std::exp(0.5 * diff));
    }
    std::vector<complexd> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        complexd acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += h.values[j] * weight[k - j + n - 1];
        // Close the (0, t_0] tail with h frozen at the edge sample:
        // int_0^T dt/((sqrt x + sqrt t) sqrt t) = 2 log(1 + sqrt(T/x)).
        const complexd tail =
            h.values[0] * 2.0 * std::log1p(std::exp(0.5 * (g.u(0) - g.u(k))));
        values[k] = (acc * g.du() + tail) / kPi - hh.values[k];
    }
    return make_sampled(g, std::move(values));
}

complexd log_kernel_form(const SampledFunction& f, double x)
{
    const LogGrid& g = f.grid;
    const double step = 1e-4 * x;
    if (!(x - step > g.t(0) && x + step < g.t(g.size() - 1)))
        throw std::domain_error("log_kernel_form: x too close to grid ends");

    double ulo = g.u_min();
    double uhi = g.u_max() - g.du();
    if (f.tag) {
        const auto [a, b] = oracle_bounds(*f.tag);
        ulo = std::max(ulo, a);
        uhi = std::min(uhi, b);
    }

    QuadOptions opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-12;
    const auto potential = [&](double y) {
        const auto integrand = [&](double w) {
            const double t = std::exp(w);
            return std::log(std::abs(1.0 - y / t)) * eval_at(f, t) * t;
        };
        const double uy = std::log(y);
        complexd acc = 0.0;
        if (uy <= ulo || uy >= uhi) {
            acc = integrate(integrand, ulo, uhi, opt).value;
        } else {
            acc = integrate(integrand, ulo, uy, opt).value +
                  integrate(integrand, uy, uhi, opt).value;
        }
        return -acc / kPi;
    };

    return (potential(x + step) - potential(x - step)) / (2.0 * step);
}

complexd eval_complex(const SampledFunction& f, const ComplexPoint& z,
                      MellinLine line)
{
    check_half_strip(line.alpha);
    const MellinData m = mellin_forward(f, line);
    if (!mellin_tail_decayed(m))
        throw std::domain_error(
            "eval_complex: s F(s) has not decayed on the truncated line");

    const double sgn = z.theta() > 0.0 ? 1.0 : -1.0;
    const complexd logz = std::log(z.z);
    complexd acc = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        const complexd s = m.s(j);
        acc += (cot_pi(s) + complexd(0.0, sgn)) * m.values[j] *
               std::exp(-s * logz);
    }
    return acc * m.dtau() / (2.0 * kPi);
}

NormReport norm_report(const SampledFunction& f, double alpha)
{
    check_half_strip(alpha);
    NormReport rep;
    rep.alpha = alpha;
    rep.norm_f = weighted_norm(f, alpha);
    rep.norm_hf = weighted_norm(hilbert_forward(f, MellinLine{alpha}), alpha);
    const double c = 1.0 / std::tan(kPi * alpha);
    rep.lower_factor = std::min(1.0, c);
    rep.upper_factor = std::max(1.0, c);
    const double slack = 1e-7;
    rep.pass = rep.norm_hf >= rep.lower_factor * rep.norm_f * (1.0 - slack) &&
               rep.norm_hf <= rep.upper_factor * rep.norm_f * (1.0 + slack);
    return rep;
}

} // namespace hht
