#include "hht/convolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hht/fft.hpp"
#include "hht/quadrature.hpp"
#include "hht/special.hpp"

namespace hht {

namespace {

constexpr double kPi = std::numbers::pi;

void check_quarter_strip(double alpha)
{
    if (!(alpha > 0.0 && alpha < 0.25))
        throw std::invalid_argument("convolution: alpha outside (0,1/4)");
}

} // namespace

ConvolutionResult convolve(const SampledFunction& f, const SampledFunction& g,
                           MellinLine line)
{
    check_quarter_strip(line.alpha);
    if (!(f.grid == g.grid))
        throw std::invalid_argument("convolve: grid mismatch");

    const SampledFunction hf = hilbert_forward(f, line);
    const SampledFunction hg = hilbert_forward(g, line);
    const SampledFunction p = pointwise_product(hf, hg);

    MellinData mp = mellin_forward(p, MellinLine{2.0 * line.alpha});
    apply_multiplier(mp, [](complexd s) { return tan_pi(s); });

    ConvolutionResult out;
    out.values = mellin_inverse(mp);
    out.line_out = MellinLine{2.0 * line.alpha};
    out.route = ConvolutionRoute::MellinProduct;
    return out;
}

MellinData mellin_of_convolution(const MellinData& mf, const MellinData& mg)
{
    if (!(mf.grid == mg.grid) || mf.line.alpha != mg.line.alpha)
        throw std::invalid_argument("mellin_of_convolution: line mismatch");
    check_quarter_strip(mf.line.alpha);

    const std::size_t n = mf.size();
    std::vector<complexd> a(2 * n, complexd(0.0, 0.0));
    std::vector<complexd> b(2 * n, complexd(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = cot_pi(mf.s(j)) * mf.values[j];
        b[j] = cot_pi(mg.s(j)) * mg.values[j];
    }
    fft(a, +1);
    fft(b, +1);
    for (std::size_t j = 0; j < 2 * n; ++j)
        a[j] *= b[j];
    fft(a, -1);

    MellinData out;
    out.line = MellinLine{2.0 * mf.line.alpha};
    out.grid = mf.grid;
    out.values.resize(n);
    const double scale = mf.dtau() / (2.0 * kPi * 2.0 * static_cast<double>(n));
    // Linear-convolution index a+b lands on the output tau grid at j + n/2.
    for (std::size_t j = 0; j < n; ++j) {
        const complexd c = scale * a[j + n / 2];
        out.values[j] = tan_pi(out.s(j)) * c;
    }
    return out;
}

complexd convolve_real_oracle(const SampledFunction& f,
                              const SampledFunction& g, double x)
{
    if (!f.tag || !g.tag)
        throw std::invalid_argument(
            "convolve_real_oracle: needs closed-form tags on both inputs");
    const FunctionSpec& fs = *f.tag;
    const FunctionSpec& gs = *g.tag;
    if (!(x > 0.0))
        throw std::domain_error("convolve_real_oracle: x must be positive");

    const complexd hg = hilbert_pv_oracle(gs, x);
    const complexd fx = fs(x);
    const complexd gx = gs(x);
    const double sx = std::sqrt(x);

    const double ulo = std::min(fs.log_range(0.5).first, std::log(x) - 3.0);
    const double uhi = std::max(fs.log_range(0.05).second, std::log(x) + 3.0);

    const auto integrand = [&](double w) {
        const double t = std::exp(w);
        if (t == x)
            return fx * (sx * gs.derivative(x) - gx / (2.0 * sx)) / sx * t;
        const double st = std::sqrt(t);
        return fs(t) * (sx * gs(t) - st * gx) / ((t - x) * st) * t;
    };

    QuadOptions opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-12;
    const complexd q = integrate_segmented(
                           integrand, {ulo, std::log(x), uhi}, opt)
                           .value;
    return hg * fx - q / kPi;
}

namespace {

// ((x/t)^c - 1)/(t - x) times the log-coordinate Jacobian t collapses to
// the scale-invariant (y^c - 1)/(1 - y), y = x/t; analytic across the
// diagonal where its value is -c. At beta = 1/2 (c = 1) it degenerates to
// the constant -1, which is what makes moment cancellations exact in the
// discrete sum.
double power_kernel_y(double y, double c)
{
    if (std::abs(y - 1.0) < 1e-9)
        return -c * (1.0 + 0.5 * (c - 1.0) * (y - 1.0));
    return (std::pow(y, c) - 1.0) / (1.0 - y);
}

} // namespace

complexd convolve_power_at(const SampledFunction& f, double beta, double x)
{
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("convolve_power: beta outside (0,1)");
    if (!(x > 0.0))
        throw std::domain_error("convolve_power: x must be positive");
    const LogGrid& g = f.grid;
    const double c = 1.5 - beta;
    const double cotb = std::cos(kPi * beta) / std::sin(kPi * beta);

    complexd q = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        q += f.values[j] * power_kernel_y(x / g.t(j), c);
    q *= g.du();

    const complexd fx =
        (x >= g.t(0) && x <= g.t(g.size() - 1)) ? eval_at(f, x) : complexd(0.0);
    return std::pow(x, beta - 1.0) * (fx * cotb - q / kPi);
}

SampledFunction convolve_power(const SampledFunction& f, double beta)
{
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("convolve_power: beta outside (0,1)");
    const LogGrid& g = f.grid;
    const double c = 1.5 - beta;
    const double cotb = std::cos(kPi * beta) / std::sin(kPi * beta);
    const std::size_t n = g.size();

    // The kernel depends only on u - v: one Toeplitz row serves all nodes.
    std::vector<double> row(2 * n - 1);
    for (std::size_t d = 0; d < 2 * n - 1; ++d) {
        const double diff =
            (static_cast<double>(d) - static_cast<double>(n - 1)) * g.du();
        row[d] = power_kernel_y(std::exp(diff), c);
    }

    std::vector<complexd> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        complexd q = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            q += f.values[j] * row[k - j + n - 1];
        q *= g.du();
        values[k] = std::pow(g.t(k), beta - 1.0) *
                    (f.values[k] * cotb - q / kPi);
    }
    return make_sampled(g, std::move(values));
}

complexd eval_convolution_complex(const SampledFunction& f,
                                  const SampledFunction& g,
                                  const ComplexPoint& z, MellinLine line)
{
    check_quarter_strip(line.alpha);
    if (!(f.grid == g.grid))
        throw std::invalid_argument("eval_convolution_complex: grid mismatch");

    const MellinData mf = mellin_forward(f, line);
    const MellinData mg = mellin_forward(g, line);

    // Window where the spectrum sits above the FFT round-off floor. The
    // z^{-s-w} factor can amplify one tail by e^{pi tau}, so callers need
    // data whose spectrum outruns that growth well before this threshold
    // (superexponential decay, e.g. log-Gaussians with sigma >~ 1.5).
    const auto cutoff = [](const MellinData& m) {
        double peak = 0.0;
        for (const auto& v : m.values)
            peak = std::max(peak, std::abs(v));
        std::size_t lo = m.size() / 2, hi = m.size() / 2;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (std::abs(m.values[j]) > 1e-14 * peak) {
                lo = std::min(lo, j);
                hi = std::max(hi, j);
            }
        return std::pair<std::size_t, std::size_t>(lo, hi);
    };
    const auto [flo, fhi] = cutoff(mf);
    const auto [glo, ghi] = cutoff(mg);

    const complexd logz = std::log(z.z);
    const double w = mf.dtau() / (2.0 * kPi);
    complexd acc = 0.0;
    for (std::size_t j = flo; j <= fhi; ++j) {
        const complexd s = mf.s(j);
        const complexd outer = cot_pi(s) * mf.values[j] * std::exp(-s * logz);
        complexd inner = 0.0;
        for (std::size_t k = glo; k <= ghi; ++k) {
            const complexd sw = mg.s(k);
            inner += cot_pi(sw) * tan_pi(s + sw) * mg.values[k] *
                     std::exp(-sw * logz);
        }
        acc += outer * inner;
    }
    return acc * w * w;
}

std::optional<complexd> mellin_closed_form(const FunctionSpec& spec, complexd s)
{
    using Kind = FunctionSpec::Kind;
    switch (spec.kind()) {
    case Kind::ExpDecay:
        return gamma_complex(s);
    case Kind::Rational1p:
        return kPi / std::sin(kPi * s);
    case Kind::PowerExp:
        return gamma_complex(s + spec.param_a());
    case Kind::Indicator01:
        return 1.0 / s;
    case Kind::LogGaussian: {
        const double mu = spec.param_a();
        const double sigma = spec.param_b();
        return std::sqrt(2.0 * kPi) * sigma *
               std::exp(mu * s + 0.5 * sigma * sigma * s * s);
    }
    case Kind::LinearCombo: {
        complexd acc = 0.0;
        for (const auto& [wgt, sub] : spec.terms()) {
            const auto part = mellin_closed_form(sub, s);
            if (!part)
                return std::nullopt;
            acc += wgt * *part;
        }
        return acc;
    }
    default:
        return std::nullopt;
    }
}

complexd convolve_brute_oracle(const FunctionSpec& f, const FunctionSpec& g,
                               double alpha, double x)
{
    check_quarter_strip(alpha);
    if (!(x > 0.0))
        throw std::domain_error("convolve_brute_oracle: x must be positive");

    // The cot factors confine the integrand's analyticity to a strip of
    // width alpha in each variable, so the trapezoid error decays like
    // e^{-2 pi alpha / spacing}: 512 nodes over |tau| <= 12 puts that
    // near 1e-6 even at alpha = 0.1.
    constexpr int kNodes = 512;
    constexpr double kTauMax = 12.0;
    const double d = 2.0 * kTauMax / (kNodes - 1);

    const auto factor = [&](const FunctionSpec& spec, complexd s) {
        const auto closed = mellin_closed_form(spec, s);
        return closed ? *closed : mellin_direct_oracle(spec, s);
    };

    std::vector<complexd> fv(kNodes), gv(kNodes);
    for (int i = 0; i < kNodes; ++i) {
        const complexd s(alpha, -kTauMax + i * d);
        fv[i] = cot_pi(s) * factor(f, s);
        gv[i] = cot_pi(s) * factor(g, s);
    }

    const double lx = std::log(x);
    complexd acc = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double wi = (i == 0 || i == kNodes - 1) ? 0.5 : 1.0;
        const double tau = -kTauMax + i * d;
        for (int j = 0; j < kNodes; ++j) {
            const double wj = (j == 0 || j == kNodes - 1) ? 0.5 : 1.0;
            const double theta = -kTauMax + j * d;
            const complexd ssum(2.0 * alpha, tau + theta);
            const complexd ph =
                std::exp(complexd(-2.0 * alpha * lx, -(tau + theta) * lx));
            acc += wi * wj * fv[i] * gv[j] * tan_pi(ssum) * ph;
        }
    }
    return acc * d * d / (4.0 * kPi * kPi);
}

} // namespace hht
