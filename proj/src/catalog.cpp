#include "hht/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hht {

namespace {
constexpr double kUnbounded = 1e9;
}

struct FunctionSpec::UserData {
    std::vector<double> t;
    std::vector<double> logt;
    std::vector<std::complex<double>> v;
};

FunctionSpec FunctionSpec::bump(double a, double b)
{
    if (!(0.0 < a && a < b))
        throw std::invalid_argument("bump: requires 0 < a < b");
    return FunctionSpec(Kind::Bump, a, b);
}

FunctionSpec FunctionSpec::exp_decay() { return {Kind::ExpDecay, 0, 0}; }

FunctionSpec FunctionSpec::rational1p() { return {Kind::Rational1p, 0, 0}; }

FunctionSpec FunctionSpec::power_exp(double a)
{
    return FunctionSpec(Kind::PowerExp, a, 0);
}

FunctionSpec FunctionSpec::indicator01() { return {Kind::Indicator01, 0, 0}; }

FunctionSpec FunctionSpec::log_gaussian(double mu, double sigma)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("log_gaussian: requires sigma > 0");
    return FunctionSpec(Kind::LogGaussian, mu, sigma);
}

FunctionSpec
FunctionSpec::combo(std::vector<std::pair<double, FunctionSpec>> terms)
{
    FunctionSpec s(Kind::LinearCombo, 0, 0);
    s.terms_ = std::make_shared<
        const std::vector<std::pair<double, FunctionSpec>>>(std::move(terms));
    return s;
}

FunctionSpec FunctionSpec::zero() { return combo({}); }

FunctionSpec
FunctionSpec::user_samples(std::vector<double> t,
                           std::vector<std::complex<double>> v)
{
    if (t.size() != v.size() || t.size() < 4)
        throw std::invalid_argument("user_samples: need >= 4 matched samples");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0))
            throw std::invalid_argument("user_samples: t must be positive");
        if (i > 0 && !(t[i] > t[i - 1]))
            throw std::invalid_argument(
                "user_samples: t must be strictly increasing");
    }
    auto data = std::make_shared<UserData>();
    data->t = std::move(t);
    data->v = std::move(v);
    data->logt.resize(data->t.size());
    std::transform(data->t.begin(), data->t.end(), data->logt.begin(),
                   [](double x) { return std::log(x); });
    FunctionSpec s(Kind::UserSamples, 0, 0);
    s.user_ = std::move(data);
    return s;
}

const std::vector<std::pair<double, FunctionSpec>>& FunctionSpec::terms() const
{
    static const std::vector<std::pair<double, FunctionSpec>> empty;
    return terms_ ? *terms_ : empty;
}

namespace {

double bump_value(double a, double b, double t)
{
    if (t <= a || t >= b)
        return 0.0;
    const double p = (t - a) * (b - t);
    const double c = 0.25 * (b - a) * (b - a);
    return std::exp(1.0 - c / p);
}

double bump_derivative(double a, double b, double t)
{
    if (t <= a || t >= b)
        return 0.0;
    const double p = (t - a) * (b - t);
    const double c = 0.25 * (b - a) * (b - a);
    const double f = std::exp(1.0 - c / p);
    return f * c * (a + b - 2.0 * t) / (p * p);
}

// Value and derivative of the local cubic through the four nearest
// samples, in w = log t.
std::complex<double> user_eval(const FunctionSpec::UserData& d, double t,
                               bool want_derivative);

} // namespace

std::complex<double> FunctionSpec::operator()(double t) const
{
    if (!(t > 0.0))
        throw std::domain_error("FunctionSpec: argument must be positive");
    switch (kind_) {
    case Kind::Bump:
        return bump_value(a_, b_, t);
    case Kind::ExpDecay:
        return std::exp(-t);
    case Kind::Rational1p:
        return 1.0 / (1.0 + t);
    case Kind::PowerExp:
        return std::pow(t, a_) * std::exp(-t);
    case Kind::Indicator01:
        return t < 1.0 ? 1.0 : 0.0;
    case Kind::LogGaussian: {
        const double z = (std::log(t) - a_) / b_;
        return std::exp(-0.5 * z * z);
    }
    case Kind::LinearCombo: {
        std::complex<double> acc = 0.0;
        for (const auto& [w, spec] : terms())
            acc += w * spec(t);
        return acc;
    }
    case Kind::UserSamples:
        return user_eval(*user_, t, false);
    }
    return 0.0;
}

std::complex<double> FunctionSpec::derivative(double t) const
{
    if (!(t > 0.0))
        throw std::domain_error("FunctionSpec: argument must be positive");
    switch (kind_) {
    case Kind::Bump:
        return bump_derivative(a_, b_, t);
    case Kind::ExpDecay:
        return -std::exp(-t);
    case Kind::Rational1p:
        return -1.0 / ((1.0 + t) * (1.0 + t));
    case Kind::PowerExp:
        return (a_ / t - 1.0) * std::pow(t, a_) * std::exp(-t);
    case Kind::Indicator01:
        return 0.0;
    case Kind::LogGaussian: {
        const double z = (std::log(t) - a_) / b_;
        return std::exp(-0.5 * z * z) * (-z / (b_ * t));
    }
    case Kind::LinearCombo: {
        std::complex<double> acc = 0.0;
        for (const auto& [w, spec] : terms())
            acc += w * spec.derivative(t);
        return acc;
    }
    case Kind::UserSamples:
        return user_eval(*user_, t, true);
    }
    return 0.0;
}

std::string FunctionSpec::name() const
{
    char buf[96];
    switch (kind_) {
    case Kind::Bump:
        std::snprintf(buf, sizeof buf, "bump(%g,%g)", a_, b_);
        return buf;
    case Kind::ExpDecay:
        return "expdecay";
    case Kind::Rational1p:
        return "rational1p";
    case Kind::PowerExp:
        std::snprintf(buf, sizeof buf, "powerexp(%g)", a_);
        return buf;
    case Kind::Indicator01:
        return "indicator01";
    case Kind::LogGaussian:
        std::snprintf(buf, sizeof buf, "loggauss(%g,%g)", a_, b_);
        return buf;
    case Kind::LinearCombo:
        return terms().empty() ? "zero" : "combo";
    case Kind::UserSamples:
        return "samples";
    }
    return "?";
}

double FunctionSpec::mellin_power_low() const
{
    switch (kind_) {
    case Kind::Bump:
    case Kind::LogGaussian:
    case Kind::UserSamples:
        return -kUnbounded;
    case Kind::ExpDecay:
    case Kind::Rational1p:
    case Kind::Indicator01:
        return 0.0;
    case Kind::PowerExp:
        return -a_;
    case Kind::LinearCombo: {
        double lo = -kUnbounded;
        for (const auto& [w, spec] : terms())
            lo = std::max(lo, spec.mellin_power_low());
        return lo;
    }
    }
    return 0.0;
}

double FunctionSpec::mellin_power_high() const
{
    switch (kind_) {
    case Kind::Rational1p:
        return 1.0;
    case Kind::LinearCombo: {
        double hi = kUnbounded;
        for (const auto& [w, spec] : terms())
            hi = std::min(hi, spec.mellin_power_high());
        return hi;
    }
    default:
        return kUnbounded;
    }
}

std::pair<double, double> FunctionSpec::log_range(double c) const
{
    switch (kind_) {
    case Kind::Bump:
        return {std::log(a_), std::log(b_)};
    case Kind::ExpDecay: {
        if (!(c > 0.0))
            throw std::domain_error("log_range: weight must be positive at 0");
        return {-42.0 / c, std::max(4.0, std::log(45.0 + 2.0 * c) + 1.0)};
    }
    case Kind::Rational1p: {
        if (!(c > 0.0))
            throw std::domain_error("log_range: weight must be positive at 0");
        // Upper bound only meaningful inside the strip Re s < 1; callers
        // probing at or above the edge clamp to their own domain.
        const double hi = c < 1.0 - 1e-9 ? 42.0 / (1.0 - c) : kUnbounded;
        return {-42.0 / c, hi};
    }
    case Kind::PowerExp: {
        const double ce = c + a_;
        if (!(ce > 0.0))
            throw std::domain_error("log_range: weight too small at 0");
        return {-42.0 / ce, std::max(4.0, std::log(45.0 + 2.0 * ce) + 1.0)};
    }
    case Kind::Indicator01: {
        if (!(c > 0.0))
            throw std::domain_error("log_range: weight must be positive at 0");
        return {-42.0 / c, 0.0};
    }
    case Kind::LogGaussian: {
        const double center = a_ + c * b_ * b_;
        const double half = 9.2 * b_;
        return {center - half - 1.0, center + half + 1.0};
    }
    case Kind::LinearCombo: {
        if (terms().empty())
            return {0.0, 0.0};
        double lo = 1e300, hi = -1e300;
        for (const auto& [w, spec] : terms()) {
            const auto [l, h] = spec.log_range(c);
            lo = std::min(lo, l);
            hi = std::max(hi, h);
        }
        return {lo, hi};
    }
    case Kind::UserSamples:
        return {user_->logt.front(), user_->logt.back()};
    }
    return {0.0, 0.0};
}

bool FunctionSpec::smooth() const
{
    switch (kind_) {
    case Kind::Indicator01:
    case Kind::UserSamples:
        return false;
    case Kind::LinearCombo:
        for (const auto& [w, spec] : terms())
            if (!spec.smooth())
                return false;
        return true;
    default:
        return true;
    }
}

namespace {

std::complex<double> user_eval(const FunctionSpec::UserData& d, double t,
                               bool want_derivative)
{
    if (t < d.t.front() || t > d.t.back())
        return 0.0;
    const double w = std::log(t);
    auto it = std::upper_bound(d.logt.begin(), d.logt.end(), w);
    std::size_t k = static_cast<std::size_t>(it - d.logt.begin());
    k = k == 0 ? 0 : k - 1;
    std::size_t lo = k >= 1 ? k - 1 : 0;
    lo = std::min(lo, d.t.size() - 4);

    std::complex<double> acc = 0.0;
    for (std::size_t i = lo; i < lo + 4; ++i) {
        double num = 1.0, den = 1.0, dsum = 0.0;
        for (std::size_t j = lo; j < lo + 4; ++j) {
            if (j == i)
                continue;
            den *= d.logt[i] - d.logt[j];
            num *= w - d.logt[j];
        }
        if (want_derivative) {
            for (std::size_t j = lo; j < lo + 4; ++j) {
                if (j == i)
                    continue;
                double part = 1.0;
                for (std::size_t m = lo; m < lo + 4; ++m)
                    if (m != i && m != j)
                        part *= w - d.logt[m];
                dsum += part;
            }
            acc += d.v[i] * (dsum / den);
        } else {
            acc += d.v[i] * (num / den);
        }
    }
    return want_derivative ? acc / t : acc;
}

} // namespace

} // namespace hht
