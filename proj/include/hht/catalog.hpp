#pragma once

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hht {

/// Closed-form test functions on (0, inf). Each member knows how to
/// evaluate itself and its derivative, and carries enough decay metadata
/// for oracle quadrature to pick truncation bounds.
class FunctionSpec {
public:
    enum class Kind {
        Bump,        // exp(1 - (b-a)^2 / (4 (t-a)(b-t))) on (a, b), else 0
        ExpDecay,    // e^{-t}
        Rational1p,  // 1/(1+t)
        PowerExp,    // t^a e^{-t}
        Indicator01, // characteristic function of (0, 1)
        LogGaussian, // exp(-(log t - mu)^2 / (2 sigma^2))
        LinearCombo, // weighted sum of specs
        UserSamples, // external data, interpolated in log t
    };

    static FunctionSpec bump(double a, double b);
    static FunctionSpec exp_decay();
    static FunctionSpec rational1p();
    static FunctionSpec power_exp(double a);
    static FunctionSpec indicator01();
    static FunctionSpec log_gaussian(double mu, double sigma);
    static FunctionSpec combo(std::vector<std::pair<double, FunctionSpec>> terms);
    static FunctionSpec zero();
    static FunctionSpec user_samples(std::vector<double> t,
                                     std::vector<std::complex<double>> v);

    Kind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    const std::vector<std::pair<double, FunctionSpec>>& terms() const;

    std::complex<double> operator()(double t) const;
    std::complex<double> derivative(double t) const;

    std::string name() const;

    /// Mellin integrability strip: integral of f(t) t^{s-1} dt converges
    /// for power_low < Re s < power_high.
    double mellin_power_low() const;
    double mellin_power_high() const;

    /// [u_lo, u_hi] outside of which |f(e^u) e^{c u}| is negligible
    /// (< ~1e-17 of its peak). Requires c inside the integrability strip.
    std::pair<double, double> log_range(double c) const;

    /// False for members with jumps (Indicator01) or raw sample data.
    bool smooth() const;

    struct UserData;

private:
    FunctionSpec(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}

    Kind kind_;
    double a_ = 0.0;
    double b_ = 0.0;
    std::shared_ptr<const std::vector<std::pair<double, FunctionSpec>>> terms_;
    std::shared_ptr<const UserData> user_;
};

} // namespace hht
