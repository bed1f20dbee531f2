#include "hht/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hht {

namespace {

constexpr double kPi = std::numbers::pi;

// Threshold on |Im(pi*s)| beyond which the asymptotic form is exact to
// double precision: the correction terms are O(e^{-2|Im(pi*s)|}) < 1e-21.
constexpr double kAsymptoteIm = 25.0;

} // namespace

complexd cot_pi(complexd s)
{
    const complexd z = kPi * s;
    const double y = z.imag();
    if (y > kAsymptoteIm || y < -kAsymptoteIm) {
        // cot z = -i (1 + w)/(1 - w) with w = e^{2iz} (upper half plane),
        // and the mirrored form below the axis.
        if (y > 0.0) {
            const complexd w = std::exp(complexd(0.0, 2.0) * z);
            return complexd(0.0, -1.0) * (1.0 + w) / (1.0 - w);
        }
        const complexd w = std::exp(complexd(0.0, -2.0) * z);
        return complexd(0.0, 1.0) * (1.0 + w) / (1.0 - w);
    }
    const double x = z.real();
    const double sh = std::sinh(y);
    if (std::abs(y) < 1e-12 && std::abs(std::sin(x)) < 1e-9)
        throw std::domain_error("cot_pi: pole at integer real argument");
    const double den = std::sin(x) * std::sin(x) + sh * sh;
    return complexd(0.5 * std::sin(2.0 * x), -0.5 * std::sinh(2.0 * y)) / den;
}

complexd tan_pi(complexd s)
{
    const complexd z = kPi * s;
    const double y = z.imag();
    if (y > kAsymptoteIm || y < -kAsymptoteIm) {
        // tan z = i (1 - w)/(1 + w) with w = e^{2iz} (upper half plane).
        if (y > 0.0) {
            const complexd w = std::exp(complexd(0.0, 2.0) * z);
            return complexd(0.0, 1.0) * (1.0 - w) / (1.0 + w);
        }
        const complexd w = std::exp(complexd(0.0, -2.0) * z);
        return complexd(0.0, -1.0) * (1.0 - w) / (1.0 + w);
    }
    const double x = z.real();
    if (std::abs(y) < 1e-12 && std::abs(std::cos(x)) < 1e-9)
        throw std::domain_error("tan_pi: pole at half-integer real argument");
    const double den = std::cos(x) * std::cos(x) + std::sinh(y) * std::sinh(y);
    return complexd(0.5 * std::sin(2.0 * x), 0.5 * std::sinh(2.0 * y)) / den;
}

complexd gamma_complex(complexd z)
{
    // Lanczos coefficients, g = 7, n = 9.
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };

    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    complexd x = coef[0];
    for (int i = 1; i < 9; ++i)
        x += coef[i] / (z + static_cast<double>(i));
    const complexd t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace hht
