#pragma once

#include <complex>
#include <optional>

#include "hht/grid.hpp"
#include "hht/hilbert.hpp"
#include "hht/mellin.hpp"

namespace hht {

/*
 * Convolution adapted to the half-axis Hilbert transform: designed so that
 * H(f * g) = (H f)(H g). Inputs live on the line Re s = alpha with
 * 0 < alpha < 1/4; the product lives on Re s = 2 alpha.
 */

enum class ConvolutionRoute { MellinProduct, RealDomain, BruteForce };

struct ConvolutionResult {
    SampledFunction values;
    MellinLine line_out{0.2};
    ConvolutionRoute route = ConvolutionRoute::MellinProduct;
};

/// Factorized route: pointwise product of the transformed pair, then the
/// tan(pi s) multiplier on the doubled line.
ConvolutionResult convolve(const SampledFunction& f, const SampledFunction& g,
                           MellinLine line);

/// Spectral form of the convolution as a discrete tau-convolution of
/// cot-weighted Mellin data (zero-padded, FFT-accelerated), scaled by
/// tan(pi s) on the output line.
MellinData mellin_of_convolution(const MellinData& mf, const MellinData& mg);

/// Real-domain representation evaluated at one point by quadrature:
///   (f*g)(x) = (H g)(x) f(x)
///              - (1/pi) int f(t) [sqrt(x) g(t) - sqrt(t) g(x)]
///                          / ((t - x) sqrt(t)) dt,
/// fully independent of the spectral path (needs closed-form tags).
complexd convolve_real_oracle(const SampledFunction& f,
                              const SampledFunction& g, double x);

/// Convolution with the power t^{beta-1}, defined through the regularized
/// kernel ((x/t)^{3/2-beta} - 1)/(t - x); the bracket vanishes on the
/// diagonal, so no principal value is left.
SampledFunction convolve_power(const SampledFunction& f, double beta);
complexd convolve_power_at(const SampledFunction& f, double beta, double x);

/// (f*g)(z) off the positive axis by the truncated double contour
/// integral over the tau grid. Needs superexponentially decaying Mellin
/// data to converge for |arg z| up to pi.
complexd eval_convolution_complex(const SampledFunction& f,
                                  const SampledFunction& g,
                                  const ComplexPoint& z, MellinLine line);

/// Desk-scale brute force: 128x128 trapezoid over |tau|, |theta| <= 12
/// with closed-form or direct-quadrature Mellin factors; independent of
/// the FFT pipeline.
complexd convolve_brute_oracle(const FunctionSpec& f, const FunctionSpec& g,
                               double alpha, double x);

/// Closed-form Mellin transform for catalog members that have one.
std::optional<complexd> mellin_closed_form(const FunctionSpec& spec,
                                           complexd s);

} // namespace hht
