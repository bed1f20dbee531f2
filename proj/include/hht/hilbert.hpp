#pragma once

#include <complex>
#include <vector>

#include "hht/grid.hpp"
#include "hht/mellin.hpp"

namespace hht {

/*
 * Half-axis Hilbert transform
 *
 *                 1       / inf   f(t)
 *   (H f)(x)  =  --- PV  |       ------ dt ,    x > 0,
 *                 pi      / 0     t - x
 *
 * acting as the multiplier cot(pi s) on Mellin data over the line
 * Re s = alpha, 0 < alpha < 1/2; the inverse acts as tan(pi s).
 */

struct PVConfig {
    /// Decreasing excision half-widths (relative to x).
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
    int richardson_order = 2;
    double quad_tol = 1e-11;
};

struct PvOracleResult {
    complexd value;           // singularity-subtraction result
    complexd excision_limit;  // Richardson limit of the excised integrals
    double consistency;       // |value - excision_limit|
};

struct ComplexPoint {
    complexd z;
    explicit ComplexPoint(complexd zz);
    double r() const { return std::abs(z); }
    double theta() const { return std::arg(z); }
};

struct NormReport {
    double alpha = 0.0;
    double norm_f = 0.0;
    double norm_hf = 0.0;
    double lower_factor = 0.0;
    double upper_factor = 0.0;
    bool pass = false;
};

enum class InverseRoute { Multiplier, Quadrature };

/// cot(pi s) on 0 < Re s < 1.
complexd cot_multiplier(complexd s);
/// tan(pi s) on 0 < Re s < 1.
complexd tan_multiplier(complexd s);

/// H f via the cot(pi s) multiplier on the line; 0 < alpha < 1/2.
SampledFunction hilbert_forward(const SampledFunction& f, MellinLine line);

/// Principal-value quadrature of the defining integral at a single point.
/// Independent of the spectral path: singularity subtraction near t = x
/// plus the explicit log term, with an excision/Richardson cross-check.
PvOracleResult hilbert_pv_oracle_full(const FunctionSpec& spec, double x,
                                      const PVConfig& cfg = {});
complexd hilbert_pv_oracle(const FunctionSpec& spec, double x,
                           const PVConfig& cfg = {});

/// Excised cotangent integral: (1/pi) [int_0^{1-eps} + int_{1+eps}^inf]
/// t^{s-1}/(1-t) dt. Converges to cot(pi s) as eps -> 0.
complexd excised_phi(complexd s, double eps);
/// Richardson limit of excised_phi along cfg.epsilons.
complexd excised_phi_limit(complexd s, const PVConfig& cfg = {});

/// Inverse transform. Multiplier route applies tan(pi s); the quadrature
/// route evaluates the explicit reciprocal formula
///   f(x) = (1/pi) int h(t) / ((sqrt x + sqrt t) sqrt t) dt - (H h)(x)
/// node by node as an independent cross-check.
SampledFunction hilbert_inverse(const SampledFunction& h, MellinLine line,
                                InverseRoute route = InverseRoute::Multiplier);

/// Diagnostic route through the logarithmic kernel:
///   h(x) = -(1/pi) d/dx int log|1 - x/t| f(t) dt,
/// outer derivative by central differences with step x * 1e-4.
complexd log_kernel_form(const SampledFunction& f, double x);

/// Analytic evaluation off the positive axis:
///   (H f)(z) = (1/(2 pi i)) int [cot(pi s) + i sgn(arg z)] F(s) z^{-s} ds
/// over the truncated line. On arg z = pi this reduces to the absolutely
/// convergent Stieltjes form (1/pi) int f(t)/(t + |z|) dt.
complexd eval_complex(const SampledFunction& f, const ComplexPoint& z,
                      MellinLine line);

/// Both weighted norms plus the cot(pi alpha) sandwich verdict.
NormReport norm_report(const SampledFunction& f, double alpha);

} // namespace hht
