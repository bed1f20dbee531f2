#pragma once

#include <complex>

#include "hht/grid.hpp"
#include "hht/mellin.hpp"

namespace hht {

/*
 * Singular integral equation on the half-axis,
 *
 *   cot(pi b) f(x) - (1/pi) int f(t) ((x/t)^{3/2-b} - 1)/(t - x) dt
 *       = x^{1-b} h(x),          0 < b < 1/2,
 *
 * diagonalized by the Mellin transform on b/2 < Re s < 1/4. The resolvent
 * kernel K_b has three closed forms depending on the sign of
 * 9 sin^2(pi b) - 1.
 */

enum class KernelRegime { Oscillatory, Hyperbolic, Boundary };

struct KernelParams {
    double beta = 0.0;
    KernelRegime regime = KernelRegime::Boundary;
    double L = 0.0;     // log(3 sin(pi b) + sqrt(9 sin^2(pi b) - 1)), oscillatory
    double gamma = 0.0; // arccos(3 sin(pi b)), hyperbolic
    double band = 1e-6;
};

struct SieConfig {
    double alpha = 0.2;
    double boundary_band = 1e-6;
};

struct SieMultipliers {
    complexd forward;
    complexd solve; // algebraic inverse: forward * solve == 1
};

enum class SolveRoute { Multiplier, Kernel };

KernelRegime kernel_regime(double beta, double band = 1e-6);
KernelParams make_kernel_params(double beta, double band = 1e-6);

/// Closed-form kernel; the x = 1 value is the analytic limit.
double kernel_value(const KernelParams& params, double x);

/// Contour-integral form of the kernel over the line Re s = alpha,
/// beta/2 < alpha < 1/4. Imaginary part should sit at round-off.
complexd kernel_contour_oracle(double beta, double alpha, double x);

/// The forward and solve multipliers at s; their product is exactly 1.
SieMultipliers sie_multipliers(complexd s, double beta);

/// Forward operator via the Mellin multiplier; returns h.
SampledFunction sie_forward(const SampledFunction& f, double beta,
                            const SieConfig& cfg);

/// Quadrature form of the forward operator at one point (valid when the
/// spec vanishes fast enough at 0 for the kernel integral to converge).
complexd sie_forward_quadrature(const FunctionSpec& spec, double beta,
                                double x);

/// Solution operator. Multiplier route is authoritative; the kernel route
/// evaluates tan(pi b) x^{1-b} h(x) - sin(pi b) int K_b(x/t) h(t) t^{-b} dt
/// by direct quadrature as an independent check.
SampledFunction sie_solve(const SampledFunction& h, double beta,
                          const SieConfig& cfg,
                          SolveRoute route = SolveRoute::Multiplier);

} // namespace hht
