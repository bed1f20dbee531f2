#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hht {

using Integrand = std::function<std::complex<double>(double)>;

struct QuadOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-12;
    // Deep enough to bisect an endpoint algebraic singularity to
    // tolerance (each level only shaves a constant factor there).
    int max_depth = 200;
    std::size_t max_intervals = 20000;
    // Split the interval uniformly this many times before adapting. Keeps
    // the mesh (and hence the round-off signature) stable across integrands
    // that differ only in tiny perturbations.
    int initial_splits = 0;
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    std::size_t evals = 0;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b].
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& opt = {});

/// Same, with forced breakpoints (each panel integrated adaptively).
QuadResult integrate_segmented(const Integrand& f,
                               const std::vector<double>& breakpoints,
                               const QuadOptions& opt = {});

/// Neville extrapolation of (x_i, y_i) samples to x = 0, using at most
/// `order` + 1 of the trailing (smallest-x) samples.
std::complex<double>
extrapolate_to_zero(const std::vector<double>& xs,
                    const std::vector<std::complex<double>>& ys, int order);

} // namespace hht
