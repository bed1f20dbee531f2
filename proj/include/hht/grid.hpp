#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hht/catalog.hpp"

namespace hht {

using complexd = std::complex<double>;

/// Uniform grid in u = log t. Spacing is (u_max - u_min)/n, so the node set
/// is periodic-friendly: u_k = u_min + k*du covers [u_min, u_max) and the
/// dual Fourier grid has spacing 2*pi/(u_max - u_min).
class LogGrid {
public:
    LogGrid() = default;
    LogGrid(std::size_t n, double u_min, double u_max);

    std::size_t size() const { return n_; }
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    double du() const { return du_; }
    double u(std::size_t k) const { return u_[k]; }
    double t(std::size_t k) const { return t_[k]; }
    const std::vector<double>& u_nodes() const { return u_; }
    const std::vector<double>& t_nodes() const { return t_; }

    bool operator==(const LogGrid& other) const
    {
        return n_ == other.n_ && u_min_ == other.u_min_ &&
               u_max_ == other.u_max_;
    }

private:
    std::size_t n_ = 0;
    double u_min_ = 0.0;
    double u_max_ = 0.0;
    double du_ = 0.0;
    std::vector<double> u_;
    std::vector<double> t_;
};

LogGrid make_log_grid(std::size_t n, double u_min, double u_max);

/// The production default: n = 4096, u in [-40, 40].
LogGrid default_grid();

/// Relative tail size below which a sampled function counts as decayed.
inline constexpr double kTailTol = 1e-12;

/// Complex samples of a function on a LogGrid, with optional provenance.
struct SampledFunction {
    LogGrid grid;
    std::vector<complexd> values;
    std::optional<FunctionSpec> tag;
    /// True when |values| over the outer 5% of nodes stays below
    /// kTailTol * max|values|. Purely diagnostic; operators that need
    /// decay re-check it against their own weight.
    bool transform_ready = false;
};

SampledFunction make_sampled(LogGrid grid, std::vector<complexd> values,
                             std::optional<FunctionSpec> tag = std::nullopt);

SampledFunction sample(const FunctionSpec& spec, const LogGrid& grid);

/// Local Lagrange interpolation of order 4 in u = log x; exact at nodes.
complexd eval_at(const SampledFunction& f, double x);

/// Weighted L2 norm: (sum |f(t_k)|^2 t_k^{2 alpha} du)^{1/2}, the trapezoid
/// discretization of the x^{2 alpha - 1} dx weight in log coordinates.
double weighted_norm(const SampledFunction& f, double alpha);

/// max over the outer 5% of nodes of |f(t) t^alpha| relative to the
/// overall max; small values mean the weighted samples have decayed.
double weighted_tail_fraction(const SampledFunction& f, double alpha);

/// Throws std::domain_error when the weighted samples carry visible tail
/// mass (fraction above 5%); `op` names the caller in the message.
void require_weighted_decay(const SampledFunction& f, double alpha,
                            const char* op);

SampledFunction scale(const SampledFunction& f, complexd c);
SampledFunction add(const SampledFunction& f, const SampledFunction& g);
SampledFunction pointwise_product(const SampledFunction& f,
                                  const SampledFunction& g);
/// Multiplies samples by t^c.
SampledFunction power_scale(const SampledFunction& f, double c);

} // namespace hht
