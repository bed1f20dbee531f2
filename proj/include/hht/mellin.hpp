#pragma once

#include <complex>
#include <vector>

#include "hht/grid.hpp"

namespace hht {

/// Vertical line Re s = alpha in the Mellin plane.
struct MellinLine {
    double alpha;
};

/// Transform values F(alpha + i tau_j) on the tau grid dual to a LogGrid:
/// tau_j = (j - n/2) * dtau with dtau = 2 pi / (u_max - u_min).
struct MellinData {
    MellinLine line{0.25};
    LogGrid grid;
    std::vector<complexd> values;

    std::size_t size() const { return values.size(); }
    double dtau() const;
    double tau(std::size_t j) const;
    complexd s(std::size_t j) const
    {
        return complexd(line.alpha, tau(j));
    }
};

/// Transform of t -> f(t) against t^{s-1} dt along Re s = alpha, computed
/// as an FFT of the weighted samples f(t_k) e^{alpha u_k}. Accuracy
/// depends on those weighted samples decaying at both grid ends.
MellinData mellin_forward(const SampledFunction& f, MellinLine line);

/// Applies a spectral multiplier at every paired tau node. The -Nyquist
/// bin (j = 0) has no +Nyquist partner and is its own mirror, so a
/// non-real factor there would break the real -> real symmetry of the
/// operators; it is passed through unchanged, which also keeps the exact
/// multiplier-inverse identities bin-by-bin.
template <class F> void apply_multiplier(MellinData& m, F&& mult)
{
    for (std::size_t j = 1; j < m.size(); ++j)
        m.values[j] *= mult(m.s(j));
}

/// Inverse transform back onto the source grid; exact inverse of
/// mellin_forward at the discrete level.
SampledFunction mellin_inverse(const MellinData& m);

/// ((1/2 pi) sum |F|^2 dtau)^{1/2}; equals weighted_norm(f, alpha) exactly
/// for the discrete pair.
double parseval_norm(const MellinData& m);

/// Direct adaptive quadrature of the transform integral in log
/// coordinates; independent of the FFT path. Absolute tolerance ~1e-10.
complexd mellin_direct_oracle(const FunctionSpec& spec, complexd s);

/// Analytic continuation of the sampled function off the positive axis,
/// (1/(2 pi i)) int F(s) z^{-s} ds over the truncated line. Requires the
/// spectrum to outrun e^{|arg z| |tau|}; the sum is windowed to where the
/// data sits above the FFT round-off floor.
complexd mellin_eval_analytic(const MellinData& m, complexd z);

/// Multiplies the outer `fraction` of the tau band by a raised cosine.
/// Optional smoothing for spectra of discontinuous inputs.
void apply_raised_cosine_taper(MellinData& m, double fraction = 0.15);

/// True when |tau * F| has decayed over the outer 5% of the tau grid;
/// numeric proxy for s F(s) being square integrable on the line.
bool mellin_tail_decayed(const MellinData& m, double fraction = 0.01);

} // namespace hht
