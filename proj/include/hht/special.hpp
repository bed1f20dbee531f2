#pragma once

#include <complex>

namespace hht {

using complexd = std::complex<double>;

/// cot(pi*s), evaluated through exponentially scaled forms for large |Im s|
/// so the value saturates at -i / +i instead of overflowing.
complexd cot_pi(complexd s);

/// tan(pi*s), same scaling strategy as cot_pi.
complexd tan_pi(complexd s);

/// Gamma function for complex argument (Lanczos approximation with
/// reflection for Re z < 0.5). Relative accuracy ~1e-13 away from poles.
complexd gamma_complex(complexd z);

} // namespace hht
