#pragma once

#include <complex>
#include <vector>

namespace hht {

/// In-place radix-2 FFT. `sign` selects the exponent e^{sign*2*pi*i*jk/n};
/// no normalization is applied. Length must be a power of two.
void fft(std::vector<std::complex<double>>& data, int sign);

} // namespace hht
