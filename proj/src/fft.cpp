#include "hht/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hht {

void fft(std::vector<std::complex<double>>& data, int sign)
{
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: length must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }

    // Exact-angle twiddle table; incremental products drift at large n.
    std::vector<std::complex<double>> twiddle(n / 2);
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j)
        twiddle[j] = std::polar(1.0, ang * static_cast<double>(j));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v =
                    data[i + k + len / 2] * twiddle[k * stride];
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

} // namespace hht
