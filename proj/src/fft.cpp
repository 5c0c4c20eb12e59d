#include "pumpsim/fft.hpp"

#include <cmath>
#include <utility>

#include "pumpsim/errors.hpp"
#include "pumpsim/kernels.hpp"
#include "pumpsim/units.hpp"

namespace pumpsim {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_pow2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    fail(ErrorCode::InvalidArgument, "fft size must be a power of two");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    // fresh twiddles per stage keep the error flat across large transforms
    const double step = -2.0 * units::pi / static_cast<double>(len);
    std::vector<std::complex<double>> tw(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) {
      tw[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * tw[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

std::vector<double> spectrum_magnitudes(const std::vector<double>& x,
                                        std::size_t nfft) {
  if (nfft < x.size() || nfft == 0 || (nfft & (nfft - 1)) != 0) {
    fail(ErrorCode::InvalidArgument, "nfft must be a power of two >= n");
  }
  std::vector<std::complex<double>> a(nfft);
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i];
  fft_pow2(a);

  const std::size_t half = nfft / 2 + 1;
  std::vector<double> sq(half);
  // std::complex<double> is layout-compatible with double[2]
  kernels::abs2(reinterpret_cast<const double*>(a.data()), half, sq.data());
  for (double& v : sq) v = std::sqrt(v);
  return sq;
}

}  // namespace pumpsim
