#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pumpsim {

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform; the size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a);

// Magnitudes of bins 0..nfft/2 of the zero-padded transform of x.
// nfft must be a power of two and >= x.size().
std::vector<double> spectrum_magnitudes(const std::vector<double>& x,
                                        std::size_t nfft);

}  // namespace pumpsim
