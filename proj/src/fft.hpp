#pragma once

// Internal FFT helpers backed by FFTW3. Not part of the public API.

#include <complex>
#include <cstddef>
#include <vector>

namespace ifreq::detail {

/// Real-to-complex DFT, half spectrum (bins 0 .. n/2).
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

/// Inverse of rfft for an n-sample real signal; includes the 1/n scaling.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, std::size_t n);

}  // namespace ifreq::detail
