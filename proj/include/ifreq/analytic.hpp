#pragma once

// Analytic-signal formulation: discrete Hilbert transform, instantaneous
// complex phase (ICP) and instantaneous complex frequency (ICF) of a single
// real-valued channel.

#include "ifreq/series.hpp"

namespace ifreq {

/// Samples with |z| at or below this fraction of max|z| have no meaningful
/// phase and are rejected by icp/icf.
inline constexpr double kMagnitudeFloorRel = 1e-12;

/// Samples flagged unreliable at each end of a Hilbert-transformed record
/// (periodization transient of the full-record DFT method).
inline std::size_t hilbert_edge_margin(std::size_t n) { return n < 32 ? 1 : n / 32; }

/// Edge margin of an ICF series: one derivative stencil sample plus the
/// Hilbert transient guard.
inline std::size_t icf_edge_margin(std::size_t n) { return 1 + hilbert_edge_margin(n); }

/// Discrete Hilbert transform by the frequency-domain method: forward DFT,
/// multiply bins by -j*sgn(frequency) (zero at DC and Nyquist), inverse DFT.
/// Exact for tones on the DFT grid; non-periodic records get an edge
/// transient covered by hilbert_edge_margin. Requires n >= 8.
RealSeries hilbert(const RealSeries& x);

/// Gabor analytic signal x + j*H{x}. The real part is the input, bitwise.
ComplexSeries analytic_signal(const RealSeries& x);

/// Instantaneous complex phase ln|z| + j*arg(z) with the argument
/// continuously unwrapped: principal value at the first sample, +/-2*pi
/// corrections whenever the sample-to-sample jump exceeds pi. Requires
/// |z| above the magnitude floor at every sample; the first offending
/// index is reported otherwise. Faithful unwrapping additionally needs
/// omega*dt < pi, which is a documented precondition, not checked.
ComplexSeries icp(const ComplexSeries& z);

/// Instantaneous complex frequency: numerical time derivative of icp(z),
/// central differences in the interior and one-sided second-order stencils
/// at the boundary samples. Real part: radial frequency (nepers/s);
/// imaginary part: angular frequency (rad/s).
ComplexFrequencySeries icf(const ComplexSeries& z);

/// Bedrosian spectral-overlap diagnostic. Returns 0 when the envelope's
/// 99%-energy bandwidth lies strictly below the carrier, otherwise the
/// fraction of envelope energy at or above the carrier frequency. Computed
/// from the DFT of the supplied envelope samples.
double bedrosian_overlap(const RealSeries& envelope, double carrier_hz);

}  // namespace ifreq
