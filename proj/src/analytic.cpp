#include "ifreq/analytic.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace ifreq {

using std::numbers::pi;

RealSeries hilbert(const RealSeries& x) {
  const std::size_t n = x.size();
  if (n < 8)
    throw std::invalid_argument("hilbert: need at least 8 samples, got " + std::to_string(n));
  if (!detail::all_finite(x.values)) throw std::invalid_argument("hilbert: non-finite input");

  auto spectrum = detail::rfft(x.values);
  // -j * sgn(f): positive bins rotate by -j, DC and Nyquist are annihilated.
  spectrum[0] = 0.0;
  for (std::size_t k = 1; k < spectrum.size(); ++k)
    spectrum[k] = std::complex<double>(spectrum[k].imag(), -spectrum[k].real());
  if (n % 2 == 0) spectrum.back() = 0.0;

  RealSeries out;
  out.t0 = x.t0;
  out.dt = x.dt;
  out.values = detail::irfft(spectrum, n);
  return out;
}

ComplexSeries analytic_signal(const RealSeries& x) {
  RealSeries h = hilbert(x);
  ComplexSeries z;
  z.t0 = x.t0;
  z.dt = x.dt;
  z.values.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    z.values[j] = std::complex<double>(x.values[j], h.values[j]);
  return z;
}

ComplexSeries icp(const ComplexSeries& z) {
  const std::size_t n = z.size();
  if (n == 0) throw std::invalid_argument("icp: empty series");
  if (!detail::all_finite(z.values)) throw std::invalid_argument("icp: non-finite input");

  double max_mag = 0.0;
  for (const auto& v : z.values) max_mag = std::max(max_mag, std::abs(v));
  const double floor = kMagnitudeFloorRel * max_mag;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(z.values[j]) <= floor)
      throw std::invalid_argument("icp: magnitude at or below floor at index " +
                                  std::to_string(j) + " (phase undefined near the origin)");
  }

  ComplexSeries out;
  out.t0 = z.t0;
  out.dt = z.dt;
  out.values.resize(n);
  double carry = 0.0;
  double prev = std::arg(z.values[0]);
  out.values[0] = std::complex<double>(std::log(std::abs(z.values[0])), prev);
  for (std::size_t j = 1; j < n; ++j) {
    const double cur = std::arg(z.values[j]);
    const double jump = cur - prev;
    if (jump > pi)
      carry -= 2.0 * pi;
    else if (jump < -pi)
      carry += 2.0 * pi;
    out.values[j] = std::complex<double>(std::log(std::abs(z.values[j])), cur + carry);
    prev = cur;
  }
  return out;
}

ComplexFrequencySeries icf(const ComplexSeries& z) {
  if (z.size() < 3) throw std::invalid_argument("icf: need at least 3 samples");
  ComplexSeries phase = icp(z);
  ComplexFrequencySeries out;
  out.s.t0 = z.t0;
  out.s.dt = z.dt;
  out.s.values = detail::derivative(phase.values, z.dt);
  out.edge_margin = icf_edge_margin(z.size());
  return out;
}

double bedrosian_overlap(const RealSeries& envelope, double carrier_hz) {
  if (carrier_hz < 0.0) throw std::invalid_argument("bedrosian_overlap: negative carrier");
  const std::size_t n = envelope.size();
  if (n < 2) throw std::invalid_argument("bedrosian_overlap: need at least 2 samples");
  if (!detail::all_finite(envelope.values))
    throw std::invalid_argument("bedrosian_overlap: non-finite input");

  const auto spectrum = detail::rfft(envelope.values);
  const double df = 1.0 / (static_cast<double>(n) * envelope.dt);

  // One-sided energy per bin; interior bins carry the conjugate image too.
  std::vector<double> energy(spectrum.size());
  double total = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    double e = std::norm(spectrum[k]);
    if (k != 0 && !(n % 2 == 0 && k == spectrum.size() - 1)) e *= 2.0;
    energy[k] = e;
    total += e;
  }
  if (total == 0.0) return 0.0;

  double cum = 0.0;
  double bw99 = 0.0;
  for (std::size_t k = 0; k < energy.size(); ++k) {
    cum += energy[k];
    if (cum >= 0.99 * total) {
      bw99 = static_cast<double>(k) * df;
      break;
    }
  }
  if (bw99 < carrier_hz) return 0.0;

  double above = 0.0;
  for (std::size_t k = 0; k < energy.size(); ++k)
    if (static_cast<double>(k) * df >= carrier_hz) above += energy[k];
  return above / total;
}

}  // namespace ifreq
