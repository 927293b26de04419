#include "ifreq/series.hpp"

#include <stdexcept>
#include <string>

namespace ifreq {

void ThreePhaseSignal::check_valid() const {
  if (!(dt > 0.0)) throw std::invalid_argument("ThreePhaseSignal: dt must be > 0");
  if (va.size() != vb.size() || va.size() != vc.size())
    throw std::invalid_argument("ThreePhaseSignal: phase channels differ in length");
  if (va.size() < 3)
    throw std::invalid_argument("ThreePhaseSignal: need at least 3 samples, got " +
                                std::to_string(va.size()));
  if (!detail::all_finite(va) || !detail::all_finite(vb) || !detail::all_finite(vc))
    throw std::invalid_argument("ThreePhaseSignal: non-finite sample value");
}

bool same_grid(double t0_a, double dt_a, std::size_t n_a, double t0_b, double dt_b,
               std::size_t n_b) {
  if (n_a != n_b) return false;
  const double scale = std::max(std::abs(dt_a), std::abs(dt_b));
  if (std::abs(dt_a - dt_b) > 1e-12 * scale) return false;
  return std::abs(t0_a - t0_b) <= 1e-9 * std::max(scale, std::max(std::abs(t0_a), std::abs(t0_b)));
}

namespace detail {

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool all_finite(const std::vector<std::complex<double>>& v) {
  for (const auto& x : v)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

template <typename T>
static std::vector<T> derivative_impl(const std::vector<T>& f, double dt) {
  const std::size_t n = f.size();
  if (n < 3) throw std::invalid_argument("derivative: need at least 3 samples");
  std::vector<T> d(n);
  const double inv2dt = 1.0 / (2.0 * dt);
  d[0] = (f[0] * -3.0 + f[1] * 4.0 - f[2]) * inv2dt;
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (f[j + 1] - f[j - 1]) * inv2dt;
  d[n - 1] = (f[n - 1] * 3.0 - f[n - 2] * 4.0 + f[n - 3]) * inv2dt;
  return d;
}

std::vector<double> derivative(const std::vector<double>& f, double dt) {
  return derivative_impl(f, dt);
}

std::vector<std::complex<double>> derivative(const std::vector<std::complex<double>>& f,
                                             double dt) {
  return derivative_impl(f, dt);
}

}  // namespace detail

}  // namespace ifreq
