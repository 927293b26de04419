#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace ifreq {

/// A 3-component vector in abc space.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
};

/// Uniformly sampled real-valued time series.
struct RealSeries {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double time_at(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
};

/// Uniformly sampled complex-valued time series. Used for analytic signals,
/// Clarke/Park vectors, complex phases and complex frequencies alike.
struct ComplexSeries {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<std::complex<double>> values;

  std::size_t size() const { return values.size(); }
  double time_at(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
};

/// Complex frequency samples: real part is the radial frequency (nepers/s),
/// imaginary part the angular frequency (rad/s). The first and last
/// `edge_margin` samples are numerically unreliable (derivative stencils and
/// transform transients) and excluded from interior comparisons.
struct ComplexFrequencySeries {
  ComplexSeries s;
  std::size_t edge_margin = 1;

  std::size_t size() const { return s.size(); }
};

/// Uniformly sampled three-phase trace.
struct ThreePhaseSignal {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> va;
  std::vector<double> vb;
  std::vector<double> vc;

  std::size_t size() const { return va.size(); }
  double time_at(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
  Vec3 at(std::size_t j) const { return {va[j], vb[j], vc[j]}; }

  /// Throws std::invalid_argument when dt <= 0, fewer than 3 samples,
  /// mismatched channel lengths, or non-finite values.
  void check_valid() const;
};

/// True when two series share t0, dt and length up to round-off.
bool same_grid(double t0_a, double dt_a, std::size_t n_a, double t0_b, double dt_b,
               std::size_t n_b);

namespace detail {

bool all_finite(const std::vector<double>& v);
bool all_finite(const std::vector<std::complex<double>>& v);

/// Second-order first derivative: central differences in the interior,
/// one-sided 3-point stencils at the two boundary samples.
std::vector<double> derivative(const std::vector<double>& f, double dt);
std::vector<std::complex<double>> derivative(const std::vector<std::complex<double>>& f,
                                             double dt);

}  // namespace detail

}  // namespace ifreq
