#pragma once

// Synthetic three-phase signal generation and trace ingestion. Single source
// of truth for sampling conventions.

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifreq/series.hpp"

namespace ifreq {

/// Per-phase amplitude law. The catalog is deliberately closed so every
/// generated signal has a closed-form instantaneous complex frequency usable
/// as a test oracle; arbitrary waveforms enter via CSV ingestion only.
struct EnvelopeLaw {
  enum class Kind { Constant, Ramp, Exponential, Sinusoidal };
  Kind kind = Kind::Constant;
  double amplitude = 1.0;  ///< base amplitude [V], >= 0
  double rate = 0.0;       ///< ramp slope [V/s] or exponential rate [1/s]
  double depth = 0.0;      ///< sinusoidal modulation depth
  double mod_omega = 0.0;  ///< sinusoidal modulation angular frequency [rad/s]
  double mod_phase = 0.0;  ///< sinusoidal modulation phase [rad]

  double value(double t) const;

  static EnvelopeLaw constant(double amplitude);
  static EnvelopeLaw ramp(double amplitude, double slope);
  static EnvelopeLaw exponential(double amplitude, double rate);
  static EnvelopeLaw sinusoidal(double amplitude, double depth, double mod_omega,
                                double mod_phase = 0.0);
};

/// Per-phase deviation from the nominal phase ramp: offset + rate*t +
/// amplitude*sin(mod_omega*t + mod_phase), restricted by kind.
struct PhaseLaw {
  enum class Kind { Constant, Ramp, Sinusoidal };
  Kind kind = Kind::Constant;
  double offset = 0.0;     ///< [rad]
  double rate = 0.0;       ///< [rad/s]
  double amplitude = 0.0;  ///< [rad]
  double mod_omega = 0.0;  ///< [rad/s]
  double mod_phase = 0.0;  ///< [rad]

  double value(double t) const;

  static PhaseLaw constant(double offset);
  static PhaseLaw ramp(double offset, double rate);
  static PhaseLaw sinusoidal(double amplitude, double mod_omega, double mod_phase = 0.0,
                             double offset = 0.0);
};

/// Angular shift between phases, constant-plus-ramp: offset + rate*t.
struct ShiftLaw {
  double offset = 0.0;  ///< [rad]
  double rate = 0.0;    ///< [rad/s]

  double value(double t) const { return offset + rate * t; }
};

/// Additive sequence component at a multiple of the nominal frequency.
/// Non-integer order makes an interharmonic.
struct SequenceComponent {
  enum class Sequence { Positive, Negative, Zero };
  Sequence sequence = Sequence::Positive;
  double order = 1.0;      ///< frequency as a multiple of omega0
  double amplitude = 0.0;  ///< [V], >= 0
  double phase = 0.0;      ///< [rad]
};

struct PhaseChannelSpec {
  EnvelopeLaw envelope;
  PhaseLaw phase;
  ShiftLaw shift;
};

/// Parametric description of a three-phase signal:
/// v_k(t) = u_k(t) * cos(omega0*t + phi_k(t) + zeta_k(t)) + additive components.
struct SignalSpec {
  double omega0 = 0.0;  ///< nominal angular frequency [rad/s], > 0
  std::array<PhaseChannelSpec, 3> phases;
  std::vector<SequenceComponent> components;

  /// Throws std::invalid_argument on omega0 <= 0 or negative amplitudes.
  void check_valid() const;

  /// Balanced positive-sequence set: equal envelopes and phase laws, shifts
  /// (0, -2*pi/3, +2*pi/3).
  static SignalSpec balanced(double omega0, double amplitude = 1.0);
};

/// Balanced default shifts (0, -2*pi/3, +2*pi/3) for phases a, b, c.
std::array<double, 3> balanced_shifts();

/// Evaluate the spec's closed forms exactly on a uniform grid.
ThreePhaseSignal generate(const SignalSpec& spec, double t0, double dt, std::size_t n);

/// Symmetrical-component phasors at a given instant.
struct SequencePhasors {
  std::complex<double> positive;
  std::complex<double> negative;
  std::complex<double> zero;
};

/// Fortescue decomposition of three per-phase phasors,
/// V_p = (V_a + a*V_b + a^2*V_c)/3 with a = exp(j*2*pi/3).
SequencePhasors sequence_phasors(std::complex<double> va, std::complex<double> vb,
                                 std::complex<double> vc);

/// Inverse Fortescue: per-phase phasors from sequence phasors.
std::array<std::complex<double>, 3> phase_phasors(const SequencePhasors& s);

/// CSV trace I/O. Format: header `t,va,vb,vc`, decimal floating point,
/// newline-delimited. The time column must be strictly increasing and
/// uniformly spaced (relative jitter < 1e-9); violations are rejected naming
/// the first offending data row (1-based, header excluded).
ThreePhaseSignal read_trace(std::istream& in);
ThreePhaseSignal read_trace_file(const std::string& path);
void write_trace(const ThreePhaseSignal& sig, std::ostream& out);
void write_trace_file(const ThreePhaseSignal& sig, const std::string& path);

/// Sampling grid carried in spec documents.
struct SamplingGrid {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t n = 0;
};

struct SpecDocument {
  SignalSpec spec;
  std::optional<SamplingGrid> sampling;
};

/// JSON (de)serialization of spec documents; schema documented in the README.
SpecDocument spec_from_json(const std::string& text);
std::string spec_to_json(const SpecDocument& doc);

}  // namespace ifreq
