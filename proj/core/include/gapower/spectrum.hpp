#pragma once

#include <complex>
#include <map>
#include <set>
#include <span>

#include "gapower/multivector.hpp"

namespace gapower {

/// A harmonic with rms below this fraction of its signal's largest component
/// is treated as absent when classifying orders.
inline constexpr double presence_rel_threshold = 1e-9;

enum class SignalKind { voltage, current };

/// One spectral line of a periodic signal written in the sine convention
/// x(t) = sqrt(2) * sum_p rms_p * sin(p w t + phase_p).
/// order >= 1 (no DC), rms > 0, phase in radians.
struct HarmonicComponent {
    unsigned order;
    double rms;
    double phase;
};

/// Frequency-domain description of one periodic signal: a complex phasor
/// rms * exp(j phase) per harmonic order, plus the fundamental in rad/s.
/// Immutable once built.
class Spectrum {
public:
    /// Empty signal (identically zero in time).
    Spectrum(SignalKind kind, double omega);

    /// Projection of the component list onto per-order phasors.
    /// Throws InvalidInput on omega <= 0, order 0, rms < 0, duplicate order
    /// or non-finite values. Components with rms == 0 are dropped.
    Spectrum(SignalKind kind, double omega,
             std::span<const HarmonicComponent> components);

    /// Builds directly from phasors, preserving them bit for bit (the
    /// component constructor goes through polar form, which rounds).
    /// Order 0 or a non-finite value throws InvalidInput; exact zeros are
    /// dropped.
    static Spectrum from_phasors(SignalKind kind, double omega,
                                 std::map<unsigned, std::complex<double>> phasors);

    SignalKind kind() const noexcept { return kind_; }
    double omega() const noexcept { return omega_; }

    const std::map<unsigned, std::complex<double>>& phasors() const noexcept {
        return phasors_;
    }
    bool contains(unsigned order) const { return phasors_.contains(order); }
    /// Phasor at an order, zero when absent.
    std::complex<double> phasor(unsigned order) const;
    double rms_of(unsigned order) const { return std::abs(phasor(order)); }
    double phase_of(unsigned order) const { return std::arg(phasor(order)); }

    /// Largest stored order, 0 when empty.
    unsigned max_order() const noexcept;

    /// Whole-signal rms, the root sum of squared component rms values.
    double rms() const noexcept;

    /// Time-domain value at t.
    double sample(double t) const noexcept;

private:
    SignalKind kind_;
    double omega_;
    std::map<unsigned, std::complex<double>> phasors_;
};

/// u(t) * i(t). The spectra must share the fundamental.
double instantaneous_power(const Spectrum& u, const Spectrum& i, double t);

/// Orders split by which signal carries them. The naming follows the single
/// port: `common` appears in both voltage and current, `voltage_only` and
/// `current_only` in exactly one.
struct HarmonicPartition {
    std::set<unsigned> common;
    std::set<unsigned> voltage_only;
    std::set<unsigned> current_only;
};

/// Classifies present orders of a voltage/current pair. Components under
/// presence_rel_threshold (relative to their own signal's largest rms) do
/// not count. Throws InvalidInput when kinds are swapped or fundamentals
/// disagree.
HarmonicPartition partition(const Spectrum& voltage, const Spectrum& current);

/// The spectrum as a grade-1 element: phasor of order p on axis p.
/// dimension must be >= max_order.
Multivector vector_phasor(const Spectrum& s, unsigned dimension);

/// Phase table holding every stored order of `s`, tagged with its own phase.
/// Orders listed in `extra` but absent from `s` get a zero tag so downstream
/// products always find an entry.
PhaseTable phase_table(const Spectrum& s, const std::set<unsigned>& extra);

} // namespace gapower
