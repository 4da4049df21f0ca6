#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gapower/multivector.hpp"
#include "gapower/spectrum.hpp"

namespace gapower {

/// Ordered (voltage order, current order) pair addressing one cross product.
using OrderPair = std::pair<unsigned, unsigned>;

/// Matrix of complex cross powers between present voltage and current
/// harmonics. Entry (p, q) is U_p * conj(I_q); when p > q and both orders
/// appear in both signals it additionally rotates by
/// exp(-2j(alpha_p - alpha_q)), referencing every pair to a common frame so
/// the resulting magnitudes do not depend on the phase origin.
class CrossPowerMatrix {
public:
    CrossPowerMatrix(HarmonicPartition orders,
                     std::map<OrderPair, std::complex<double>> entries);

    /// Present voltage orders (rows), ascending.
    const std::vector<unsigned>& voltage_orders() const noexcept { return rows_; }
    /// Present current orders (columns), ascending.
    const std::vector<unsigned>& current_orders() const noexcept { return cols_; }
    const HarmonicPartition& orders() const noexcept { return orders_; }

    const std::map<OrderPair, std::complex<double>>& entries() const noexcept {
        return entries_;
    }
    /// Entry (p, q); throws std::out_of_range when either order is absent.
    std::complex<double> at(unsigned p, unsigned q) const;

    /// Sum of diagonal entries over shared orders: active plus j times
    /// signed reactive power.
    std::complex<double> trace() const;

private:
    HarmonicPartition orders_;
    std::vector<unsigned> rows_, cols_;
    std::map<OrderPair, std::complex<double>> entries_;
};

/// Builds the cross-power matrix of a voltage/current pair.
CrossPowerMatrix cross_power_matrix(const Spectrum& voltage,
                                    const Spectrum& current);

/// One distortion bivector coefficient.
struct DistortionTerm {
    std::complex<double> value;
    /// True when both orders flow in voltage and current (the antisymmetrized
    /// combination H(p,q) - H(q,p)); false for one-sided cross products.
    bool linear;
};

/// Apparent power as an element of the algebra: a complex scalar
/// (active P plus j times signed reactive Q) and one distortion term per
/// interacting order pair.
///
/// Distortion keys keep generation order (voltage order first), so a
/// one-sided pair like (4, 1) means voltage harmonic 4 against current
/// harmonic 1. On the canonical ascending blade that term carries a minus
/// sign; to_multivector applies it.
class PowerMultivector {
public:
    PowerMultivector(std::complex<double> scalar,
                     std::map<OrderPair, DistortionTerm> distortion,
                     HarmonicPartition orders);

    std::complex<double> scalar() const noexcept { return scalar_; }
    double active() const noexcept { return scalar_.real(); }
    double reactive_signed() const noexcept { return scalar_.imag(); }

    const std::map<OrderPair, DistortionTerm>& distortion_terms() const noexcept {
        return distortion_;
    }
    const HarmonicPartition& orders() const noexcept { return orders_; }

    /// Root sum of squared distortion magnitudes.
    double distortion() const noexcept;
    /// Root of |scalar|^2 plus squared distortion: the apparent power.
    double magnitude() const noexcept;

private:
    std::complex<double> scalar_;
    std::map<OrderPair, DistortionTerm> distortion_;
    HarmonicPartition orders_;
};

/// Full power computation for one port.
PowerMultivector apparent_power(const Spectrum& voltage,
                                const Spectrum& current);
PowerMultivector apparent_power(const CrossPowerMatrix& m);

/// The same element written in the algebra (scalar blade plus canonical
/// bivectors, orientation signs folded in). Bit-for-bit comparable with
/// generalized_product(vector_phasor(u), conjugate(vector_phasor(i))).
Multivector to_multivector(const PowerMultivector& s, unsigned dimension);

/// Component split of the power multivector.
struct PowerSplit {
    PowerMultivector linear;    ///< scalar and shared-order bivectors
    PowerMultivector nonlinear; ///< one-sided bivectors only
    PowerMultivector nonactive; ///< everything but active power
};
PowerSplit decompose(const PowerMultivector& s);

/// Scalar magnitudes of the decomposition. reactive_signed keeps the sign of
/// the reactive trace; the conventional unsigned figure is reactive_abs().
/// power_factor is present only when active power is positive.
struct PowerSummary {
    double active = 0.0;
    double reactive_signed = 0.0;
    double distortion = 0.0;
    double apparent = 0.0;
    std::optional<double> power_factor;

    double reactive_abs() const noexcept { return std::abs(reactive_signed); }
};

/// Computes magnitudes and cross-checks the apparent power two ways:
/// rms(u) * rms(i) against sqrt(P^2 + Q^2 + D^2). Disagreement beyond 1e-9
/// relative signals an internal bug and throws std::logic_error.
PowerSummary magnitudes(const PowerMultivector& s, const Spectrum& voltage,
                        const Spectrum& current);

/// Load quality index: the power multivector divided by active power.
/// magnitude = apparent / active >= 1, and power_factor is its reciprocal.
struct QualityIndex {
    std::complex<double> scalar; ///< 1 + j Q / P
    std::map<OrderPair, std::complex<double>> distortion_terms;
    double magnitude = 0.0;
    double power_factor = 0.0;
};

/// Throws ComputationError unless active power is positive.
QualityIndex quality_index(const PowerMultivector& s,
                           const PowerSummary& summary);

} // namespace gapower
