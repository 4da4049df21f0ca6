#pragma once

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "gapower/spectrum.hpp"

namespace gapower {

/// Shunt capacitor across the port. farads >= 0; zero is a no-op element.
struct ShuntCapacitor {
    double farads = 0.0;
};

/// Series L-C branch connected in shunt. Both values strictly positive; the
/// branch resonates (admittance pole) at 1/sqrt(LC) rad/s.
struct LcBranch {
    double henries = 0.0;
    double farads = 0.0;

    double pole_omega() const;
};

using CompensatorElement = std::variant<ShuntCapacitor, LcBranch>;

/// A passive shunt compensator: parallel elements designed at one
/// fundamental. Lossless by construction, so every admittance it presents is
/// purely imaginary and active power through the port cannot change.
class CompensatorDesign {
public:
    explicit CompensatorDesign(double omega);

    CompensatorDesign& add(const ShuntCapacitor& c);
    CompensatorDesign& add(const LcBranch& b);

    double omega() const noexcept { return omega_; }
    const std::vector<CompensatorElement>& elements() const noexcept {
        return elements_;
    }

    /// Total admittance at harmonic order n. Throws InfeasibleDesign when n
    /// falls within 1e-9 relative of an LC branch pole.
    std::complex<double> admittance(unsigned order) const;

private:
    double omega_;
    std::vector<CompensatorElement> elements_;
};

/// Element admittances at harmonic n of fundamental omega.
std::complex<double> admittance(const ShuntCapacitor& c, unsigned order,
                                double omega);
/// j n w C / (1 - n^2 w^2 L C); throws InfeasibleDesign near the pole.
std::complex<double> admittance(const LcBranch& b, unsigned order,
                                double omega);

/// Smallest-current shunt capacitor for the port, from the closed form
///   C = sum_n n Q_n / (w sum_n n^2 U_n^2)   over shared orders n,
/// clamped at zero (a capacitor cannot supply capacitive-load demand).
/// Throws ComputationError when the signals share no harmonic.
ShuntCapacitor optimal_shunt_capacitor(const Spectrum& voltage,
                                       const Spectrum& current);

/// One series-LC shunt branch per shared harmonic, with prescribed
/// resonance positions k_i (multiples of the fundamental, not necessarily
/// integer). Solves
///   sum_i C_i n w k_i^2 / (k_i^2 - n^2) = Q_n / U_n^2   for every shared n,
/// then L_i = 1 / (k_i w)^2 C_i, cancelling reactive power harmonic by
/// harmonic. Throws InvalidInput when the pole count differs from the
/// number of shared harmonics, InfeasibleDesign when a pole sits on a
/// present order, the system is singular, or a branch capacitance comes out
/// nonpositive.
CompensatorDesign fixed_pole_lc_design(const Spectrum& voltage,
                                       const Spectrum& current,
                                       std::span<const double> pole_multipliers);

/// Current drawn from the source with the compensator in place, on a stiff
/// bus (the voltage is imposed): I'_n = I_n + Y(n) U_n wherever voltage is
/// present; current-only harmonics pass through. Throws InvalidInput when
/// design and signals disagree on the fundamental.
Spectrum apply_compensator(const Spectrum& voltage, const Spectrum& current,
                           const CompensatorDesign& design);

} // namespace gapower
