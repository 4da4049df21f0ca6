#include "gapower/compensation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "gapower/errors.hpp"

namespace gapower {

namespace {

// Reactive power of one shared harmonic, signed (positive for a lagging,
// inductive component).
double harmonic_reactive(const Spectrum& u, const Spectrum& i, unsigned n) {
    return (u.phasor(n) * std::conj(i.phasor(n))).imag();
}

} // namespace

double LcBranch::pole_omega() const {
    if (!(henries > 0.0) || !(farads > 0.0))
        throw InvalidInput("LC branch needs positive L and C");
    return 1.0 / std::sqrt(henries * farads);
}

CompensatorDesign::CompensatorDesign(double omega) : omega_(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidInput("fundamental must be positive, got " +
                           std::to_string(omega));
}

CompensatorDesign& CompensatorDesign::add(const ShuntCapacitor& c) {
    if (!(c.farads >= 0.0) || !std::isfinite(c.farads))
        throw InvalidInput("capacitor value must be >= 0 F");
    elements_.push_back(c);
    return *this;
}

CompensatorDesign& CompensatorDesign::add(const LcBranch& b) {
    b.pole_omega(); // validates both values
    elements_.push_back(b);
    return *this;
}

std::complex<double> CompensatorDesign::admittance(unsigned order) const {
    std::complex<double> y;
    for (const CompensatorElement& e : elements_)
        y += std::visit([&](const auto& el) {
            return gapower::admittance(el, order, omega_);
        }, e);
    return y;
}

std::complex<double> admittance(const ShuntCapacitor& c, unsigned order,
                                double omega) {
    return {0.0, static_cast<double>(order) * omega * c.farads};
}

std::complex<double> admittance(const LcBranch& b, unsigned order,
                                double omega) {
    const double nw = static_cast<double>(order) * omega;
    const double pole = b.pole_omega();
    if (std::abs(nw - pole) <= 1e-9 * pole)
        throw InfeasibleDesign("harmonic " + std::to_string(order) +
                               " sits on an LC branch pole (" +
                               std::to_string(pole) + " rad/s)");
    const double denom = 1.0 - nw * nw * b.henries * b.farads;
    return {0.0, nw * b.farads / denom};
}

ShuntCapacitor optimal_shunt_capacitor(const Spectrum& voltage,
                                       const Spectrum& current) {
    const HarmonicPartition parts = partition(voltage, current);
    if (parts.common.empty())
        throw ComputationError(
            "signals share no harmonic; nothing a shunt element can shift");

    // Minimizes sum |I_n + j n w C U_n|^2, a quadratic in C with vertex
    // sum(n Q_n) / (w sum(n^2 U_n^2)). The numerator runs over shared
    // harmonics (Q_n = 0 where the load draws no current) but the denominator
    // over every voltage harmonic: the capacitor draws current wherever the
    // bus has voltage. A negative vertex means the port is net capacitive and
    // the best nonnegative C is zero.
    double num = 0.0, den = 0.0;
    for (unsigned n : parts.common)
        num += n * harmonic_reactive(voltage, current, n);
    for (const auto& [n, un] : voltage.phasors())
        den += static_cast<double>(n) * n * std::norm(un);
    const double c = num / (voltage.omega() * den);
    return ShuntCapacitor{std::max(0.0, c)};
}

CompensatorDesign fixed_pole_lc_design(const Spectrum& voltage,
                                       const Spectrum& current,
                                       std::span<const double> pole_multipliers) {
    const HarmonicPartition parts = partition(voltage, current);
    const std::vector<unsigned> shared(parts.common.begin(), parts.common.end());
    if (pole_multipliers.size() != shared.size())
        throw InvalidInput("need one pole per shared harmonic: " +
                           std::to_string(shared.size()) + " shared, " +
                           std::to_string(pole_multipliers.size()) + " poles");

    for (double k : pole_multipliers) {
        if (!(k > 0.0) || !std::isfinite(k))
            throw InvalidInput("pole multipliers must be positive");
        for (unsigned n : shared)
            if (std::abs(k - static_cast<double>(n)) <= 1e-9 * n)
                throw InfeasibleDesign("pole multiplier " + std::to_string(k) +
                                       " sits on present harmonic " +
                                       std::to_string(n));
        for (unsigned n : parts.voltage_only)
            if (std::abs(k - static_cast<double>(n)) <= 1e-9 * n)
                throw InfeasibleDesign("pole multiplier " + std::to_string(k) +
                                       " sits on present harmonic " +
                                       std::to_string(n));
    }

    // Cancellation conditions: total branch susceptance at each shared n
    // equals Q_n / U_n^2.
    const double w = voltage.omega();
    const auto m = static_cast<Eigen::Index>(shared.size());
    Eigen::MatrixXd A(m, m);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const auto n = static_cast<double>(shared[static_cast<std::size_t>(r)]);
        for (Eigen::Index c = 0; c < m; ++c) {
            const double k = pole_multipliers[static_cast<std::size_t>(c)];
            A(r, c) = n * w * k * k / (k * k - n * n);
        }
        const unsigned order = shared[static_cast<std::size_t>(r)];
        rhs(r) = harmonic_reactive(voltage, current, order) /
                 std::norm(voltage.phasor(order));
    }

    const Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible())
        throw InfeasibleDesign("pole placement makes the design singular");
    const Eigen::VectorXd c = lu.solve(rhs);

    CompensatorDesign design(w);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double ki = pole_multipliers[static_cast<std::size_t>(k)];
        if (!(c(k) > 0.0))
            throw InfeasibleDesign(
                "branch at pole " + std::to_string(ki) +
                " needs C = " + std::to_string(c(k)) +
                " F; no passive LC bank meets this demand");
        design.add(LcBranch{1.0 / (ki * w * ki * w * c(k)), c(k)});
    }
    return design;
}

Spectrum apply_compensator(const Spectrum& voltage, const Spectrum& current,
                           const CompensatorDesign& design) {
    if (std::abs(design.omega() - voltage.omega()) >
        1e-12 * std::max(design.omega(), voltage.omega()))
        throw InvalidInput("compensator designed for a different fundamental");

    std::map<unsigned, std::complex<double>> phasors(current.phasors());
    for (const auto& [n, un] : voltage.phasors()) {
        const std::complex<double> next =
            phasors[n] + design.admittance(n) * un;
        if (next == std::complex<double>{})
            phasors.erase(n);
        else
            phasors[n] = next;
    }

    return Spectrum::from_phasors(SignalKind::current, current.omega(),
                                  std::move(phasors));
}

} // namespace gapower
