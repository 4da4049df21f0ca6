#include "gapower/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gapower/errors.hpp"

namespace gapower {

namespace {

void require_valid_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidInput("fundamental must be positive, got " +
                           std::to_string(omega));
}

void require_same_fundamental(const Spectrum& a, const Spectrum& b) {
    const double scale = std::max(a.omega(), b.omega());
    if (std::abs(a.omega() - b.omega()) > 1e-12 * scale)
        throw InvalidInput("fundamental mismatch: " +
                           std::to_string(a.omega()) + " vs " +
                           std::to_string(b.omega()) + " rad/s");
}

// Present orders: rms at or above the threshold relative to the signal's own
// largest component.
std::set<unsigned> present_orders(const Spectrum& s) {
    double top = 0.0;
    for (const auto& [p, z] : s.phasors()) top = std::max(top, std::abs(z));
    std::set<unsigned> out;
    for (const auto& [p, z] : s.phasors())
        if (std::abs(z) >= presence_rel_threshold * top) out.insert(p);
    return out;
}

} // namespace

Spectrum::Spectrum(SignalKind kind, double omega)
    : kind_(kind), omega_(omega) {
    require_valid_omega(omega);
}

Spectrum::Spectrum(SignalKind kind, double omega,
                   std::span<const HarmonicComponent> components)
    : Spectrum(kind, omega) {
    for (const HarmonicComponent& c : components) {
        if (c.order == 0)
            throw InvalidInput("harmonic orders start at 1, got 0 (no DC)");
        if (!std::isfinite(c.rms) || !std::isfinite(c.phase))
            throw InvalidInput("non-finite value at order " +
                               std::to_string(c.order));
        if (c.rms < 0.0)
            throw InvalidInput("negative rms at order " +
                               std::to_string(c.order));
        if (c.rms == 0.0) continue;
        if (!phasors_.emplace(c.order, std::polar(c.rms, c.phase)).second)
            throw InvalidInput("duplicate harmonic order " +
                               std::to_string(c.order));
    }
}

Spectrum Spectrum::from_phasors(SignalKind kind, double omega,
                                std::map<unsigned, std::complex<double>> phasors) {
    Spectrum s(kind, omega);
    for (auto it = phasors.begin(); it != phasors.end();) {
        if (it->first == 0)
            throw InvalidInput("harmonic orders start at 1, got 0 (no DC)");
        if (!std::isfinite(it->second.real()) ||
            !std::isfinite(it->second.imag()))
            throw InvalidInput("non-finite value at order " +
                               std::to_string(it->first));
        it = it->second == std::complex<double>{} ? phasors.erase(it)
                                                  : std::next(it);
    }
    s.phasors_ = std::move(phasors);
    return s;
}

std::complex<double> Spectrum::phasor(unsigned order) const {
    const auto it = phasors_.find(order);
    return it == phasors_.end() ? std::complex<double>{} : it->second;
}

unsigned Spectrum::max_order() const noexcept {
    return phasors_.empty() ? 0 : phasors_.rbegin()->first;
}

double Spectrum::rms() const noexcept {
    double sum = 0.0;
    for (const auto& [p, z] : phasors_) sum += std::norm(z);
    return std::sqrt(sum);
}

double Spectrum::sample(double t) const noexcept {
    double v = 0.0;
    for (const auto& [p, z] : phasors_)
        v += std::abs(z) * std::sin(static_cast<double>(p) * omega_ * t +
                                    std::arg(z));
    return std::numbers::sqrt2 * v;
}

double instantaneous_power(const Spectrum& u, const Spectrum& i, double t) {
    require_same_fundamental(u, i);
    return u.sample(t) * i.sample(t);
}

HarmonicPartition partition(const Spectrum& voltage, const Spectrum& current) {
    if (voltage.kind() != SignalKind::voltage ||
        current.kind() != SignalKind::current)
        throw InvalidInput("partition expects (voltage, current)");
    require_same_fundamental(voltage, current);

    const std::set<unsigned> u = present_orders(voltage);
    const std::set<unsigned> i = present_orders(current);
    HarmonicPartition out;
    for (unsigned p : u)
        (i.contains(p) ? out.common : out.voltage_only).insert(p);
    for (unsigned q : i)
        if (!u.contains(q)) out.current_only.insert(q);
    return out;
}

Multivector vector_phasor(const Spectrum& s, unsigned dimension) {
    Multivector m(dimension);
    for (const auto& [p, z] : s.phasors()) m.add_term(Blade::vector(p), z);
    return m;
}

PhaseTable phase_table(const Spectrum& s, const std::set<unsigned>& extra) {
    PhaseTable t;
    for (const auto& [p, z] : s.phasors()) t[p] = std::arg(z);
    for (unsigned p : extra) t.emplace(p, 0.0);
    return t;
}

} // namespace gapower
