#include "gapower/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gapower/errors.hpp"

namespace gapower {

CrossPowerMatrix::CrossPowerMatrix(
    HarmonicPartition orders, std::map<OrderPair, std::complex<double>> entries)
    : orders_(std::move(orders)), entries_(std::move(entries)) {
    for (unsigned p : orders_.common) {
        rows_.push_back(p);
        cols_.push_back(p);
    }
    rows_.insert(rows_.end(), orders_.voltage_only.begin(),
                 orders_.voltage_only.end());
    cols_.insert(cols_.end(), orders_.current_only.begin(),
                 orders_.current_only.end());
    std::sort(rows_.begin(), rows_.end());
    std::sort(cols_.begin(), cols_.end());
}

std::complex<double> CrossPowerMatrix::at(unsigned p, unsigned q) const {
    const auto it = entries_.find({p, q});
    if (it == entries_.end())
        throw std::out_of_range("no cross power entry (" + std::to_string(p) +
                                ", " + std::to_string(q) + ")");
    return it->second;
}

std::complex<double> CrossPowerMatrix::trace() const {
    std::complex<double> t;
    for (unsigned p : orders_.common) t += at(p, p);
    return t;
}

CrossPowerMatrix cross_power_matrix(const Spectrum& voltage,
                                    const Spectrum& current) {
    HarmonicPartition parts = partition(voltage, current);

    std::map<OrderPair, std::complex<double>> entries;
    const auto present = [](const HarmonicPartition& pp, unsigned p, bool u) {
        return pp.common.contains(p) ||
               (u ? pp.voltage_only.contains(p) : pp.current_only.contains(p));
    };
    for (const auto& [p, up] : voltage.phasors()) {
        if (!present(parts, p, true)) continue;
        const double alpha_p = std::arg(up);
        for (const auto& [q, iq] : current.phasors()) {
            if (!present(parts, q, false)) continue;
            std::complex<double> v = up * std::conj(iq);
            if (p > q && parts.common.contains(p) && parts.common.contains(q)) {
                const double alpha_q = voltage.phase_of(q);
                v *= std::exp(std::complex<double>{0.0, -2.0 * (alpha_p - alpha_q)});
            }
            entries.emplace(OrderPair{p, q}, v);
        }
    }
    return CrossPowerMatrix(std::move(parts), std::move(entries));
}

PowerMultivector::PowerMultivector(std::complex<double> scalar,
                                   std::map<OrderPair, DistortionTerm> distortion,
                                   HarmonicPartition orders)
    : scalar_(scalar), distortion_(std::move(distortion)),
      orders_(std::move(orders)) {}

double PowerMultivector::distortion() const noexcept {
    double sum = 0.0;
    for (const auto& [k, t] : distortion_) sum += std::norm(t.value);
    return std::sqrt(sum);
}

double PowerMultivector::magnitude() const noexcept {
    const double d = distortion();
    return std::sqrt(std::norm(scalar_) + d * d);
}

PowerMultivector apparent_power(const CrossPowerMatrix& m) {
    const HarmonicPartition& parts = m.orders();

    std::map<OrderPair, DistortionTerm> d;
    for (unsigned p : parts.common)
        for (unsigned q : parts.common)
            if (p < q)
                d.emplace(OrderPair{p, q},
                          DistortionTerm{m.at(p, q) - m.at(q, p), true});
    for (const auto& [pq, v] : m.entries()) {
        const auto [p, q] = pq;
        if (parts.common.contains(p) && parts.common.contains(q)) continue;
        d.emplace(pq, DistortionTerm{v, false});
    }
    return PowerMultivector(m.trace(), std::move(d), parts);
}

PowerMultivector apparent_power(const Spectrum& voltage,
                                const Spectrum& current) {
    return apparent_power(cross_power_matrix(voltage, current));
}

Multivector to_multivector(const PowerMultivector& s, unsigned dimension) {
    Multivector out(dimension);
    if (s.scalar() != std::complex<double>{})
        out.add_term(Blade::scalar(), s.scalar());
    for (const auto& [pq, t] : s.distortion_terms()) {
        const auto [p, q] = pq;
        if (p < q)
            out.add_term(Blade::bivector(p, q), t.value);
        else
            out.add_term(Blade::bivector(q, p), -t.value);
    }
    return out;
}

PowerSplit decompose(const PowerMultivector& s) {
    std::map<OrderPair, DistortionTerm> lin, nonlin, all = s.distortion_terms();
    for (const auto& [k, t] : all) (t.linear ? lin : nonlin).emplace(k, t);

    return PowerSplit{
        PowerMultivector(s.scalar(), std::move(lin), s.orders()),
        PowerMultivector({0.0, 0.0}, std::move(nonlin), s.orders()),
        PowerMultivector({0.0, s.reactive_signed()}, std::move(all), s.orders()),
    };
}

PowerSummary magnitudes(const PowerMultivector& s, const Spectrum& voltage,
                        const Spectrum& current) {
    PowerSummary out;
    out.active = s.active();
    out.reactive_signed = s.reactive_signed();
    out.distortion = s.distortion();
    out.apparent = voltage.rms() * current.rms();

    // The rms product and the component sum state the same figure; losing
    // that identity means the decomposition itself is broken.
    const double via_terms = s.magnitude();
    if (std::abs(out.apparent - via_terms) >
        1e-9 * std::max(1.0, std::max(out.apparent, via_terms)))
        throw std::logic_error("apparent power routes disagree: " +
                               std::to_string(out.apparent) + " vs " +
                               std::to_string(via_terms));

    if (out.active > 0.0 && out.apparent > 0.0)
        out.power_factor = out.active / out.apparent;
    return out;
}

QualityIndex quality_index(const PowerMultivector& s,
                           const PowerSummary& summary) {
    if (!(summary.active > 0.0))
        throw ComputationError(
            "quality index needs positive active power, got " +
            std::to_string(summary.active) + " W");

    QualityIndex q;
    q.scalar = s.scalar() / summary.active;
    for (const auto& [k, t] : s.distortion_terms())
        q.distortion_terms.emplace(k, t.value / summary.active);
    q.magnitude = summary.apparent / summary.active;
    q.power_factor = summary.active / summary.apparent;
    return q;
}

} // namespace gapower
