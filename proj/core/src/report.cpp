#include "gapower/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>

#include <json.hpp>

#include "gapower/errors.hpp"

namespace gapower {

namespace {

using nlohmann::ordered_json;

// Shortest round-trip decimal form (what the JSON serializer emits), used in
// CSV too so machine formats are lossless and byte-stable.
std::string num(double x) { return nlohmann::json(x).dump(); }

template <class... A>
std::string fmt(const char* f, A... a) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

// Fixed-point with `dec` decimals; a value rounding to zero loses any minus
// sign so tables never show "-0.00".
std::string fixed(double v, int dec) {
    std::string s = fmt("%.*f", dec, v);
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-')
        s.erase(0, 1);
    return s;
}

std::string complex_str(std::complex<double> z, int dec) {
    return fixed(z.real(), dec) + (z.imag() < 0.0 ? " - j" : " + j") +
           fixed(std::abs(z.imag()), dec);
}

std::string pair_key(OrderPair pq) {
    return std::to_string(pq.first) + "_" + std::to_string(pq.second);
}

std::string joined(const std::set<unsigned>& s) {
    std::string out;
    for (unsigned n : s) {
        if (!out.empty()) out += ';';
        out += std::to_string(n);
    }
    return out;
}

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

ordered_json spectrum_json(const Spectrum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& [order, z] : s.phasors()) {
        ordered_json h;
        h["order"] = order;
        h["rms"] = std::abs(z);
        h["phase_deg"] = degrees(std::arg(z));
        arr.push_back(std::move(h));
    }
    return arr;
}

ordered_json orders_json(const std::set<unsigned>& s) {
    ordered_json arr = ordered_json::array();
    for (unsigned n : s) arr.push_back(n);
    return arr;
}

ordered_json analysis_json(const AnalysisReport& r) {
    ordered_json doc;
    doc["fundamental_hz"] = r.fundamental_hz;
    doc["voltage"] = spectrum_json(r.voltage);
    doc["current"] = spectrum_json(r.current);

    ordered_json part;
    part["common"] = orders_json(r.partition.common);
    part["voltage_only"] = orders_json(r.partition.voltage_only);
    part["current_only"] = orders_json(r.partition.current_only);
    doc["partition"] = std::move(part);

    ordered_json power;
    power["scalar"] = {{"active_W", r.power.active()},
                       {"reactive_signed_var", r.power.reactive_signed()}};
    ordered_json dterms = ordered_json::array();
    for (const auto& [pq, term] : r.power.distortion_terms()) {
        ordered_json t;
        t["voltage_order"] = pq.first;
        t["current_order"] = pq.second;
        t["real_VA"] = term.value.real();
        t["imag_VA"] = term.value.imag();
        t["magnitude_VA"] = std::abs(term.value);
        t["kind"] = term.linear ? "linear" : "nonlinear";
        dterms.push_back(std::move(t));
    }
    power["distortion_terms"] = std::move(dterms);
    doc["power"] = std::move(power);

    ordered_json summary;
    summary["active_W"] = r.summary.active;
    summary["reactive_signed_var"] = r.summary.reactive_signed;
    summary["reactive_abs_var"] = r.summary.reactive_abs();
    summary["distortion_VA"] = r.summary.distortion;
    summary["apparent_VA"] = r.summary.apparent;
    if (r.summary.power_factor)
        summary["power_factor"] = *r.summary.power_factor;
    else
        summary["power_factor"] = nullptr;
    doc["summary"] = std::move(summary);

    if (r.quality) {
        ordered_json q;
        q["scalar"] = {{"real", r.quality->scalar.real()},
                       {"imag", r.quality->scalar.imag()}};
        ordered_json terms = ordered_json::array();
        for (const auto& [pq, z] : r.quality->distortion_terms) {
            ordered_json t;
            t["voltage_order"] = pq.first;
            t["current_order"] = pq.second;
            t["real"] = z.real();
            t["imag"] = z.imag();
            terms.push_back(std::move(t));
        }
        q["terms"] = std::move(terms);
        q["magnitude"] = r.quality->magnitude;
        q["power_factor"] = r.quality->power_factor;
        doc["quality_index"] = std::move(q);
    } else {
        doc["quality_index"] = nullptr;
    }

    ordered_json flows = ordered_json::array();
    for (const HarmonicFlow& f : r.flows) {
        ordered_json h;
        h["order"] = f.order;
        h["active_W"] = f.active_w;
        h["reactive_var"] = f.reactive_var;
        h["reverse_flow"] = f.reverse;
        flows.push_back(std::move(h));
    }
    doc["harmonics"] = std::move(flows);
    return doc;
}

void analysis_csv(const AnalysisReport& r, std::string& out,
                  const std::string& prefix) {
    auto row = [&](const std::string& section, const std::string& key,
                   const std::string& value) {
        out += prefix + section + ',' + key + ',' + value + '\n';
    };
    row("input", "fundamental_hz", num(r.fundamental_hz));
    for (const auto& [order, z] : r.voltage.phasors()) {
        row("voltage", "order_" + std::to_string(order) + "_rms_V",
            num(std::abs(z)));
        row("voltage", "order_" + std::to_string(order) + "_phase_deg",
            num(degrees(std::arg(z))));
    }
    for (const auto& [order, z] : r.current.phasors()) {
        row("current", "order_" + std::to_string(order) + "_rms_A",
            num(std::abs(z)));
        row("current", "order_" + std::to_string(order) + "_phase_deg",
            num(degrees(std::arg(z))));
    }
    row("partition", "common", joined(r.partition.common));
    row("partition", "voltage_only", joined(r.partition.voltage_only));
    row("partition", "current_only", joined(r.partition.current_only));

    row("power", "active_W", num(r.summary.active));
    row("power", "reactive_signed_var", num(r.summary.reactive_signed));
    row("power", "reactive_abs_var", num(r.summary.reactive_abs()));
    row("power", "distortion_VA", num(r.summary.distortion));
    row("power", "apparent_VA", num(r.summary.apparent));
    if (r.summary.power_factor)
        row("power", "power_factor", num(*r.summary.power_factor));

    for (const auto& [pq, term] : r.power.distortion_terms()) {
        const std::string section = "dterm_" + pair_key(pq);
        row(section, "real_VA", num(term.value.real()));
        row(section, "imag_VA", num(term.value.imag()));
        row(section, "magnitude_VA", num(std::abs(term.value)));
        row(section, "kind", term.linear ? "linear" : "nonlinear");
    }

    if (r.quality) {
        row("quality", "scalar_real", num(r.quality->scalar.real()));
        row("quality", "scalar_imag", num(r.quality->scalar.imag()));
        row("quality", "magnitude", num(r.quality->magnitude));
        row("quality", "power_factor", num(r.quality->power_factor));
    }

    for (const HarmonicFlow& f : r.flows) {
        const std::string section = "harmonic_" + std::to_string(f.order);
        row(section, "active_W", num(f.active_w));
        row(section, "reactive_var", num(f.reactive_var));
        row(section, "direction", f.reverse ? "reverse" : "forward");
    }
}

std::string classify(const HarmonicPartition& p, unsigned order) {
    if (p.common.contains(order)) return "shared";
    if (p.voltage_only.contains(order)) return "voltage-only";
    if (p.current_only.contains(order)) return "current-only";
    return "negligible";
}

std::string analysis_table(const AnalysisReport& r) {
    std::string out;
    out += fmt("Port analysis @ %s Hz (fundamental %.6f rad/s)\n\n",
               num(r.fundamental_hz).c_str(),
               2.0 * std::numbers::pi * r.fundamental_hz);

    out += "  order |  U rms [V] | U phase [deg] |  I rms [A] | I phase "
           "[deg] | class\n";
    out += "  ------+------------+---------------+------------+------------"
           "---+-------------\n";
    std::set<unsigned> orders;
    for (const auto& [n, z] : r.voltage.phasors()) orders.insert(n);
    for (const auto& [n, z] : r.current.phasors()) orders.insert(n);
    for (unsigned n : orders) {
        const bool has_u = r.voltage.contains(n);
        const bool has_i = r.current.contains(n);
        out += fmt("  %5u | %10s | %13s | %10s | %13s | %s\n", n,
                   has_u ? fixed(r.voltage.rms_of(n), 2).c_str() : "-",
                   has_u ? fixed(degrees(r.voltage.phase_of(n)), 2).c_str()
                         : "-",
                   has_i ? fixed(r.current.rms_of(n), 2).c_str() : "-",
                   has_i ? fixed(degrees(r.current.phase_of(n)), 2).c_str()
                         : "-",
                   classify(r.partition, n).c_str());
    }
    if (orders.empty()) out += "  (no harmonics)\n";
    out += '\n';

    out += "Power multivector\n";
    out += "  scalar  " + complex_str(r.power.scalar(), 2) + "\n";
    for (const auto& [pq, term] : r.power.distortion_terms())
        out += fmt("  d(%u,%u)  %s   |.| = %s   %s\n", pq.first, pq.second,
                   complex_str(term.value, 2).c_str(),
                   fixed(std::abs(term.value), 2).c_str(),
                   term.linear ? "linear" : "nonlinear");
    out += '\n';

    out += "Magnitudes\n";
    out += "  P  = " + fixed(r.summary.active, 2) + " W\n";
    out += "  Q  = " + fixed(r.summary.reactive_signed, 2) +
           " var (signed), |Q| = " + fixed(r.summary.reactive_abs(), 2) +
           " var\n";
    out += "  D  = " + fixed(r.summary.distortion, 2) + " VA\n";
    out += "  S  = " + fixed(r.summary.apparent, 2) + " VA\n";
    if (r.summary.power_factor)
        out += "  PF = " + fixed(*r.summary.power_factor, 2) + "\n";
    if (r.quality)
        out += "  |delta| = " + fixed(r.quality->magnitude, 2) +
               "   (quality index scalar " + complex_str(r.quality->scalar, 2) +
               ")\n";
    out += '\n';

    if (!r.flows.empty()) {
        out += "Shared-harmonic flows\n";
        out += "  order |    P_n [W] |  Q_n [var] | direction\n";
        for (const HarmonicFlow& f : r.flows)
            out += fmt("  %5u | %10s | %10s | %s\n", f.order,
                       fixed(f.active_w, 2).c_str(),
                       fixed(f.reactive_var, 2).c_str(),
                       f.reverse ? "load->source" : "source->load");
        out += '\n';
    }
    return out;
}

struct ComparisonRow {
    std::string key;   // machine name
    std::string label; // table name
    int decimals;
    std::optional<double> before, after;
};

std::vector<ComparisonRow> comparison_rows(const AnalysisReport& b,
                                           const AnalysisReport& a) {
    std::vector<ComparisonRow> rows;
    rows.push_back({"I_rms_A", "I rms [A]", 3, b.current.rms(),
                    a.current.rms()});
    rows.push_back({"P_W", "P [W]", 2, b.summary.active, a.summary.active});
    rows.push_back({"Q_signed_var", "Q [var]", 2, b.summary.reactive_signed,
                    a.summary.reactive_signed});

    std::set<OrderPair> pairs;
    for (const auto& [pq, t] : b.power.distortion_terms()) pairs.insert(pq);
    for (const auto& [pq, t] : a.power.distortion_terms()) pairs.insert(pq);
    auto mag = [](const AnalysisReport& r, OrderPair pq) {
        const auto it = r.power.distortion_terms().find(pq);
        return it == r.power.distortion_terms().end() ? 0.0
                                                      : std::abs(it->second.value);
    };
    for (OrderPair pq : pairs)
        rows.push_back({"d_" + pair_key(pq) + "_VA",
                        fmt("|d(%u,%u)| [VA]", pq.first, pq.second), 2,
                        mag(b, pq), mag(a, pq)});

    rows.push_back({"D_VA", "D [VA]", 2, b.summary.distortion,
                    a.summary.distortion});
    rows.push_back({"S_VA", "S [VA]", 2, b.summary.apparent,
                    a.summary.apparent});
    auto delta = [](const AnalysisReport& r) -> std::optional<double> {
        if (r.quality) return r.quality->magnitude;
        return std::nullopt;
    };
    auto pf = [](const AnalysisReport& r) { return r.summary.power_factor; };
    rows.push_back({"delta_mag", "|delta|", 2, delta(b), delta(a)});
    rows.push_back({"PF", "PF", 2, pf(b), pf(a)});
    return rows;
}

ordered_json design_json(const CompensatorDesign& d) {
    ordered_json doc;
    doc["fundamental_rad_s"] = d.omega();
    ordered_json elements = ordered_json::array();
    for (const CompensatorElement& e : d.elements()) {
        ordered_json el;
        if (const auto* c = std::get_if<ShuntCapacitor>(&e)) {
            el["type"] = "capacitor";
            el["farads"] = c->farads;
        } else {
            const auto& b = std::get<LcBranch>(e);
            el["type"] = "lc";
            el["henries"] = b.henries;
            el["farads"] = b.farads;
            el["pole_rad_s"] = b.pole_omega();
            el["pole_multiplier"] = b.pole_omega() / d.omega();
        }
        elements.push_back(std::move(el));
    }
    doc["elements"] = std::move(elements);
    return doc;
}

std::string design_table(const CompensatorDesign& d) {
    std::string out = "Compensator design\n";
    std::size_t index = 0;
    for (const CompensatorElement& e : d.elements()) {
        ++index;
        if (const auto* c = std::get_if<ShuntCapacitor>(&e)) {
            out += fmt("  element %zu: shunt capacitor C = %s uF\n", index,
                       fixed(c->farads * 1e6, 3).c_str());
        } else {
            const auto& b = std::get<LcBranch>(e);
            out += fmt("  element %zu: series-LC branch L = %s mH, C = %s uF"
                       "  (pole at %s x fundamental)\n",
                       index, fixed(b.henries * 1e3, 3).c_str(),
                       fixed(b.farads * 1e6, 3).c_str(),
                       fixed(b.pole_omega() / d.omega(), 2).c_str());
        }
    }
    if (d.elements().empty()) out += "  (no elements)\n";
    return out;
}

} // namespace

ReportFormat parse_format(std::string_view name) {
    if (name == "table") return ReportFormat::table;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw InvalidInput("unknown format \"" + std::string(name) +
                       "\" (expected table, json or csv)");
}

AnalysisReport analyze(const CircuitFile& file) {
    return analyze(file.fundamental_hz, file.voltage_spectrum(),
                   file.current_spectrum());
}

AnalysisReport analyze(double fundamental_hz, const Spectrum& voltage,
                       const Spectrum& current) {
    PowerMultivector power = apparent_power(voltage, current);
    const PowerSummary summary = magnitudes(power, voltage, current);
    std::optional<QualityIndex> quality;
    if (summary.apparent > 0.0) {
        if (!(summary.active > 0.0))
            throw ComputationError(
                "active power " + num(summary.active) +
                " W is not positive; power factor and quality index are "
                "undefined for this port");
        quality = quality_index(power, summary);
    }

    std::vector<HarmonicFlow> flows;
    for (unsigned n : power.orders().common) {
        const std::complex<double> s_n =
            voltage.phasor(n) * std::conj(current.phasor(n));
        flows.push_back({n, s_n.real(), s_n.imag(), s_n.real() < 0.0});
    }

    HarmonicPartition partition = power.orders();
    return {fundamental_hz, voltage,       current,
            std::move(partition), std::move(power), summary,
            std::move(quality),   std::move(flows)};
}

CompensationReport compensate(const CircuitFile& file,
                              const std::optional<CompensatorSpec>& requested) {
    CompensatorSpec spec;
    if (requested) {
        spec = *requested;
        if (spec.kind == CompensatorSpec::Kind::lc &&
            spec.pole_multipliers.empty() && file.compensator &&
            file.compensator->kind == CompensatorSpec::Kind::lc)
            spec.pole_multipliers = file.compensator->pole_multipliers;
    } else if (file.compensator) {
        spec = *file.compensator;
    }

    const Spectrum voltage = file.voltage_spectrum();
    const Spectrum current = file.current_spectrum();

    CompensatorDesign design(voltage.omega());
    if (spec.kind == CompensatorSpec::Kind::capacitor) {
        design.add(spec.farads ? ShuntCapacitor{*spec.farads}
                               : optimal_shunt_capacitor(voltage, current));
    } else {
        if (spec.pole_multipliers.empty())
            throw InvalidInput(
                "lc compensation needs pole multipliers (--poles or the "
                "file's compensator block)");
        design = fixed_pole_lc_design(voltage, current, spec.pole_multipliers);
    }

    AnalysisReport before = analyze(file.fundamental_hz, voltage, current);
    AnalysisReport after =
        analyze(file.fundamental_hz, voltage,
                apply_compensator(voltage, current, design));
    return {std::move(design), std::move(before), std::move(after)};
}

std::string render(const AnalysisReport& r, ReportFormat format) {
    switch (format) {
    case ReportFormat::json:
        return analysis_json(r).dump(2) + "\n";
    case ReportFormat::csv: {
        std::string out = "section,key,value\n";
        analysis_csv(r, out, "");
        return out;
    }
    case ReportFormat::table:
        return analysis_table(r);
    }
    throw InvalidInput("unknown report format");
}

std::string render(const CompensationReport& r, ReportFormat format) {
    const std::vector<ComparisonRow> rows = comparison_rows(r.before, r.after);
    switch (format) {
    case ReportFormat::json: {
        ordered_json doc;
        doc["design"] = design_json(r.design);
        doc["before"] = analysis_json(r.before);
        doc["after"] = analysis_json(r.after);
        ordered_json comparison = ordered_json::array();
        for (const ComparisonRow& row : rows) {
            ordered_json j;
            j["quantity"] = row.key;
            j["before"] = row.before ? ordered_json(*row.before)
                                     : ordered_json(nullptr);
            j["after"] = row.after ? ordered_json(*row.after)
                                   : ordered_json(nullptr);
            comparison.push_back(std::move(j));
        }
        doc["comparison"] = std::move(comparison);
        return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::string out = "section,key,value\n";
        std::size_t index = 0;
        for (const CompensatorElement& e : r.design.elements()) {
            const std::string section = "design_" + std::to_string(index++);
            if (const auto* c = std::get_if<ShuntCapacitor>(&e)) {
                out += section + ",type,capacitor\n";
                out += section + ",farads," + num(c->farads) + '\n';
            } else {
                const auto& b = std::get<LcBranch>(e);
                out += section + ",type,lc\n";
                out += section + ",henries," + num(b.henries) + '\n';
                out += section + ",farads," + num(b.farads) + '\n';
                out += section + ",pole_multiplier," +
                       num(b.pole_omega() / r.design.omega()) + '\n';
            }
        }
        for (const ComparisonRow& row : rows) {
            if (row.before)
                out += "comparison," + row.key + "_before," +
                       num(*row.before) + '\n';
            if (row.after)
                out += "comparison," + row.key + "_after," + num(*row.after) +
                       '\n';
        }
        analysis_csv(r.before, out, "before_");
        analysis_csv(r.after, out, "after_");
        return out;
    }
    case ReportFormat::table: {
        std::string out = design_table(r.design);
        out += '\n';
        out += "Comparison\n";
        out += "  quantity        |     before |      after\n";
        out += "  ----------------+------------+-----------\n";
        for (const ComparisonRow& row : rows) {
            const std::string before =
                row.before ? fixed(*row.before, row.decimals) : "-";
            const std::string after =
                row.after ? fixed(*row.after, row.decimals) : "-";
            out += fmt("  %-15s | %10s | %10s\n", row.label.c_str(),
                       before.c_str(), after.c_str());
        }
        out += '\n';
        out += "Before (full report)\n\n" + analysis_table(r.before);
        out += "After (full report)\n\n" + analysis_table(r.after);
        return out;
    }
    }
    throw InvalidInput("unknown report format");
}

std::string waveform_csv(const CircuitFile& file, unsigned samples_per_cycle,
                         unsigned cycles) {
    if (samples_per_cycle < 2)
        throw InvalidInput("waveform needs at least 2 samples per cycle");
    if (cycles < 1) throw InvalidInput("waveform needs at least 1 cycle");
    const unsigned long long total =
        static_cast<unsigned long long>(samples_per_cycle) * cycles;
    if (total > 10'000'000ull)
        throw InvalidInput("waveform of " + std::to_string(total) +
                           " rows exceeds the ten-million-row cap");

    const Spectrum u = file.voltage_spectrum();
    const Spectrum i = file.current_spectrum();
    const double period = 1.0 / file.fundamental_hz;
    const double dt = period / samples_per_cycle;

    std::string out = "t,u,i,p\n";
    for (unsigned long long k = 0; k < total; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double uv = u.sample(t);
        const double iv = i.sample(t);
        out += num(t) + ',' + num(uv) + ',' + num(iv) + ',' + num(uv * iv) +
               '\n';
    }
    return out;
}

} // namespace gapower
