#include "gapower/circuit_file.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gapower/errors.hpp"

namespace gapower {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw InvalidInput(what); }

void require_known_keys(const json& obj, const char* where,
                        std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok)
            fail(std::string("unknown key \"") + key + "\" in " + where);
    }
}

double require_finite_number(const json& v, const std::string& what) {
    if (!v.is_number())
        fail(what + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(what + " must be finite");
    return x;
}

std::vector<CircuitHarmonic> parse_harmonics(const json& arr,
                                             const std::string& list_name) {
    if (!arr.is_array())
        fail("\"" + list_name + "\" must be an array of harmonics");
    std::vector<CircuitHarmonic> out;
    std::set<unsigned> seen;
    for (const json& h : arr) {
        if (!h.is_object())
            fail("every " + list_name + " harmonic must be an object");
        require_known_keys(h, (list_name + " harmonic").c_str(),
                           {"order", "rms", "phase_deg"});
        for (const char* key : {"order", "rms", "phase_deg"})
            if (!h.contains(key))
                fail(list_name + " harmonic is missing \"" + key + "\"");

        if (!h["order"].is_number_integer() || h["order"].get<long long>() < 1)
            fail(list_name + " harmonic order must be a positive integer");
        const auto order = h["order"].get<unsigned>();
        if (!seen.insert(order).second)
            fail("duplicate " + list_name + " order " + std::to_string(order));

        const double rms = require_finite_number(
            h["rms"], list_name + " rms at order " + std::to_string(order));
        if (rms <= 0.0)
            fail(list_name + " rms at order " + std::to_string(order) +
                 " must be positive");
        const double phase = require_finite_number(
            h["phase_deg"],
            list_name + " phase at order " + std::to_string(order));
        out.push_back({order, rms, phase});
    }
    return out;
}

CompensatorSpec parse_compensator(const json& obj) {
    if (!obj.is_object()) fail("\"compensator\" must be an object");
    if (!obj.contains("type") || !obj["type"].is_string())
        fail("compensator needs a \"type\" string");
    const std::string type = obj["type"].get<std::string>();

    CompensatorSpec spec;
    if (type == "capacitor") {
        require_known_keys(obj, "compensator", {"type", "farads"});
        spec.kind = CompensatorSpec::Kind::capacitor;
        if (obj.contains("farads")) {
            const double f = require_finite_number(obj["farads"],
                                                   "compensator farads");
            if (f < 0.0) fail("compensator farads must be >= 0");
            spec.farads = f;
        }
    } else if (type == "lc") {
        require_known_keys(obj, "compensator", {"type", "pole_multipliers"});
        spec.kind = CompensatorSpec::Kind::lc;
        if (obj.contains("pole_multipliers")) {
            if (!obj["pole_multipliers"].is_array())
                fail("\"pole_multipliers\" must be an array of numbers");
            for (const json& k : obj["pole_multipliers"]) {
                const double v = require_finite_number(k, "pole multiplier");
                if (v <= 0.0) fail("pole multipliers must be positive");
                spec.pole_multipliers.push_back(v);
            }
        }
    } else {
        fail("unknown compensator type \"" + type +
             "\" (expected \"capacitor\" or \"lc\")");
    }
    return spec;
}

std::vector<HarmonicComponent> to_components(
    const std::vector<CircuitHarmonic>& list) {
    std::vector<HarmonicComponent> out;
    out.reserve(list.size());
    for (const CircuitHarmonic& h : list)
        out.push_back({h.order, h.rms, h.phase_deg * std::numbers::pi / 180.0});
    return out;
}

} // namespace

double CircuitFile::omega() const {
    return 2.0 * std::numbers::pi * fundamental_hz;
}

Spectrum CircuitFile::voltage_spectrum() const {
    const auto comps = to_components(voltage);
    return Spectrum(SignalKind::voltage, omega(),
                    std::span<const HarmonicComponent>(comps));
}

Spectrum CircuitFile::current_spectrum() const {
    const auto comps = to_components(current);
    return Spectrum(SignalKind::current, omega(),
                    std::span<const HarmonicComponent>(comps));
}

CircuitFile parse_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("circuit file syntax error at byte " + std::to_string(e.byte) +
             ": " + e.what());
    }
    if (!doc.is_object()) fail("circuit file must be a JSON object");
    require_known_keys(doc, "circuit file",
                       {"fundamental_hz", "voltage", "current", "compensator"});

    CircuitFile file;
    if (!doc.contains("fundamental_hz"))
        fail("circuit file needs \"fundamental_hz\"");
    file.fundamental_hz =
        require_finite_number(doc["fundamental_hz"], "fundamental_hz");
    if (file.fundamental_hz <= 0.0) fail("fundamental_hz must be positive");

    if (doc.contains("voltage"))
        file.voltage = parse_harmonics(doc["voltage"], "voltage");
    if (doc.contains("current"))
        file.current = parse_harmonics(doc["current"], "current");
    if (doc.contains("compensator"))
        file.compensator = parse_compensator(doc["compensator"]);
    return file;
}

CircuitFile load_circuit(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read circuit file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

} // namespace gapower
