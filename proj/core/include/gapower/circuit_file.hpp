#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapower/spectrum.hpp"

namespace gapower {

/// Compensator requested by a circuit file or on the command line.
/// A capacitor without an explicit value means "synthesize the optimum";
/// an LC bank always needs its pole multipliers spelled out.
struct CompensatorSpec {
    enum class Kind { capacitor, lc };
    Kind kind = Kind::capacitor;
    std::optional<double> farads;          // capacitor only
    std::vector<double> pole_multipliers;  // lc only, units of the fundamental
};

/// One spectral line as written in a circuit file: phase in degrees.
struct CircuitHarmonic {
    unsigned order;
    double rms;
    double phase_deg;
};

/// Parsed circuit description: a voltage/current pair at one port plus an
/// optional compensator request. Field units match the file (Hz, degrees);
/// the spectrum accessors convert to rad/s and radians.
struct CircuitFile {
    double fundamental_hz = 0.0;
    std::vector<CircuitHarmonic> voltage;
    std::vector<CircuitHarmonic> current;
    std::optional<CompensatorSpec> compensator;

    double omega() const;
    Spectrum voltage_spectrum() const;
    Spectrum current_spectrum() const;
};

/// Parses the JSON circuit schema:
///   {
///     "fundamental_hz": 50,
///     "voltage": [{"order": 1, "rms": 200.0, "phase_deg": 0.0}, ...],
///     "current": [...],
///     "compensator": {"type": "capacitor", "farads": 3.65e-5}
///                  | {"type": "lc", "pole_multipliers": [1.2, 2.5, 4.5]}
///   }
/// Throws InvalidInput on syntax errors (with byte position), unknown keys,
/// duplicate orders, order 0, nonpositive rms or frequency, or an unknown
/// compensator type. "voltage"/"current" may be absent or empty arrays.
CircuitFile parse_circuit(std::string_view text);

/// parse_circuit applied to a file's contents. Throws InvalidInput when the
/// file cannot be read.
CircuitFile load_circuit(const std::string& path);

} // namespace gapower
