#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapower/circuit_file.hpp"
#include "gapower/compensation.hpp"
#include "gapower/power.hpp"

namespace gapower {

enum class ReportFormat { table, json, csv };

/// Maps "table" | "json" | "csv" to the enum; throws InvalidInput otherwise.
ReportFormat parse_format(std::string_view name);

/// Active/reactive flow of one shared harmonic. `reverse` flags active power
/// running load-to-source at that order.
struct HarmonicFlow {
    unsigned order;
    double active_w;
    double reactive_var;
    bool reverse;
};

/// Everything the analyze workflow reports for one port.
struct AnalysisReport {
    double fundamental_hz;
    Spectrum voltage;
    Spectrum current;
    HarmonicPartition partition;
    PowerMultivector power;
    PowerSummary summary;
    /// Present whenever apparent power is positive (active power is then
    /// positive too; analyze throws otherwise).
    std::optional<QualityIndex> quality;
    std::vector<HarmonicFlow> flows;
};

/// Full pipeline: spectra, partition, power multivector, magnitudes, quality
/// index, per-harmonic flows. An all-zero port yields a zero report. Throws
/// ComputationError when apparent power is positive but active power is not
/// (power factor undefined).
AnalysisReport analyze(const CircuitFile& file);
AnalysisReport analyze(double fundamental_hz, const Spectrum& voltage,
                       const Spectrum& current);

/// Compensator synthesis plus before/after analysis of the same port.
struct CompensationReport {
    CompensatorDesign design;
    AnalysisReport before;
    AnalysisReport after;
};

/// Resolves the compensator request, designs the element(s), applies them at
/// the port and re-analyzes.
///
/// Resolution order: `requested` (command line) wins over the file's
/// compensator block; with neither, the optimal shunt capacitor is
/// synthesized. A capacitor spec without an explicit value is synthesized
/// likewise. An LC request without pole multipliers falls back to the file's
/// poles when the file block is also LC, and otherwise throws InvalidInput.
CompensationReport compensate(const CircuitFile& file,
                              const std::optional<CompensatorSpec>& requested);

std::string render(const AnalysisReport&, ReportFormat);
std::string render(const CompensationReport&, ReportFormat);

/// CSV rows with fixed header "t,u,i,p": samples_per_cycle uniform samples
/// per fundamental period, repeated for `cycles` periods, starting at t = 0
/// with no endpoint row. Throws InvalidInput when samples_per_cycle < 2,
/// cycles < 1, or the row count would exceed ten million.
std::string waveform_csv(const CircuitFile&, unsigned samples_per_cycle,
                         unsigned cycles);

} // namespace gapower
