#include "gapower/cli.hpp"

#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "gapower/circuit_file.hpp"
#include "gapower/errors.hpp"
#include "gapower/report.hpp"

namespace gapower {

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Multivectorial apparent-power analysis of a single port "
                 "under nonsinusoidal conditions"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "table";
    std::string mode;
    std::vector<double> poles;
    unsigned samples = 512;
    unsigned cycles = 1;

    const auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "circuit description (JSON)")
            ->required();
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format (default table)")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze",
        "Power multivector, magnitudes and quality index of one port");
    add_file(analyze_cmd);
    add_format(analyze_cmd);

    CLI::App* compensate_cmd = app.add_subcommand(
        "compensate",
        "Design a passive shunt compensator and compare before/after");
    add_file(compensate_cmd);
    add_format(compensate_cmd);
    compensate_cmd->add_option("--mode", mode, "compensator kind: cap | lc")
        ->check(CLI::IsMember({"cap", "lc"}));
    compensate_cmd
        ->add_option("--poles", poles,
                     "LC pole multipliers k1,k2,... in units of the "
                     "fundamental (implies --mode lc)")
        ->delimiter(',');

    CLI::App* waveform_cmd =
        app.add_subcommand("waveform", "Sampled u(t), i(t), p(t) as CSV");
    add_file(waveform_cmd);
    waveform_cmd->add_option("--samples", samples,
                             "samples per fundamental cycle (default 512)");
    waveform_cmd->add_option("--cycles", cycles,
                             "number of cycles (default 1)");

    // CLI11's vector overload consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto selected = app.get_subcommands();
        out << (selected.empty() ? app.help() : selected.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const CircuitFile circuit = load_circuit(file);
        if (*analyze_cmd) {
            out << render(analyze(circuit), parse_format(format));
        } else if (*compensate_cmd) {
            std::optional<CompensatorSpec> requested;
            if (!mode.empty() || !poles.empty()) {
                if (mode == "cap" && !poles.empty())
                    throw InvalidInput("--poles only applies to --mode lc");
                CompensatorSpec spec;
                spec.kind = mode == "cap" ? CompensatorSpec::Kind::capacitor
                                          : CompensatorSpec::Kind::lc;
                spec.pole_multipliers = poles;
                requested = std::move(spec);
            }
            out << render(compensate(circuit, requested),
                          parse_format(format));
        } else {
            out << waveform_csv(circuit, samples, cycles);
        }
        return 0;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleDesign& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace gapower
