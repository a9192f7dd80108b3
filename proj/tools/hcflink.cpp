#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string output;
    std::string format = "csv";
    std::string include_rbs;
    std::optional<double> target_tbps;
    std::vector<double> levels;
    std::string trx_table;
    std::string field;
};

void add_common_options(CLI::App& sub, Options& opts, bool contour) {
    sub.add_option("--config", opts.config_path, "Configuration file (sectioned key = value, or JSON)");
    sub.add_option("--output", opts.output, "Output path (default: stdout)");
    sub.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub.add_option("--include-rbs", opts.include_rbs, "Include Rayleigh backscattering in the GSNR")
        ->check(CLI::IsMember({"true", "false"}));
    sub.add_option("--target-tbps", opts.target_tbps, "Target cable throughput per direction (Tb/s)");
    sub.add_option("--trx-table", opts.trx_table, "Tabulated transceiver curve (gsnr_db,net_rate_gbps per line)");
    if (contour) {
        sub.add_option("--levels", opts.levels, "Contour levels")->delimiter(',');
        sub.add_option("--field", opts.field, "Contoured field")->check(CLI::IsMember({"gsnr", "throughput"}));
    }
}

void print_error(const nlohmann::ordered_json& doc) { std::cerr << doc.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    using namespace hcflink::cli;

    CLI::App app{"Link budget and design-space explorer for bidirectional hollow-core submarine cables"};
    app.require_subcommand(1);

    Options opts;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"budget", "GSNR breakdown and cable throughput at the configured operating point"},
        {"contour", "GSNR/throughput grid over fiber loss and EDFA power, with contour lines"},
        {"span-curve", "Required EDFA power versus span length for a throughput target"},
        {"rbs", "Rayleigh backscattering enhancement, power and GSNR per fiber loss"},
        {"powerfeed", "Electrical power drawn by cable and repeaters"},
        {"latency", "Propagation latency over hollow-core and solid-core fiber"},
    };
    for (const auto& [name, help] : commands) {
        add_common_options(*app.add_subcommand(name, help), opts, name == "contour");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error({{"error", {{"kind", "usage"}, {"message", e.what()}, {"exit_code", kConfigError}}}});
        return kConfigError;
    }

    try {
        const Command command = command_from_string(app.get_subcommands().front()->get_name());
        const Format format = format_from_string(opts.format);
        const RunConfig config = opts.config_path.empty() ? RunConfig{} : parse_config(read_file(opts.config_path));

        Flags flags;
        if (!opts.include_rbs.empty()) flags.include_rbs = opts.include_rbs == "true";
        flags.target_tbps = opts.target_tbps;
        if (!opts.levels.empty()) flags.levels = opts.levels;
        if (!opts.trx_table.empty()) flags.trx_table = opts.trx_table;
        if (!opts.field.empty()) flags.field = opts.field;

        const Report report = run_command(command, config, flags);
        write_outputs(report, format, opts.output);
        if (nothing_solved(report)) {
            print_error({{"error",
                          {{"kind", "infeasible"},
                           {"message", "no span length reaches the throughput target inside the power bracket"},
                           {"exit_code", kInfeasible}}}});
            return kInfeasible;
        }
        return kSuccess;
    } catch (...) {
        const auto [code, doc] = describe_current_exception();
        print_error(doc);
        return code;
    }
}
