#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dualrail: heralded dual-rail transfer of polaritonic qubits "
                 "through coupled-cavity arrays"};
    app.require_subcommand(1);

    std::string config_path;
    std::string plot_input, plot_x, plot_y, plot_group, plot_output = "series.csv";

    auto* simulate = app.add_subcommand("simulate", "run the transfer protocol from a config");
    simulate->add_option("-c,--config", config_path, "config file")->required();

    auto* sweep = app.add_subcommand("sweep", "chain-length sweep into a CSV table");
    sweep->add_option("-c,--config", config_path, "config file")->required();

    auto* fit = app.add_subcommand("fit", "scaling-law fit (runs the sweep, then fits)");
    fit->add_option("-c,--config", config_path, "config file")->required();

    auto* validate = app.add_subcommand("validate",
                                        "exact-model validation battery (leakage, calibration, "
                                        "blockade, overlap)");
    validate->add_option("-c,--config", config_path, "config file")->required();

    auto* schedule_opt =
        app.add_subcommand("schedule-opt", "greedy measurement-schedule optimization");
    schedule_opt->add_option("-c,--config", config_path, "config file")->required();

    auto* plot = app.add_subcommand("plot", "tidy (group, x, y) series from a CSV table");
    plot->add_option("-i,--input", plot_input, "input CSV")->required();
    plot->add_option("-x", plot_x, "x column")->required();
    plot->add_option("-y", plot_y, "y column")->required();
    plot->add_option("-g,--group", plot_group, "group column (optional)");
    plot->add_option("-o,--output", plot_output, "output CSV");

    CLI11_PARSE(app, argc, argv);

    using namespace dualrail::cli;
    if (*simulate) return run_command("simulate", cmd_simulate, config_path);
    if (*sweep) return run_command("sweep", cmd_sweep, config_path);
    if (*fit) return run_command("fit", cmd_fit, config_path);
    if (*validate) return run_command("validate", cmd_validate, config_path);
    if (*schedule_opt) return run_command("schedule-opt", cmd_schedule_opt, config_path);
    if (*plot) {
        try {
            return cmd_plot(plot_input, plot_x, plot_y, plot_group, plot_output);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: plot: %s\n", e.what());
            return 1;
        }
    }
    return 1;
}
