#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using namespace trapcorr;
using namespace trapcorr::cli;

void emit(const CsvTable &table, const std::string &path) {
    if (path.empty() || path == "-") {
        write_csv(std::cout, table);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot write " + path);
    write_csv(out, table);
}

CsvTable read_input(const std::string &path) {
    if (path == "-")
        return read_csv(std::cin);
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open " + path);
    return read_csv(in);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Finite-volume correlation functions of a trapped two-body "
                 "system"};
    app.require_subcommand(1);

    std::string config_path, input_path, output_path, report_path, out_dir;

    auto add_config = [&](CLI::App *sub) {
        sub->add_option("-c,--config", config_path, "YAML run configuration")
            ->required();
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("-o,--output", output_path, "output CSV (default stdout)");
    };

    auto *spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of H");
    add_config(spectrum_cmd);
    add_output(spectrum_cmd);

    auto *correlate_cmd =
        app.add_subcommand("correlate", "C(t), C0(t) and their difference");
    add_config(correlate_cmd);
    add_output(correlate_cmd);

    auto *average_cmd =
        app.add_subcommand("average", "segment averages of a correlate table");
    add_config(average_cmd);
    average_cmd->add_option("-i,--input", input_path, "correlate CSV or -")
        ->required();
    add_output(average_cmd);

    auto *fit_cmd = app.add_subcommand("fit", "fit v0 to an average table");
    add_config(fit_cmd);
    fit_cmd->add_option("-i,--input", input_path, "average CSV or -")->required();
    fit_cmd->add_option("-r,--report", report_path, "also write the JSON report here");

    auto *oracle_cmd = app.add_subcommand(
        "oracle", "weighted phase-shift integral against the closed form");
    add_config(oracle_cmd);
    add_output(oracle_cmd);

    auto *run_cmd = app.add_subcommand("run", "correlate, average and fit");
    add_config(run_cmd);
    run_cmd->add_option("-d,--out-dir", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    return guarded(
        [&] {
            const auto config = load_config(config_path);
            if (spectrum_cmd->parsed()) {
                emit(spectrum(config), output_path);
            } else if (correlate_cmd->parsed()) {
                emit(correlate(config), output_path);
            } else if (average_cmd->parsed()) {
                emit(average(config, read_input(input_path)), output_path);
            } else if (fit_cmd->parsed()) {
                const auto table = read_input(input_path);
                std::string json;
                try {
                    json = to_json(fit(config, table));
                } catch (const FitConvergenceError &e) {
                    std::ostringstream best;
                    for (double p : e.best_params())
                        best << ' ' << format_double(p);
                    std::cerr << "best parameters:" << best.str() << '\n';
                    throw;
                }
                std::cout << json;
                if (!report_path.empty()) {
                    std::ofstream out(report_path);
                    if (!out)
                        throw ArgumentError("cannot write " + report_path);
                    out << json;
                }
            } else if (oracle_cmd->parsed()) {
                emit(oracle(config), output_path);
            } else if (run_cmd->parsed()) {
                run_pipeline(config, out_dir);
            }
        },
        std::cerr);
}
