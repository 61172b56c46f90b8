#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toporank/analysis.hpp"
#include "toporank/edge_list.hpp"
#include "toporank/errors.hpp"
#include "toporank/laws.hpp"
#include "toporank/synthetic.hpp"

namespace {

using namespace toporank;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInsufficientData = 2;
constexpr int kExitConfig = 3;

struct AnalyzeArgs {
    std::string path;
    bool exclude_d1 = false;
    int threshold = 0; // 0 = no singleton-tail filter
    std::string format = "text";
    std::string plot_dir;
};

int run_analyze(const AnalyzeArgs& args) {
    std::ifstream in(args.path);
    if (!in)
        throw ParseError("cannot open " + args.path);
    const ParseResult parsed = parse_edge_list(in);

    AnalysisOptions options;
    options.exclude_degree_one = args.exclude_d1;
    if (args.threshold > 0)
        options.singleton_tail_threshold = args.threshold;

    const AnalysisReport report = analyze(args.path, parsed, options);

    if (args.format == "csv")
        std::cout << format_csv(report);
    else if (args.format == "json")
        std::cout << format_json(report);
    else
        std::cout << format_text(report);

    if (!args.plot_dir.empty()) {
        const DegreeSequence degrees = degree_sequence(parsed.graph);
        write_analysis_plot_files(args.plot_dir, rank_table(degrees), frequency_table(degrees),
                                  report);
    }
    return kExitOk;
}

struct ConvertArgs {
    double rank_exponent = 0.0;
    double degree_exponent = 0.0;
    bool have_r = false, have_o = false;
    double c1 = 0.0, c2 = 0.0;
    bool have_c1 = false, have_c2 = false;
};

int run_convert(const ConvertArgs& args) {
    if (args.have_r == args.have_o)
        throw ConfigError("give exactly one of --R and --O");
    if (args.have_r) {
        if (args.have_c2)
            throw ConfigError("--C2 pairs with --O; use --C1 with --R");
        std::cout << "O = " << format_fixed(rank_to_freq_exponent(args.rank_exponent));
        if (args.have_c1)
            std::cout << ", C2 = "
                      << format_fixed(rank_to_freq_constant({args.c1, args.rank_exponent}));
        std::cout << "\n";
    } else {
        if (args.have_c1)
            throw ConfigError("--C1 pairs with --R; use --C2 with --O");
        std::cout << "R = " << format_fixed(freq_to_rank_exponent(args.degree_exponent));
        if (args.have_c2)
            std::cout << ", C1 = "
                      << format_fixed(freq_to_rank_constant({args.c2, args.degree_exponent}));
        std::cout << "\n";
    }
    return kExitOk;
}

std::string percent_from_displayed(double measured, double calculated) {
    // The printed percentage is recomputed from the 2-decimal exponents the
    // table shows, so every displayed row is self-consistent.
    const double shown = std::round(calculated * 100.0) / 100.0;
    const long pct = std::lround(100.0 * relative_error(measured, shown));
    return std::to_string(pct) + "%";
}

void print_conversion_table(const char* title, const char* input_header,
                            const char* target_header, const char* calculated_header,
                            const std::vector<ConversionRow>& rows) {
    std::cout << title << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-11s%12s%12s%15s%8s", "dataset", input_header,
                  target_header, calculated_header, "error");
    std::cout << line << "\n";
    for (const ConversionRow& row : rows) {
        std::snprintf(line, sizeof line, "%-11s%12s%12s%15s%8s", std::string(row.name).c_str(),
                      format_fixed(row.measured_input, 2).c_str(),
                      format_fixed(row.measured_target, 2).c_str(),
                      format_fixed(row.calculated, 2).c_str(),
                      percent_from_displayed(row.measured_target, row.calculated).c_str());
        std::cout << line << "\n";
    }
}

int run_tables() {
    const ConversionTables t = conversion_tables();
    print_conversion_table("Degree exponent O calculated from the measured rank exponent R",
                           "measured R", "measured O", "calculated O", t.degree_exponent_rows);
    std::cout << "\n";
    print_conversion_table("Rank exponent R calculated from the measured degree exponent O",
                           "measured O", "measured R", "calculated R", t.rank_exponent_rows);
    return kExitOk;
}

struct SynthArgs {
    SynthConfig cfg = reference_config();
    std::string rounding = "nearest";
    int threshold = 33;
    std::string plot_dir;
    std::string emit_file;
};

void print_fit_line(const char* label, const PowerLawFit& f) {
    std::cout << label << "slope " << format_fixed(f.slope) << ", intercept "
              << format_fixed(f.intercept) << ", correlation " << format_fixed(f.correlation)
              << ", points " << f.points_used << " (" << f.points_discarded << " discarded)\n";
}

int run_synth(SynthArgs& args) {
    if (args.rounding == "floor")
        args.cfg.rounding = Rounding::floor;
    else if (args.rounding != "nearest")
        throw ConfigError("rounding must be nearest or floor");
    validate(args.cfg);

    const RankPlotFits rank_fits = rank_plot_fits(args.cfg);
    const PowerLawFit freq_fit = frequency_plot_fit(args.cfg, args.threshold);

    std::cout << "synthetic rank-degree experiment\n"
              << "  n = " << args.cfg.n << "\n"
              << "  c1 = " << format_fixed(args.cfg.c1)
              << (args.cfg.c1 == reference_config().c1
                      ? " (assumed: the reference experiment does not record its constant)"
                      : "")
              << "\n"
              << "  exponent = " << format_fixed(args.cfg.exponent) << "\n"
              << "  rounding = " << args.rounding << "\n"
              << "  singleton tail threshold = " << args.threshold << "\n";
    print_fit_line("rank fit, all points:         ", rank_fits.all_points);
    print_fit_line("rank fit, degree > 1:         ", rank_fits.excluding_degree_one);
    {
        std::ostringstream label;
        label << "frequency fit, threshold " << args.threshold << ": ";
        std::string text = label.str();
        if (text.size() < 30)
            text.resize(30, ' ');
        print_fit_line(text.c_str(), freq_fit);
    }
    std::cout << "degree exponent implied by the generator exponent: "
              << format_fixed(rank_to_freq_exponent(args.cfg.exponent)) << "\n";

    const RankTable table = generate_rank_degree(args.cfg);
    if (!args.emit_file.empty()) {
        std::ofstream out(args.emit_file);
        if (!out)
            throw ConfigError("cannot write " + args.emit_file);
        out << "# rank\tdegree\n";
        for (const RankEntry& e : table.entries)
            out << e.rank << '\t' << e.degree << '\n';
    }
    if (!args.plot_dir.empty()) {
        const std::filesystem::path dir(args.plot_dir);
        std::filesystem::create_directories(dir);
        const auto rank_points = rank_plot_points(table);
        const FrequencyTable freqs = frequency_from_ranks(table);
        const auto freq_points = frequency_plot_points(freqs);
        write_points_file(dir / "rank_points.tsv", rank_points);
        write_fit_line_file(dir / "rank_fit_all.tsv", rank_fits.all_points, 1.0,
                            static_cast<double>(args.cfg.n));
        write_fit_line_file(dir / "rank_fit_degree_gt1.tsv", rank_fits.excluding_degree_one, 1.0,
                            static_cast<double>(args.cfg.n));
        write_points_file(dir / "frequency_points.tsv", freq_points);
        write_fit_line_file(dir / "frequency_fit.tsv", freq_fit, freq_points.front().x,
                            freq_points.back().x);
    }
    return kExitOk;
}

int run_errorsim(const ErrorSimConfig& cfg) {
    const ErrorSimReport report = run_error_sim(cfg);
    std::cout << "error-propagation simulation\n"
              << "  epsilon = " << format_fixed(cfg.epsilon) << " (relative rank noise)\n"
              << "  eta = " << format_fixed(cfg.eta) << " (relative frequency noise)\n"
              << "  trials = " << cfg.trials << ", seed = " << cfg.seed
              << ", n_degrees = " << cfg.n_degrees << "\n"
              << "rank path:      mean |degree-exponent error| = "
              << format_fixed(report.mean_abs_error_o_from_r)
              << " (rejected trials: " << report.rejected_rank_path << ")\n"
              << "frequency path: mean |rank-exponent error|   = "
              << format_fixed(report.mean_abs_error_r_from_o)
              << " (rejected trials: " << report.rejected_frequency_path << ")\n";
    if (report.mean_abs_error_o_from_r < report.mean_abs_error_r_from_o)
        std::cout << "better estimate: rank path (a local difference beats an accumulated sum)\n";
    else if (report.mean_abs_error_o_from_r > report.mean_abs_error_r_from_o)
        std::cout << "better estimate: frequency path\n";
    else
        std::cout << "better estimate: tie\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-law analysis of network topology degree data"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "fit both power laws to an edge-list file");
    analyze_cmd->add_option("path", analyze_args.path, "edge-list file")->required();
    analyze_cmd->add_flag("--exclude-d1", analyze_args.exclude_d1,
                          "drop degree-1 points from both fits");
    analyze_cmd->add_option("--threshold", analyze_args.threshold,
                            "drop frequency-1 points above this degree from the frequency fit");
    analyze_cmd->add_option("--format", analyze_args.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    analyze_cmd->add_option("--plot-data", analyze_args.plot_dir,
                            "directory for log10 plot-data files");

    ConvertArgs convert_args;
    CLI::App* convert_cmd =
        app.add_subcommand("convert", "convert exponents and constants between the two laws");
    CLI::Option* opt_r = convert_cmd->add_option("--R", convert_args.rank_exponent,
                                                 "rank exponent to convert");
    CLI::Option* opt_o = convert_cmd->add_option("--O", convert_args.degree_exponent,
                                                 "degree exponent to convert");
    CLI::Option* opt_c1 =
        convert_cmd->add_option("--C1", convert_args.c1, "rank-law constant (with --R)");
    CLI::Option* opt_c2 =
        convert_cmd->add_option("--C2", convert_args.c2, "frequency-law constant (with --O)");

    app.add_subcommand("tables", "print the reference exponent-conversion tables");

    SynthArgs synth_args;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "discretized power-law generation and fitting experiment");
    synth_cmd->add_option("--n", synth_args.cfg.n, "number of ranks");
    synth_cmd->add_option("--c1", synth_args.cfg.c1, "generator constant");
    synth_cmd->add_option("--r", synth_args.cfg.exponent, "generator exponent");
    synth_cmd->add_option("--rounding", synth_args.rounding, "nearest or floor")
        ->check(CLI::IsMember({"nearest", "floor"}));
    synth_cmd->add_option("--threshold", synth_args.threshold,
                          "singleton-tail threshold for the frequency fit");
    synth_cmd->add_option("--plot-data", synth_args.plot_dir,
                          "directory for log10 plot-data files");
    synth_cmd->add_option("--emit-graphless", synth_args.emit_file,
                          "write the generated rank-degree table to this file");

    ErrorSimConfig errorsim_cfg;
    CLI::App* errorsim_cmd =
        app.add_subcommand("errorsim", "compare error propagation through the two estimation routes");
    errorsim_cmd->add_option("--epsilon", errorsim_cfg.epsilon, "relative rank-noise magnitude");
    errorsim_cmd->add_option("--eta", errorsim_cfg.eta, "relative frequency-noise magnitude");
    errorsim_cmd->add_option("--trials", errorsim_cfg.trials, "number of trials");
    errorsim_cmd->add_option("--seed", errorsim_cfg.seed, "random seed");
    errorsim_cmd->add_option("--ndegrees", errorsim_cfg.n_degrees,
                             "number of out-degrees in the integration grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (analyze_cmd->parsed())
            return run_analyze(analyze_args);
        if (convert_cmd->parsed()) {
            convert_args.have_r = opt_r->count() > 0;
            convert_args.have_o = opt_o->count() > 0;
            convert_args.have_c1 = opt_c1->count() > 0;
            convert_args.have_c2 = opt_c2->count() > 0;
            return run_convert(convert_args);
        }
        if (synth_cmd->parsed())
            return run_synth(synth_args);
        if (errorsim_cmd->parsed())
            return run_errorsim(errorsim_cfg);
        return run_tables();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientData;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
