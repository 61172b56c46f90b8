#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "toporank/edge_list.hpp"
#include "toporank/fit.hpp"
#include "toporank/tables.hpp"

namespace toporank {

struct AnalysisOptions {
    bool exclude_degree_one = false;          // applied to both fits
    std::optional<int> singleton_tail_threshold; // applied to the frequency fit
};

// End-to-end result of parse -> degrees -> tables -> two fits -> conversion.
// The converted exponents are always recomputed from the fitted slopes; a
// field is empty when its conversion is singular at the fitted value (a
// rank slope of exactly 0, or a frequency slope of exactly -1).
struct AnalysisReport {
    std::string label;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;

    PowerLawFit rank_fit;      // log degree vs log rank
    PowerLawFit frequency_fit; // log frequency vs log degree

    std::optional<double> degree_exponent_from_rank;    // conversion of rank_fit.slope
    std::optional<double> rank_exponent_from_frequency; // conversion of frequency_fit.slope
    std::optional<double> degree_exponent_rel_error;    // vs frequency_fit.slope
    std::optional<double> rank_exponent_rel_error;      // vs rank_fit.slope

    AnalysisOptions options;
};

AnalysisReport analyze(std::string label, const ParseResult& parsed, const AnalysisOptions& options);
AnalysisReport analyze(std::string label, const DegreeSequence& degrees, const AnalysisOptions& options);

std::string format_text(const AnalysisReport& r);
std::string format_csv(const AnalysisReport& r);  // header row + one data row
std::string format_json(const AnalysisReport& r); // mirrors the report fields

// Fixed-format numeric text used by every machine-readable output.
std::string format_fixed(double v, int decimals = 4);

// Two-column tab-separated log10 plot data: one row per point.
void write_points_file(const std::filesystem::path& file, std::span<const FitPoint> points);

// Exactly two rows: the fitted line evaluated at the ends of the x range.
void write_fit_line_file(const std::filesystem::path& file, const PowerLawFit& fit,
                         double x_min, double x_max);

std::vector<FitPoint> rank_plot_points(const RankTable& t);      // x = rank, y = degree
std::vector<FitPoint> frequency_plot_points(const FrequencyTable& t); // x = degree, y = count

// Writes rank_points/rank_fit/frequency_points/frequency_fit .tsv files for
// an analysis run. Point files carry every table entry (used and discarded).
void write_analysis_plot_files(const std::filesystem::path& dir, const RankTable& ranks,
                               const FrequencyTable& freqs, const AnalysisReport& report);

} // namespace toporank
