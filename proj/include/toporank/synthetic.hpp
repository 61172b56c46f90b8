#pragma once

#include <cstdint>

#include "toporank/fit.hpp"
#include "toporank/tables.hpp"

namespace toporank {

enum class Rounding { nearest, floor };

// Configuration for discretized power-law rank-degree data: for each rank
// r = 1..n the degree is c1 * r^exponent rounded to an integer.
struct SynthConfig {
    int n = 2000;
    double c1 = 1000.0;
    double exponent = -1.0;
    Rounding rounding = Rounding::nearest;
};

// The configuration that reproduces the reference slopes -0.85 / -0.97 /
// -2.01: 2000 ranks, exponent -1, nearest rounding, c1 = 1000. c1 is an
// assumption (the reference experiment does not record it); n/2 is the
// smallest constant for which every rank still discretizes to degree >= 1,
// and it is the value that lands all three slopes on the reference numbers.
SynthConfig reference_config();

// Throws ConfigError when n < 1, c1 <= 0, exponent >= 0, or (under nearest
// rounding) when c1 * n^exponent < 0.5, i.e. when the smallest degree would
// discretize below 1.
void validate(const SynthConfig& cfg);

// Degrees round(c1 * r^exponent) for r = 1..n, clamped to >= 1. The result
// satisfies every RankTable invariant: the continuous curve is decreasing
// and both rounding modes are monotone.
RankTable generate_rank_degree(const SynthConfig& cfg);

// The same points without rounding (real-valued degrees). Fitting these
// recovers the exponent exactly; discretization is the sole source of bias.
std::vector<FitPoint> continuous_rank_degree(const SynthConfig& cfg);

// Log-log fits of the rank-degree data, with and without the degree-1 tail.
struct RankPlotFits {
    PowerLawFit all_points;
    PowerLawFit excluding_degree_one;
};

RankPlotFits rank_plot_fits(const SynthConfig& cfg);

// Builds the frequency table of the generated data via frequency_from_ranks
// and fits it with the singleton-tail filter at the given threshold.
PowerLawFit frequency_plot_fit(const SynthConfig& cfg, int singleton_tail_threshold);

// Error-propagation comparison between the two estimation routes.
//
// Each trial starts from the exact law pair (rank exponent -1, its derived
// frequency law) sampled on the degree grid 1..n_degrees and perturbs
// measurements with uniform noise proportional to each value:
//   rank path      measure ranks with noise of relative magnitude epsilon,
//                  difference adjacent unit-window boundaries to frequency
//                  estimates, fit the degree exponent;
//   frequency path measure frequencies with noise of relative magnitude eta,
//                  cumulatively sum them from the smallest degree upward
//                  (anchored at the known total), fit the reconstructed rank
//                  curve and invert its slope into a rank exponent.
// A trial whose surviving points cannot support a fit is rejected and
// counted. Deterministic given the seed; trial streams are derived from
// (seed, trial index), so the report does not depend on execution order.
struct ErrorSimConfig {
    double epsilon = 0.5; // rank-noise magnitude, relative to each rank value
    double eta = 0.5;     // frequency-noise magnitude, relative to each frequency value
    int trials = 200;
    std::uint64_t seed = 1;
    int n_degrees = 50; // number of out-degrees in the integration grid
};

struct ErrorSimReport {
    double mean_abs_error_o_from_r = 0.0; // mean |fitted O - true O| over valid trials
    double mean_abs_error_r_from_o = 0.0; // mean |fitted R - true R| over valid trials
    int trials = 0;
    int rejected_rank_path = 0;
    int rejected_frequency_path = 0;
};

// Throws ConfigError when trials < 1, n_degrees < 2, or a noise scale is
// negative.
ErrorSimReport run_error_sim(const ErrorSimConfig& cfg);

} // namespace toporank
