#include "toporank/synthetic.hpp"

#include <cmath>
#include <random>
#include <string>

#include "toporank/errors.hpp"
#include "toporank/laws.hpp"

namespace toporank {

namespace {

double discretize(double value, Rounding rounding) {
    const double rounded =
        rounding == Rounding::nearest ? std::floor(value + 0.5) : std::floor(value);
    return std::max(rounded, 1.0);
}

} // namespace

SynthConfig reference_config() {
    return SynthConfig{2000, 1000.0, -1.0, Rounding::nearest};
}

void validate(const SynthConfig& cfg) {
    if (cfg.n < 1)
        throw ConfigError("n must be at least 1");
    if (!(cfg.c1 > 0.0))
        throw ConfigError("c1 must be positive");
    if (!(cfg.exponent < 0.0))
        throw ConfigError("exponent must be negative");
    // Slack of a few ulp so configurations sitting exactly on the boundary
    // (c1 = n/2 with exponent -1) are not rejected by rounding noise.
    if (cfg.rounding == Rounding::nearest &&
        cfg.c1 * std::pow(static_cast<double>(cfg.n), cfg.exponent) < 0.5 - 1e-9)
        throw ConfigError("c1 * n^exponent is below 0.5: the smallest degree would "
                          "discretize to 0");
}

RankTable generate_rank_degree(const SynthConfig& cfg) {
    validate(cfg);
    RankTable t;
    t.entries.reserve(static_cast<std::size_t>(cfg.n));
    for (int r = 1; r <= cfg.n; ++r) {
        const double continuous = cfg.c1 * std::pow(static_cast<double>(r), cfg.exponent);
        t.entries.push_back({r, static_cast<int>(discretize(continuous, cfg.rounding))});
    }
    return t;
}

std::vector<FitPoint> continuous_rank_degree(const SynthConfig& cfg) {
    validate(cfg);
    std::vector<FitPoint> points;
    points.reserve(static_cast<std::size_t>(cfg.n));
    for (int r = 1; r <= cfg.n; ++r) {
        const double rank = static_cast<double>(r);
        points.push_back({rank, cfg.c1 * std::pow(rank, cfg.exponent)});
    }
    return points;
}

RankPlotFits rank_plot_fits(const SynthConfig& cfg) {
    const RankTable table = generate_rank_degree(cfg);
    std::vector<FitPoint> points;
    points.reserve(table.size());
    for (const RankEntry& e : table.entries)
        points.push_back({static_cast<double>(e.rank), static_cast<double>(e.degree)});

    RankPlotFits fits;
    fits.all_points = fit_loglog(points);
    FitFilter exclude_d1;
    exclude_d1.exclude_degree_one = true;
    fits.excluding_degree_one = fit_loglog(points, exclude_d1, DegreeAxis::y);
    return fits;
}

PowerLawFit frequency_plot_fit(const SynthConfig& cfg, int singleton_tail_threshold) {
    const FrequencyTable freqs = frequency_from_ranks(generate_rank_degree(cfg));
    std::vector<FitPoint> points;
    points.reserve(freqs.size());
    for (const FrequencyEntry& e : freqs.entries)
        points.push_back({static_cast<double>(e.degree), static_cast<double>(e.count)});

    FitFilter filter;
    filter.singleton_tail_threshold = singleton_tail_threshold;
    return fit_loglog(points, filter, DegreeAxis::x);
}

namespace {

// Uniform in [-1, 1], built directly from the engine's 64-bit output so the
// stream does not depend on the standard library's distribution details.
double symmetric_uniform(std::mt19937_64& eng) {
    return 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
}

std::mt19937_64 trial_engine(std::uint64_t seed, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

// OLS slope on (log10 x, log10 y) over points with positive y, skipping the
// rest; returns false when fewer than two such points survive. The error
// simulation filters its own reconstructed values (a log axis cannot carry
// them), unlike fit_loglog, which treats nonpositive input as a caller bug.
bool slope_of_positive(const std::vector<FitPoint>& pts, double& slope) {
    double mean_x = 0.0, mean_y = 0.0;
    std::size_t n = 0;
    for (const FitPoint& p : pts) {
        if (!(p.y > 0.0))
            continue;
        mean_x += std::log10(p.x);
        mean_y += std::log10(p.y);
        ++n;
    }
    if (n < 2)
        return false;
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double var_x = 0.0, cov = 0.0;
    for (const FitPoint& p : pts) {
        if (!(p.y > 0.0))
            continue;
        const double dx = std::log10(p.x) - mean_x;
        const double dy = std::log10(p.y) - mean_y;
        var_x += dx * dx;
        cov += dx * dy;
    }
    if (var_x == 0.0)
        return false;
    slope = cov / var_x;
    return std::isfinite(slope);
}

} // namespace

ErrorSimReport run_error_sim(const ErrorSimConfig& cfg) {
    if (cfg.trials < 1)
        throw ConfigError("trials must be at least 1");
    if (cfg.n_degrees < 2)
        throw ConfigError("n_degrees must be at least 2");
    if (cfg.epsilon < 0.0 || cfg.eta < 0.0)
        throw ConfigError("noise scales must be nonnegative");

    // Exact base pair: rank law with exponent -1, frequency law derived from
    // it. The constant cancels out of every slope, so its value is
    // immaterial; 2000 keeps printed intermediates on a familiar scale.
    const RankLaw rank_law{2000.0, -1.0};
    const double o_true = rank_to_freq_exponent(rank_law.exponent); // -2
    const double r_true = rank_law.exponent;

    const int n = cfg.n_degrees;
    // True rank curve sampled at the unit-window boundaries d +/- 1/2; the
    // window difference is the exact frequency of the degree-d group.
    std::vector<double> boundary(static_cast<std::size_t>(n) + 1);
    std::vector<double> freq_true(static_cast<std::size_t>(n));
    const double inv_r = 1.0 / rank_law.exponent;
    const double scale = std::pow(1.0 / rank_law.constant, inv_r);
    for (int k = 0; k <= n; ++k)
        boundary[static_cast<std::size_t>(k)] = scale * std::pow(k + 0.5, inv_r);
    for (int d = 1; d <= n; ++d)
        freq_true[static_cast<std::size_t>(d - 1)] =
            boundary[static_cast<std::size_t>(d - 1)] - boundary[static_cast<std::size_t>(d)];

    ErrorSimReport report;
    report.trials = cfg.trials;
    double sum_err_o = 0.0, sum_err_r = 0.0;
    int valid_o = 0, valid_r = 0;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 eng = trial_engine(cfg.seed, trial);

        // Rank path: noisy rank measurements, differenced to frequencies.
        std::vector<FitPoint> freq_points(static_cast<std::size_t>(n));
        {
            std::vector<double> noisy(boundary.size());
            for (std::size_t k = 0; k < boundary.size(); ++k)
                noisy[k] = boundary[k] * (1.0 + cfg.epsilon * symmetric_uniform(eng));
            for (int d = 1; d <= n; ++d)
                freq_points[static_cast<std::size_t>(d - 1)] = {
                    static_cast<double>(d),
                    noisy[static_cast<std::size_t>(d - 1)] - noisy[static_cast<std::size_t>(d)]};
        }
        double o_fit = 0.0;
        if (slope_of_positive(freq_points, o_fit)) {
            sum_err_o += std::abs(o_fit - o_true);
            ++valid_o;
        } else {
            ++report.rejected_rank_path;
        }

        // Frequency path: noisy frequency measurements, cumulatively summed
        // from the smallest degree upward. The running sum is subtracted from
        // the known total (the rank at the lowest boundary), which
        // reconstructs the rank at each window boundary; the accumulated
        // noise of every earlier term rides along.
        std::vector<FitPoint> rank_points(static_cast<std::size_t>(n));
        {
            double running = 0.0;
            for (int d = 1; d <= n; ++d) {
                running += freq_true[static_cast<std::size_t>(d - 1)] *
                           (1.0 + cfg.eta * symmetric_uniform(eng));
                rank_points[static_cast<std::size_t>(d - 1)] = {d + 0.5, boundary[0] - running};
            }
        }
        double integral_slope = 0.0;
        if (slope_of_positive(rank_points, integral_slope) && integral_slope != 0.0) {
            // The reconstructed curve's slope estimates O + 1; inverting it
            // is the frequency-to-rank exponent conversion.
            const double r_fit = 1.0 / integral_slope;
            sum_err_r += std::abs(r_fit - r_true);
            ++valid_r;
        } else {
            ++report.rejected_frequency_path;
        }
    }

    report.mean_abs_error_o_from_r = valid_o ? sum_err_o / valid_o : 0.0;
    report.mean_abs_error_r_from_o = valid_r ? sum_err_r / valid_r : 0.0;
    return report;
}

} // namespace toporank
