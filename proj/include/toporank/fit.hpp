#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace toporank {

struct FitPoint {
    double x;
    double y;
};

// Which coordinate carries the degree, for filter purposes. A rank plot has
// the degree on y (x is the rank); a frequency plot has it on x.
enum class DegreeAxis { x, y };

// Data-filtering policies applied before fitting:
//  - exclude_degree_one drops points whose degree equals 1;
//  - singleton_tail_threshold drops points whose companion value equals 1
//    and whose degree exceeds the threshold (isolated high-degree outliers).
struct FitFilter {
    bool exclude_degree_one = false;
    std::optional<int> singleton_tail_threshold;
};

struct FilterResult {
    std::vector<FitPoint> kept; // order preserved
    std::size_t discarded = 0;
};

FilterResult apply_filter(std::span<const FitPoint> points, const FitFilter& filter,
                          DegreeAxis degree_axis = DegreeAxis::x);

// Ordinary least squares on (log10 x, log10 y).
struct PowerLawFit {
    double slope = 0.0;       // the fitted exponent
    double intercept = 0.0;   // log10 of the fitted constant
    double correlation = 0.0; // Pearson r of the log pairs
    std::size_t points_used = 0;
    std::size_t points_discarded = 0;

    double eval_log10(double log10_x) const noexcept { return intercept + slope * log10_x; }
};

// Fits after filtering. Throws DomainError when a surviving point has a
// nonpositive coordinate (the message identifies the point) and
// InsufficientDataError when fewer than two points survive or all surviving
// x are equal.
PowerLawFit fit_loglog(std::span<const FitPoint> points, const FitFilter& filter = {},
                       DegreeAxis degree_axis = DegreeAxis::x);

} // namespace toporank
