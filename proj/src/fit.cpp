#include "toporank/fit.hpp"

#include <cmath>
#include <string>

#include "toporank/errors.hpp"

namespace toporank {

FilterResult apply_filter(std::span<const FitPoint> points, const FitFilter& filter,
                          DegreeAxis degree_axis) {
    FilterResult out;
    out.kept.reserve(points.size());
    for (const FitPoint& p : points) {
        const double degree = degree_axis == DegreeAxis::x ? p.x : p.y;
        const double value = degree_axis == DegreeAxis::x ? p.y : p.x;
        if (filter.exclude_degree_one && degree == 1.0) {
            ++out.discarded;
            continue;
        }
        if (filter.singleton_tail_threshold && value == 1.0 &&
            degree > static_cast<double>(*filter.singleton_tail_threshold)) {
            ++out.discarded;
            continue;
        }
        out.kept.push_back(p);
    }
    return out;
}

PowerLawFit fit_loglog(std::span<const FitPoint> points, const FitFilter& filter,
                       DegreeAxis degree_axis) {
    FilterResult filtered = apply_filter(points, filter, degree_axis);
    const auto& pts = filtered.kept;

    if (pts.size() < 2)
        throw InsufficientDataError("need at least 2 points to fit, have " +
                                    std::to_string(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(pts[i].x > 0.0) || !(pts[i].y > 0.0))
            throw DomainError("nonpositive coordinate at point " + std::to_string(i) + ": (" +
                              std::to_string(pts[i].x) + ", " + std::to_string(pts[i].y) + ")");
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (const FitPoint& p : pts) {
        mean_x += std::log10(p.x);
        mean_y += std::log10(p.y);
    }
    const double n = static_cast<double>(pts.size());
    mean_x /= n;
    mean_y /= n;

    double var_x = 0.0, var_y = 0.0, cov = 0.0;
    for (const FitPoint& p : pts) {
        const double dx = std::log10(p.x) - mean_x;
        const double dy = std::log10(p.y) - mean_y;
        var_x += dx * dx;
        var_y += dy * dy;
        cov += dx * dy;
    }

    if (var_x == 0.0)
        throw InsufficientDataError("all points share the same abscissa; slope is undefined");

    PowerLawFit fit;
    fit.slope = cov / var_x;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.correlation = var_y == 0.0 ? 0.0 : cov / std::sqrt(var_x * var_y);
    fit.points_used = pts.size();
    fit.points_discarded = filtered.discarded;
    return fit;
}

} // namespace toporank
