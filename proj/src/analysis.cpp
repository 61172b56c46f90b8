#include "toporank/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "toporank/errors.hpp"
#include "toporank/laws.hpp"

namespace toporank {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1); // values that round to zero print without a sign
    return s;
}

std::vector<FitPoint> rank_plot_points(const RankTable& t) {
    std::vector<FitPoint> points;
    points.reserve(t.size());
    for (const RankEntry& e : t.entries)
        points.push_back({static_cast<double>(e.rank), static_cast<double>(e.degree)});
    return points;
}

std::vector<FitPoint> frequency_plot_points(const FrequencyTable& t) {
    std::vector<FitPoint> points;
    points.reserve(t.size());
    for (const FrequencyEntry& e : t.entries)
        points.push_back({static_cast<double>(e.degree), static_cast<double>(e.count)});
    return points;
}

AnalysisReport analyze(std::string label, const DegreeSequence& degrees,
                       const AnalysisOptions& options) {
    AnalysisReport r;
    r.label = std::move(label);
    r.options = options;
    r.nodes = degrees.size();
    r.edges = static_cast<std::size_t>(
        std::accumulate(degrees.degrees.begin(), degrees.degrees.end(), 0LL) / 2);

    const RankTable ranks = rank_table(degrees);
    const FrequencyTable freqs = frequency_table(degrees);

    FitFilter rank_filter;
    rank_filter.exclude_degree_one = options.exclude_degree_one;
    r.rank_fit = fit_loglog(rank_plot_points(ranks), rank_filter, DegreeAxis::y);

    FitFilter freq_filter;
    freq_filter.exclude_degree_one = options.exclude_degree_one;
    freq_filter.singleton_tail_threshold = options.singleton_tail_threshold;
    r.frequency_fit = fit_loglog(frequency_plot_points(freqs), freq_filter, DegreeAxis::x);

    if (r.rank_fit.slope != 0.0) {
        r.degree_exponent_from_rank = rank_to_freq_exponent(r.rank_fit.slope);
        if (r.frequency_fit.slope != 0.0)
            r.degree_exponent_rel_error =
                relative_error(r.frequency_fit.slope, *r.degree_exponent_from_rank);
    }
    if (r.frequency_fit.slope != -1.0) {
        r.rank_exponent_from_frequency = freq_to_rank_exponent(r.frequency_fit.slope);
        if (r.rank_fit.slope != 0.0)
            r.rank_exponent_rel_error =
                relative_error(r.rank_fit.slope, *r.rank_exponent_from_frequency);
    }
    return r;
}

AnalysisReport analyze(std::string label, const ParseResult& parsed,
                       const AnalysisOptions& options) {
    AnalysisReport r = analyze(std::move(label), degree_sequence(parsed.graph), options);
    r.nodes = parsed.graph.node_count();
    r.edges = parsed.graph.edge_count();
    r.self_loops_dropped = parsed.self_loops_dropped;
    r.duplicate_edges_dropped = parsed.duplicate_edges_dropped;
    return r;
}

namespace {

std::string threshold_text(const AnalysisOptions& o) {
    return o.singleton_tail_threshold ? std::to_string(*o.singleton_tail_threshold)
                                      : std::string("none");
}

void append_fit(std::ostringstream& out, const char* title, const PowerLawFit& f) {
    out << "  " << title << "\n"
        << "    slope       " << format_fixed(f.slope) << "\n"
        << "    intercept   " << format_fixed(f.intercept) << "\n"
        << "    correlation " << format_fixed(f.correlation) << "\n"
        << "    points      " << f.points_used << " used, " << f.points_discarded
        << " discarded\n";
}

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

} // namespace

std::string format_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "dataset: " << r.label << "\n"
        << "  nodes " << r.nodes << ", edges " << r.edges << " (dropped: "
        << r.self_loops_dropped << " self-loops, " << r.duplicate_edges_dropped
        << " duplicates)\n"
        << "  filters: exclude degree 1 = " << (r.options.exclude_degree_one ? "yes" : "no")
        << ", singleton tail threshold = " << threshold_text(r.options) << "\n";
    append_fit(out, "rank law (degree vs rank)", r.rank_fit);
    append_fit(out, "frequency law (frequency vs degree)", r.frequency_fit);

    auto opt_text = [](const std::optional<double>& v) {
        return v ? format_fixed(*v) : std::string("undefined (singular fitted exponent)");
    };
    auto err_text = [](const std::optional<double>& v) {
        return v ? format_fixed(*v) : std::string("n/a");
    };
    out << "  conversions\n"
        << "    degree exponent from rank fit     " << opt_text(r.degree_exponent_from_rank)
        << " (vs fitted " << format_fixed(r.frequency_fit.slope) << ", relative error "
        << err_text(r.degree_exponent_rel_error) << ")\n"
        << "    rank exponent from frequency fit  " << opt_text(r.rank_exponent_from_frequency)
        << " (vs fitted " << format_fixed(r.rank_fit.slope) << ", relative error "
        << err_text(r.rank_exponent_rel_error) << ")\n";
    return out.str();
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_fixed(*v) : std::string();
}

} // namespace

std::string format_csv(const AnalysisReport& r) {
    std::ostringstream out;
    out << "label,nodes,edges,self_loops_dropped,duplicate_edges_dropped,"
           "exclude_degree_one,singleton_tail_threshold,"
           "rank_slope,rank_intercept,rank_correlation,rank_points_used,rank_points_discarded,"
           "freq_slope,freq_intercept,freq_correlation,freq_points_used,freq_points_discarded,"
           "degree_exponent_from_rank,rank_exponent_from_frequency,"
           "degree_exponent_rel_error,rank_exponent_rel_error\n";
    out << r.label << ',' << r.nodes << ',' << r.edges << ',' << r.self_loops_dropped << ','
        << r.duplicate_edges_dropped << ',' << (r.options.exclude_degree_one ? 1 : 0) << ','
        << (r.options.singleton_tail_threshold
                ? std::to_string(*r.options.singleton_tail_threshold)
                : std::string())
        << ',' << format_fixed(r.rank_fit.slope) << ',' << format_fixed(r.rank_fit.intercept)
        << ',' << format_fixed(r.rank_fit.correlation) << ',' << r.rank_fit.points_used << ','
        << r.rank_fit.points_discarded << ',' << format_fixed(r.frequency_fit.slope) << ','
        << format_fixed(r.frequency_fit.intercept) << ','
        << format_fixed(r.frequency_fit.correlation) << ',' << r.frequency_fit.points_used << ','
        << r.frequency_fit.points_discarded << ',' << opt_field(r.degree_exponent_from_rank)
        << ',' << opt_field(r.rank_exponent_from_frequency) << ','
        << opt_field(r.degree_exponent_rel_error) << ','
        << opt_field(r.rank_exponent_rel_error) << '\n';
    return out.str();
}

std::string format_json(const AnalysisReport& r) {
    using nlohmann::json;
    // Doubles are rounded to the printed precision before insertion, so the
    // emitted file re-parses to exactly the numbers it shows.
    auto fixed = [](double v) { return round_to(v, 4); };
    auto opt_json = [&](const std::optional<double>& v) {
        return v ? json(round_to(*v, 4)) : json(nullptr);
    };
    auto fit_json = [&](const PowerLawFit& f) {
        return json{{"slope", fixed(f.slope)},
                    {"intercept", fixed(f.intercept)},
                    {"correlation", fixed(f.correlation)},
                    {"points_used", f.points_used},
                    {"points_discarded", f.points_discarded}};
    };
    json j = {
        {"label", r.label},
        {"nodes", r.nodes},
        {"edges", r.edges},
        {"dropped",
         {{"self_loops", r.self_loops_dropped}, {"duplicates", r.duplicate_edges_dropped}}},
        {"filters",
         {{"exclude_degree_one", r.options.exclude_degree_one},
          {"singleton_tail_threshold",
           r.options.singleton_tail_threshold ? json(*r.options.singleton_tail_threshold)
                                              : json(nullptr)}}},
        {"rank_fit", fit_json(r.rank_fit)},
        {"frequency_fit", fit_json(r.frequency_fit)},
        {"conversions",
         {{"degree_exponent_from_rank", opt_json(r.degree_exponent_from_rank)},
          {"rank_exponent_from_frequency", opt_json(r.rank_exponent_from_frequency)},
          {"degree_exponent_rel_error", opt_json(r.degree_exponent_rel_error)},
          {"rank_exponent_rel_error", opt_json(r.rank_exponent_rel_error)}}},
    };
    return j.dump(2) + "\n";
}

void write_points_file(const std::filesystem::path& file, std::span<const FitPoint> points) {
    std::ofstream out(file);
    if (!out)
        throw ConfigError("cannot write " + file.string());
    for (const FitPoint& p : points)
        out << format_fixed(std::log10(p.x)) << '\t' << format_fixed(std::log10(p.y)) << '\n';
}

void write_fit_line_file(const std::filesystem::path& file, const PowerLawFit& fit, double x_min,
                         double x_max) {
    std::ofstream out(file);
    if (!out)
        throw ConfigError("cannot write " + file.string());
    const double lo = std::log10(x_min);
    const double hi = std::log10(x_max);
    out << format_fixed(lo) << '\t' << format_fixed(fit.eval_log10(lo)) << '\n'
        << format_fixed(hi) << '\t' << format_fixed(fit.eval_log10(hi)) << '\n';
}

void write_analysis_plot_files(const std::filesystem::path& dir, const RankTable& ranks,
                               const FrequencyTable& freqs, const AnalysisReport& report) {
    std::filesystem::create_directories(dir);
    const auto rank_points = rank_plot_points(ranks);
    const auto freq_points = frequency_plot_points(freqs);
    write_points_file(dir / "rank_points.tsv", rank_points);
    write_fit_line_file(dir / "rank_fit.tsv", report.rank_fit, rank_points.front().x,
                        rank_points.back().x);
    write_points_file(dir / "frequency_points.tsv", freq_points);
    write_fit_line_file(dir / "frequency_fit.tsv", report.frequency_fit, freq_points.front().x,
                        freq_points.back().x);
}

} // namespace toporank
