#include "toporank/laws.hpp"

#include <array>
#include <cmath>

#include "toporank/errors.hpp"

namespace toporank {

double rank_to_freq_exponent(double rank_exponent) {
    if (rank_exponent == 0.0)
        throw DomainError("rank exponent 0 is singular: no degree exponent corresponds to it");
    return 1.0 / rank_exponent - 1.0;
}

double freq_to_rank_exponent(double degree_exponent) {
    if (degree_exponent == -1.0)
        throw DomainError("degree exponent -1 is singular: no rank exponent corresponds to it");
    return 1.0 / (degree_exponent + 1.0);
}

double rank_to_freq_constant(const RankLaw& law) {
    if (law.constant <= 0.0)
        throw DomainError("rank-law constant must be positive");
    if (law.exponent == 0.0)
        throw DomainError("rank exponent 0 is singular");
    const double c2 =
        -(1.0 / law.exponent) * std::pow(1.0 / law.constant, 1.0 / law.exponent);
    if (!(c2 > 0.0))
        throw DomainError("converted constant is not positive (rank exponent must be negative)");
    return c2;
}

double freq_to_rank_constant(const FrequencyLaw& law) {
    if (law.constant <= 0.0)
        throw DomainError("frequency-law constant must be positive");
    if (law.exponent == -1.0)
        throw DomainError("degree exponent -1 is singular");
    const double base = (-law.exponent - 1.0) / law.constant;
    if (!(base > 0.0))
        throw DomainError("conversion base is not positive (degree exponent must be below -1)");
    return std::pow(base, 1.0 / (law.exponent + 1.0));
}

FrequencyLaw frequency_law_from(const RankLaw& law) {
    return {rank_to_freq_constant(law), rank_to_freq_exponent(law.exponent)};
}

RankLaw rank_law_from(const FrequencyLaw& law) {
    return {freq_to_rank_constant(law), freq_to_rank_exponent(law.exponent)};
}

double relative_error(double measured, double calculated) {
    if (measured == 0.0)
        throw DomainError("relative error against a measured value of 0 is undefined");
    return std::abs(calculated - measured) / std::abs(measured);
}

double DensityLaw::density(double s) const {
    return constant * std::pow(s, exponent - 1.0);
}

DensityLaw density_law(const FrequencyLaw& law) {
    return {law.constant, law.exponent};
}

double rank_integral(const DensityLaw& law, double d) {
    if (!(d > 1.0))
        throw DomainError("the integral runs from 1, so d must exceed 1");
    if (law.exponent == -1.0)
        throw DomainError("degree exponent -1 needs the logarithmic antiderivative, "
                          "which no dataset reaches; rejected");
    const double p = law.exponent + 1.0;
    return law.constant * (std::pow(d, p) - 1.0) / p;
}

std::span<const ReferenceDataset> reference_datasets() {
    static constexpr std::array<ReferenceDataset, 4> rows{{
        {"Int-11-97", -0.81, -2.15},
        {"Int-04-98", -0.82, -2.16},
        {"Int-12-98", -0.74, -2.20},
        {"Rout-95", -0.48, -2.48},
    }};
    return rows;
}

ConversionTables conversion_tables() {
    ConversionTables t;
    for (const ReferenceDataset& ds : reference_datasets()) {
        const double o = rank_to_freq_exponent(ds.rank_exponent);
        t.degree_exponent_rows.push_back(
            {ds.name, ds.rank_exponent, ds.degree_exponent, o, relative_error(ds.degree_exponent, o)});
        const double r = freq_to_rank_exponent(ds.degree_exponent);
        t.rank_exponent_rows.push_back(
            {ds.name, ds.degree_exponent, ds.rank_exponent, r, relative_error(ds.rank_exponent, r)});
    }
    return t;
}

} // namespace toporank
