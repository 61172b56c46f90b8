#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace toporank {

// Power law 1: degree = constant * rank^exponent. The exponent (R) is
// negative for all reference data.
struct RankLaw {
    double constant; // C1 > 0
    double exponent; // R
};

// Power law 2: frequency = constant * degree^exponent. The exponent (O) is
// below -1 for all reference data.
struct FrequencyLaw {
    double constant; // C2 > 0
    double exponent; // O
};

// O = 1/R - 1. Throws DomainError when R == 0.
double rank_to_freq_exponent(double rank_exponent);

// R = 1/(O + 1). Throws DomainError when O == -1.
double freq_to_rank_exponent(double degree_exponent);

// C2 = -(1/R) * (1/C1)^(1/R). Throws DomainError when R == 0, when C1 <= 0,
// or when the result is not positive (which happens for R > 0).
double rank_to_freq_constant(const RankLaw& law);

// C1 = ((-O - 1)/C2)^(1/(O+1)). Throws DomainError when O == -1, when
// C2 <= 0, or when the base is not positive (which happens for O > -1).
double freq_to_rank_constant(const FrequencyLaw& law);

FrequencyLaw frequency_law_from(const RankLaw& law);
RankLaw rank_law_from(const FrequencyLaw& law);

// |calculated - measured| / |measured|. Throws DomainError when measured == 0.
double relative_error(double measured, double calculated);

// Probability-density bridge of the frequency law: density(s) = C2 * s^(O-1),
// a heavy-tailed density, with frequency recovered as density(d) * d over a
// unit-wide degree window (half-width fixed at 1/2).
struct DensityLaw {
    double constant; // C2 > 0
    double exponent; // O

    static constexpr double half_width = 0.5;

    double density(double s) const;
    double frequency_at(double d) const { return density(d) * d; }
};

DensityLaw density_law(const FrequencyLaw& law);

// Closed form of the cumulative weighted mass integral from 1 to d of
// s * density(s) ds = C2 * (d^(O+1) - 1)/(O+1). Note the direction: the
// value grows with d because it accumulates from the low-degree end upward,
// the complement of a rank count (which shrinks as the degree grows).
// Throws DomainError when d <= 1 or O == -1.
double rank_integral(const DensityLaw& law, double d);

// Measured exponents of four classic router/AS-level topology snapshots,
// embedded as reference values (the underlying datasets are not
// redistributable).
struct ReferenceDataset {
    std::string_view name;
    double rank_exponent;   // measured R
    double degree_exponent; // measured O
};

std::span<const ReferenceDataset> reference_datasets();

// One converted exponent next to its measured counterpart.
struct ConversionRow {
    std::string_view name;
    double measured_input;  // the exponent the conversion starts from
    double measured_target; // the independently measured value of the result
    double calculated;      // the converted exponent, full precision
    double rel_error;       // relative_error(measured_target, calculated)
};

struct ConversionTables {
    std::vector<ConversionRow> degree_exponent_rows; // R -> O per dataset
    std::vector<ConversionRow> rank_exponent_rows;   // O -> R per dataset
};

// Recomputes both conversion directions for every reference dataset.
ConversionTables conversion_tables();

} // namespace toporank
