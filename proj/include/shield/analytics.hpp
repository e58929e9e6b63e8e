#pragma once

#include <array>
#include <span>

#include "shield/trace_io.hpp"

namespace shield {

using HourlyHistogram = std::array<double, 24>;

// Crime records bucket by hour-of-day (plain counts, severity ignored).
HourlyHistogram hourly_histogram(std::span<const CrimeRecord> records);

// Density samples sum their counts into the matching bins.
HourlyHistogram hourly_histogram(std::span<const DensitySample> samples);

// Product-moment coefficient. Throws std::invalid_argument for length
// mismatch, fewer than 2 bins, or a constant series.
double pearson(std::span<const double> x, std::span<const double> y);

// Rank correlation (average ranks on ties); same error conditions.
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationReport {
  double pearson_r = 0.0;
  int n_bins = 24;
  int peak_crime_hour = 0;    // argmax, ties -> smallest hour
  int peak_density_hour = 0;
  HourlyHistogram crime_histogram{};
  HourlyHistogram density_histogram{};
};

CorrelationReport correlation_report(std::span<const CrimeRecord> crimes,
                                     std::span<const DensitySample> density);

}  // namespace shield
