#include "shield/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace shield {

HourlyHistogram hourly_histogram(std::span<const CrimeRecord> records) {
  HourlyHistogram bins{};
  for (const auto& rec : records) {
    bins[static_cast<std::size_t>(hour_of_day(rec.timestamp_s))] += 1.0;
  }
  return bins;
}

HourlyHistogram hourly_histogram(std::span<const DensitySample> samples) {
  HourlyHistogram bins{};
  for (const auto& s : samples) {
    bins[static_cast<std::size_t>(s.hour_bin)] += static_cast<double>(s.count);
  }
  return bins;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("series lengths differ");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("need at least 2 bins");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::invalid_argument("correlation undefined for a constant series");
  }
  double r = sxy / std::sqrt(sxx * syy);
  // clamp fp excursions only; anything past 1e-12 would be a bug upstream
  return std::clamp(r, -1.0, 1.0);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("series lengths differ");
  auto rx = average_ranks(x);
  auto ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationReport correlation_report(std::span<const CrimeRecord> crimes,
                                     std::span<const DensitySample> density) {
  if (crimes.empty()) throw std::invalid_argument("crime log is empty");
  if (density.empty()) throw std::invalid_argument("density series is empty");

  CorrelationReport report;
  report.crime_histogram = hourly_histogram(crimes);
  report.density_histogram = hourly_histogram(density);
  report.n_bins = 24;
  report.pearson_r = pearson(report.crime_histogram, report.density_histogram);

  auto argmax = [](const HourlyHistogram& h) {
    return static_cast<int>(std::max_element(h.begin(), h.end()) - h.begin());
  };
  report.peak_crime_hour = argmax(report.crime_histogram);
  report.peak_density_hour = argmax(report.density_histogram);
  return report;
}

}  // namespace shield
