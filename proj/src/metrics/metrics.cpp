#include "ndnstream/metrics/metrics.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ndnstream::metrics {

const char*
toString(JitterMode mode) noexcept
{
  return mode == JitterMode::Variance ? "var" : "mad";
}

double
computeFileRtt(const std::vector<consumer::ChunkTiming>& timings)
{
  if (timings.empty())
    throw NoCompletedChunks("no chunk of the file was received");
  double sum = 0;
  for (const auto& t : timings)
    sum += t.rttMs();
  return sum / static_cast<double>(timings.size());
}

double
computeJitter(const std::vector<consumer::ChunkTiming>& timings, JitterMode mode)
{
  if (timings.empty())
    throw NoCompletedChunks("no chunk of the file was received");
  auto ordered = timings;
  std::stable_sort(ordered.begin(), ordered.end(), [] (const auto& a, const auto& b) { return a.chunk < b.chunk; });
  if (ordered.size() == 1)
    return 0;

  if (mode == JitterMode::Variance) {
    double m = computeFileRtt(ordered);
    double sum = 0;
    for (const auto& t : ordered)
      sum += (t.rttMs() - m) * (t.rttMs() - m);
    return sum / static_cast<double>(ordered.size());
  }
  double sum = 0;
  for (size_t i = 1; i < ordered.size(); ++i)
    sum += std::abs(ordered[i].rttMs() - ordered[i - 1].rttMs());
  return sum / static_cast<double>(ordered.size() - 1);
}

CdfSeries
computeCdf(std::vector<double> values)
{
  if (values.empty())
    throw EmptyInput("CDF of an empty sample");
  std::sort(values.begin(), values.end());
  CdfSeries cdf;
  double n = static_cast<double>(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    double fraction = i + 1 == values.size() ? 1.0 : static_cast<double>(i + 1) / n;
    if (!cdf.empty() && cdf.back().value == values[i])
      cdf.back().fraction = fraction;
    else
      cdf.push_back({values[i], fraction});
  }
  return cdf;
}

double
percentile(std::vector<double> values, double p)
{
  if (values.empty())
    throw EmptyInput("percentile of an empty sample");
  if (!(p >= 0 && p <= 100))
    throw Error("percentile must lie in [0, 100]");
  std::sort(values.begin(), values.end());
  auto rank = static_cast<size_t>(std::ceil(p / 100.0 * static_cast<double>(values.size())));
  return values[std::clamp<size_t>(rank, 1, values.size()) - 1];
}

double
median(std::vector<double> values)
{
  if (values.empty())
    throw EmptyInput("median of an empty sample");
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double
mean(const std::vector<double>& values)
{
  if (values.empty())
    throw EmptyInput("mean of an empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double
cacheHitRatio(uint64_t hits, uint64_t misses)
{
  if (hits + misses == 0)
    throw NoLookups("no Content Store lookups");
  return static_cast<double>(hits) / static_cast<double>(hits + misses);
}

double
roundSignificant(double value, int digits)
{
  if (!std::isfinite(value) || value == 0)
    return value;
  return std::stod(fmt::format("{:.{}g}", value, digits));
}

} // namespace ndnstream::metrics
