#ifndef NDNSTREAM_METRICS_METRICS_HPP
#define NDNSTREAM_METRICS_METRICS_HPP

#include "ndnstream/consumer/file-fetcher.hpp"

namespace ndnstream::metrics {

NDNSTREAM_DECLARE_ERROR(NoCompletedChunks);
NDNSTREAM_DECLARE_ERROR(EmptyInput);
NDNSTREAM_DECLARE_ERROR(NoLookups);

enum class JitterMode {
  /// Mean absolute difference of successive chunk RTTs.
  MeanAbsoluteDifference,
  /// Population variance of the chunk RTTs (ms squared).
  Variance,
};

const char*
toString(JitterMode mode) noexcept;

/// Mean of received - last_sent over all chunks, in ms. \throw NoCompletedChunks
double
computeFileRtt(const std::vector<consumer::ChunkTiming>& timings);

/// Timings are taken in chunk order regardless of input order. \throw NoCompletedChunks
double
computeJitter(const std::vector<consumer::ChunkTiming>& timings,
              JitterMode mode = JitterMode::MeanAbsoluteDifference);

struct CdfPoint
{
  double value = 0;
  double fraction = 0;

  friend bool
  operator==(const CdfPoint&, const CdfPoint&) = default;
};

/// Sorted distinct values, each with the fraction of samples at or below it.
using CdfSeries = std::vector<CdfPoint>;

/// \throw EmptyInput
CdfSeries
computeCdf(std::vector<double> values);

/// Nearest-rank percentile, \p p in [0, 100]. \throw EmptyInput
double
percentile(std::vector<double> values, double p);

double
median(std::vector<double> values);

double
mean(const std::vector<double>& values);

/// \throw NoLookups if both counts are zero
double
cacheHitRatio(uint64_t hits, uint64_t misses);

/// \p value rounded to \p digits significant decimal digits.
double
roundSignificant(double value, int digits = 6);

} // namespace ndnstream::metrics

#endif // NDNSTREAM_METRICS_METRICS_HPP
