#ifndef NDNSTREAM_CONSUMER_BANDWIDTH_ESTIMATOR_HPP
#define NDNSTREAM_CONSUMER_BANDWIDTH_ESTIMATOR_HPP

#include <cstdint>
#include <optional>

namespace ndnstream::consumer {

/// Exponentially weighted average whose decay depends on sample weight.
class Ewma
{
public:
  explicit
  Ewma(double halfLife);

  void
  sample(double weight, double value);

  /// Average corrected for its zero initial value; nullopt before any sample.
  std::optional<double>
  estimate() const;

  double
  totalWeight() const noexcept
  {
    return m_totalWeight;
  }

private:
  double m_alpha;
  double m_estimate = 0;
  double m_totalWeight = 0;
};

struct EstimatorConfig
{
  double fastHalfLifeS = 2.0;
  double slowHalfLifeS = 6.0;
};

/**
 * \brief Dual half-life throughput estimator.
 *
 * Each download contributes its rate weighted by its duration. The estimate
 * is the smaller of the fast and slow averages, so it drops quickly and
 * recovers slowly.
 */
class BandwidthEstimator
{
public:
  explicit
  BandwidthEstimator(EstimatorConfig config = {});

  /// Records \p bytes received over \p durationS seconds; returns the updated estimate in bps.
  double
  recordSample(uint64_t bytes, double durationS);

  std::optional<double>
  estimate() const;

  std::optional<double>
  fastEstimate() const
  {
    return m_fast.estimate();
  }

  std::optional<double>
  slowEstimate() const
  {
    return m_slow.estimate();
  }

  const EstimatorConfig&
  config() const noexcept
  {
    return m_config;
  }

private:
  EstimatorConfig m_config;
  Ewma m_fast;
  Ewma m_slow;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_BANDWIDTH_ESTIMATOR_HPP
