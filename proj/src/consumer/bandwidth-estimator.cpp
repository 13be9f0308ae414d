#include "ndnstream/consumer/bandwidth-estimator.hpp"

#include "ndnstream/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace ndnstream::consumer {

Ewma::Ewma(double halfLife)
  : m_alpha(std::exp(std::log(0.5) / halfLife))
{
  if (!(halfLife > 0))
    throw Error("EWMA half-life must be positive");
}

void
Ewma::sample(double weight, double value)
{
  double adjAlpha = std::pow(m_alpha, weight);
  m_estimate = value * (1 - adjAlpha) + adjAlpha * m_estimate;
  m_totalWeight += weight;
}

std::optional<double>
Ewma::estimate() const
{
  if (m_totalWeight <= 0)
    return std::nullopt;
  double zeroFactor = 1 - std::pow(m_alpha, m_totalWeight);
  return m_estimate / zeroFactor;
}

BandwidthEstimator::BandwidthEstimator(EstimatorConfig config)
  : m_config(config)
  , m_fast(config.fastHalfLifeS)
  , m_slow(config.slowHalfLifeS)
{
}

double
BandwidthEstimator::recordSample(uint64_t bytes, double durationS)
{
  if (!(durationS > 0))
    throw Error("bandwidth sample duration must be positive");
  double rate = 8.0 * static_cast<double>(bytes) / durationS;
  m_fast.sample(durationS, rate);
  m_slow.sample(durationS, rate);
  return *estimate();
}

std::optional<double>
BandwidthEstimator::estimate() const
{
  auto fast = m_fast.estimate();
  auto slow = m_slow.estimate();
  if (!fast || !slow)
    return std::nullopt;
  return std::min(*fast, *slow);
}

} // namespace ndnstream::consumer
