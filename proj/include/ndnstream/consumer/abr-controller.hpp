#ifndef NDNSTREAM_CONSUMER_ABR_CONTROLLER_HPP
#define NDNSTREAM_CONSUMER_ABR_CONTROLLER_HPP

#include "ndnstream/producer/catalog.hpp"

namespace ndnstream::consumer {

using producer::Representation;

inline constexpr double DEFAULT_SAFETY_FACTOR = 0.95;

/// Picks the highest tier whose minimum bandwidth fits under safety_factor x estimate.
class AbrController
{
public:
  /// Tiers are sorted ascending by minimum bandwidth. \throw Error if empty or factor not in (0,1]
  explicit
  AbrController(std::vector<Representation> tiers, double safetyFactor = DEFAULT_SAFETY_FACTOR);

  const Representation&
  select(double estimateBps);

  const Representation&
  current() const noexcept
  {
    return m_tiers[m_current];
  }

  size_t
  currentIndex() const noexcept
  {
    return m_current;
  }

  const std::vector<Representation>&
  tiers() const noexcept
  {
    return m_tiers;
  }

  double
  safetyFactor() const noexcept
  {
    return m_safetyFactor;
  }

private:
  std::vector<Representation> m_tiers;
  double m_safetyFactor;
  size_t m_current = 0;
};

/// The selection rule alone: index of the tier chosen for \p estimateBps.
size_t
selectTierIndex(const std::vector<Representation>& ascendingTiers, double estimateBps,
                double safetyFactor);

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_ABR_CONTROLLER_HPP
