#include "ndnstream/consumer/abr-controller.hpp"

#include <algorithm>

namespace ndnstream::consumer {

size_t
selectTierIndex(const std::vector<Representation>& tiers, double estimateBps, double safetyFactor)
{
  double budget = safetyFactor * estimateBps;
  size_t chosen = 0;
  for (size_t i = 0; i < tiers.size(); ++i) {
    if (static_cast<double>(tiers[i].minBandwidthBps) <= budget)
      chosen = i;
  }
  return chosen;
}

AbrController::AbrController(std::vector<Representation> tiers, double safetyFactor)
  : m_tiers(std::move(tiers))
  , m_safetyFactor(safetyFactor)
{
  if (m_tiers.empty())
    throw Error("ABR controller needs at least one tier");
  if (!(safetyFactor > 0 && safetyFactor <= 1))
    throw Error("safety factor must be in (0, 1]");
  std::stable_sort(m_tiers.begin(), m_tiers.end(),
                   [] (const auto& a, const auto& b) { return a.minBandwidthBps < b.minBandwidthBps; });
}

const Representation&
AbrController::select(double estimateBps)
{
  m_current = selectTierIndex(m_tiers, estimateBps, m_safetyFactor);
  return m_tiers[m_current];
}

} // namespace ndnstream::consumer
