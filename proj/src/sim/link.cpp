#include "ndnstream/sim/link.hpp"

#include "ndnstream/core/error.hpp"

#include <algorithm>

namespace ndnstream::sim {

LinkDirection::LinkDirection(DirectionConfig config)
  : m_config(config)
{
  if (!(config.propagationMs >= 0))
    throw Error("propagation delay must be non-negative");
  setBandwidth(config.bandwidthBps);
}

void
LinkDirection::setBandwidth(double bps)
{
  if (!(bps >= 0))
    throw Error("bandwidth must be positive or unlimited");
  m_config.bandwidthBps = bps;
}

uint64_t
LinkDirection::queuedBytes(SimTime now)
{
  while (!m_backlog.empty() && m_backlog.front().first <= now) {
    m_backlogBytes -= m_backlog.front().second;
    m_backlog.pop_front();
  }
  return m_backlogBytes;
}

std::optional<SimTime>
LinkDirection::transmit(uint64_t bytes, SimTime now)
{
  if (m_config.queueLimitBytes && queuedBytes(now) + bytes > *m_config.queueLimitBytes) {
    ++m_stats.packetsDropped;
    return std::nullopt;
  }

  double serialization = m_config.bandwidthBps == UNLIMITED_BANDWIDTH
                           ? 0.0 : static_cast<double>(bytes) * 8.0 / m_config.bandwidthBps;
  SimTime start = std::max(now, m_busyUntil);
  m_busyUntil = start + serialization;
  if (m_config.queueLimitBytes) {
    m_backlog.emplace_back(m_busyUntil, bytes);
    m_backlogBytes += bytes;
  }
  ++m_stats.packetsSent;
  m_stats.bytesSent += bytes;
  return m_busyUntil + fromMillis(m_config.propagationMs);
}

} // namespace ndnstream::sim
