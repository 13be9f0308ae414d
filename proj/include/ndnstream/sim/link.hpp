#ifndef NDNSTREAM_SIM_LINK_HPP
#define NDNSTREAM_SIM_LINK_HPP

#include "ndnstream/core/time.hpp"

#include <cstdint>
#include <deque>
#include <optional>

namespace ndnstream::sim {

/// Bandwidth value meaning "no serialization delay".
inline constexpr double UNLIMITED_BANDWIDTH = 0.0;

struct DirectionConfig
{
  double propagationMs = 0;
  /// Bits per second; UNLIMITED_BANDWIDTH for none.
  double bandwidthBps = UNLIMITED_BANDWIDTH;
  /// Bytes waiting or in serialization; unlimited when empty.
  std::optional<uint64_t> queueLimitBytes;
};

struct DirectionStats
{
  uint64_t packetsSent = 0;
  uint64_t packetsDropped = 0;
  uint64_t packetsDelivered = 0;
  uint64_t bytesSent = 0;
};

/**
 * \brief One direction of a point-to-point link: a FIFO serializer followed
 * by a fixed propagation delay.
 *
 * A packet starts serializing when the previous one has finished; bandwidth
 * changes apply to packets handed over after the change.
 */
class LinkDirection
{
public:
  explicit
  LinkDirection(DirectionConfig config = {});

  /// Arrival time at the far end, or empty if the queue limit drops it.
  std::optional<SimTime>
  transmit(uint64_t bytes, SimTime now);

  void
  setBandwidth(double bps);

  double
  bandwidthBps() const noexcept
  {
    return m_config.bandwidthBps;
  }

  const DirectionConfig&
  config() const noexcept
  {
    return m_config;
  }

  SimTime
  busyUntil() const noexcept
  {
    return m_busyUntil;
  }

  /// Bytes whose serialization has not finished by \p now.
  uint64_t
  queuedBytes(SimTime now);

  void
  markDelivered() noexcept
  {
    ++m_stats.packetsDelivered;
  }

  const DirectionStats&
  stats() const noexcept
  {
    return m_stats;
  }

private:
  DirectionConfig m_config;
  SimTime m_busyUntil = 0;
  std::deque<std::pair<SimTime, uint64_t>> m_backlog;
  uint64_t m_backlogBytes = 0;
  DirectionStats m_stats;
};

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_LINK_HPP
