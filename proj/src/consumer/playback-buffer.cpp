#include "ndnstream/consumer/playback-buffer.hpp"

#include "ndnstream/core/error.hpp"

#include <algorithm>

namespace ndnstream::consumer {

PlaybackBuffer::PlaybackBuffer(double startupThresholdS, double capacityS)
  : m_threshold(startupThresholdS)
  , m_capacity(capacityS)
{
  if (!(startupThresholdS >= 0) || !(capacityS > 0) || startupThresholdS > capacityS)
    throw Error("buffer needs 0 <= startup threshold <= capacity");
}

double
PlaybackBuffer::level(SimTime now) const
{
  if (!m_playing)
    return m_level;
  return std::max(0.0, m_level - (now - m_updated));
}

void
PlaybackBuffer::settle(SimTime now)
{
  if (m_playing) {
    double drained = std::min(m_level, now - m_updated);
    m_level -= drained;
    m_played += drained;
  }
  m_updated = now;
}

void
PlaybackBuffer::add(double mediaS, SimTime now)
{
  settle(now);
  m_level = std::min(m_capacity, m_level + mediaS);
}

void
PlaybackBuffer::play(SimTime now)
{
  settle(now);
  m_playing = true;
}

void
PlaybackBuffer::pause(SimTime now)
{
  settle(now);
  m_playing = false;
}

SimTime
PlaybackBuffer::emptyAt() const
{
  return m_updated + m_level;
}

bool
PlaybackBuffer::canAccept(double mediaS, SimTime now) const
{
  return level(now) + mediaS <= m_capacity + 1e-9;
}

double
PlaybackBuffer::timeUntilRoom(double mediaS, SimTime now) const
{
  return std::max(0.0, level(now) + mediaS - m_capacity);
}

bool
PlaybackBuffer::reachedStartupThreshold(SimTime now) const
{
  return level(now) >= m_threshold - 1e-9;
}

double
PlaybackBuffer::played(SimTime now) const
{
  if (!m_playing)
    return m_played;
  return m_played + std::min(m_level, now - m_updated);
}

} // namespace ndnstream::consumer
