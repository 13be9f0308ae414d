#ifndef NDNSTREAM_CONSUMER_PLAYBACK_BUFFER_HPP
#define NDNSTREAM_CONSUMER_PLAYBACK_BUFFER_HPP

#include "ndnstream/core/time.hpp"

namespace ndnstream::consumer {

/**
 * \brief Seconds of downloaded-but-unplayed media.
 *
 * While playing, the level drains at one media second per simulated second.
 * The level is tracked analytically: it is settled to the query time on
 * every mutation.
 */
class PlaybackBuffer
{
public:
  explicit
  PlaybackBuffer(double startupThresholdS = 2.0, double capacityS = 30.0);

  double
  level(SimTime now) const;

  bool
  playing() const noexcept
  {
    return m_playing;
  }

  /// Adds media, clamped at capacity.
  void
  add(double mediaS, SimTime now);

  void
  play(SimTime now);

  void
  pause(SimTime now);

  /// Time at which a playing buffer runs dry.
  SimTime
  emptyAt() const;

  bool
  canAccept(double mediaS, SimTime now) const;

  /// Simulated time until \p mediaS more seconds fit.
  double
  timeUntilRoom(double mediaS, SimTime now) const;

  bool
  reachedStartupThreshold(SimTime now) const;

  /// Media seconds drained so far.
  double
  played(SimTime now) const;

  double
  startupThresholdS() const noexcept
  {
    return m_threshold;
  }

  double
  capacityS() const noexcept
  {
    return m_capacity;
  }

private:
  void
  settle(SimTime now);

private:
  double m_threshold;
  double m_capacity;
  double m_level = 0;
  double m_played = 0;
  SimTime m_updated = 0;
  bool m_playing = false;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_PLAYBACK_BUFFER_HPP
