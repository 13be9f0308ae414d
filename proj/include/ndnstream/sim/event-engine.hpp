#ifndef NDNSTREAM_SIM_EVENT_ENGINE_HPP
#define NDNSTREAM_SIM_EVENT_ENGINE_HPP

#include "ndnstream/core/error.hpp"
#include "ndnstream/core/time.hpp"

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>

namespace ndnstream::sim {

NDNSTREAM_DECLARE_ERROR(SchedulingInPast);

using EventId = uint64_t;

/**
 * \brief Single-threaded discrete-event loop.
 *
 * Events run in (time, issue order) order. Ids are never reused; id 0 is
 * never issued and cancelling it is a no-op.
 */
class EventEngine
{
public:
  using Action = std::function<void()>;

  SimTime
  now() const noexcept
  {
    return m_now;
  }

  /// \throw SchedulingInPast if \p at < now()
  EventId
  schedule(SimTime at, Action action);

  EventId
  scheduleAfter(double delayS, Action action)
  {
    return schedule(m_now + delayS, std::move(action));
  }

  /// Returns false if the event already ran or was cancelled.
  bool
  cancel(EventId id);

  /// Runs the next event; false when none is left.
  bool
  step();

  /// Runs until no event is left or the next one lies beyond \p horizon.
  void
  run(std::optional<SimTime> horizon = std::nullopt);

  std::optional<SimTime>
  nextTime() const;

  size_t
  pending() const noexcept
  {
    return m_queue.size();
  }

  uint64_t
  executed() const noexcept
  {
    return m_executed;
  }

private:
  using Key = std::pair<SimTime, EventId>;

  SimTime m_now = 0;
  EventId m_lastId = 0;
  uint64_t m_executed = 0;
  std::map<Key, Action> m_queue;
  std::unordered_map<EventId, SimTime> m_times;
};

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_EVENT_ENGINE_HPP
