#include "ndnstream/sim/event-engine.hpp"

#include <fmt/core.h>

namespace ndnstream::sim {

EventId
EventEngine::schedule(SimTime at, Action action)
{
  if (!(at >= m_now))
    throw SchedulingInPast(fmt::format("event at {} but the clock is at {}", at, m_now));
  EventId id = ++m_lastId;
  m_queue.emplace(Key{at, id}, std::move(action));
  m_times.emplace(id, at);
  return id;
}

bool
EventEngine::cancel(EventId id)
{
  auto it = m_times.find(id);
  if (it == m_times.end())
    return false;
  m_queue.erase(Key{it->second, id});
  m_times.erase(it);
  return true;
}

bool
EventEngine::step()
{
  if (m_queue.empty())
    return false;
  auto node = m_queue.extract(m_queue.begin());
  m_now = node.key().first;
  m_times.erase(node.key().second);
  ++m_executed;
  node.mapped()();
  return true;
}

void
EventEngine::run(std::optional<SimTime> horizon)
{
  while (!m_queue.empty()) {
    if (horizon && m_queue.begin()->first.first > *horizon)
      break;
    step();
  }
}

std::optional<SimTime>
EventEngine::nextTime() const
{
  if (m_queue.empty())
    return std::nullopt;
  return m_queue.begin()->first.first;
}

} // namespace ndnstream::sim
