#ifndef NDNSTREAM_CORE_TIME_HPP
#define NDNSTREAM_CORE_TIME_HPP

namespace ndnstream {

/// Simulated time in seconds.
using SimTime = double;

constexpr SimTime
fromMillis(double ms) noexcept
{
  return ms / 1000.0;
}

constexpr double
toMillis(SimTime t) noexcept
{
  return t * 1000.0;
}

} // namespace ndnstream

#endif // NDNSTREAM_CORE_TIME_HPP
