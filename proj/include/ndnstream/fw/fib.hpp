#ifndef NDNSTREAM_FW_FIB_HPP
#define NDNSTREAM_FW_FIB_HPP

#include "ndnstream/core/name.hpp"
#include "ndnstream/fw/face.hpp"

#include <map>

namespace ndnstream::fw {

NDNSTREAM_DECLARE_ERROR(InvalidRoute);

struct NextHop
{
  FaceId face;
  uint64_t cost = 0;

  friend bool
  operator==(const NextHop&, const NextHop&) = default;
};

/// Next hops are kept sorted by strictly ascending cost.
struct FibEntry
{
  Name prefix;
  std::vector<NextHop> nextHops;
};

class Fib
{
public:
  /// Adds or updates the route. \throw InvalidRoute if another face already has \p cost.
  void
  addRoute(const Name& prefix, FaceId face, uint64_t cost);

  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  const FibEntry*
  findExact(const Name& prefix) const;

  size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  auto
  begin() const noexcept
  {
    return m_entries.begin();
  }

  auto
  end() const noexcept
  {
    return m_entries.end();
  }

private:
  std::map<Name, FibEntry> m_entries;
};

} // namespace ndnstream::fw

#endif // NDNSTREAM_FW_FIB_HPP
