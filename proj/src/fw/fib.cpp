#include "ndnstream/fw/fib.hpp"

#include <algorithm>
#include <ostream>

namespace ndnstream::fw {

std::ostream&
operator<<(std::ostream& os, FaceId face)
{
  return os << "face" << face.value;
}

void
Fib::addRoute(const Name& prefix, FaceId face, uint64_t cost)
{
  auto existing = m_entries.find(prefix);
  if (existing != m_entries.end() &&
      std::any_of(existing->second.nextHops.begin(), existing->second.nextHops.end(),
                  [&] (const NextHop& h) { return h.face != face && h.cost == cost; })) {
    throw InvalidRoute("duplicate route cost " + std::to_string(cost) + " for " + prefix.toUri());
  }
  auto& entry = m_entries[prefix];
  entry.prefix = prefix;
  auto& hops = entry.nextHops;
  std::erase_if(hops, [face] (const NextHop& h) { return h.face == face; });
  auto pos = std::lower_bound(hops.begin(), hops.end(), cost,
                              [] (const NextHop& h, uint64_t c) { return h.cost < c; });
  hops.insert(pos, NextHop{face, cost});
}

const FibEntry*
Fib::findLongestPrefixMatch(const Name& name) const
{
  for (size_t len = name.size() + 1; len-- > 0;) {
    auto it = m_entries.find(name.getPrefix(len));
    if (it != m_entries.end())
      return &it->second;
  }
  return nullptr;
}

const FibEntry*
Fib::findExact(const Name& prefix) const
{
  auto it = m_entries.find(prefix);
  return it == m_entries.end() ? nullptr : &it->second;
}

} // namespace ndnstream::fw
