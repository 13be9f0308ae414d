#include "ndnstream/fw/pit.hpp"

namespace ndnstream::fw {

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::find(const Name& name) const
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

PitEntry&
Pit::insert(PitEntry entry)
{
  auto name = entry.name;
  auto [it, ok] = m_entries.insert_or_assign(std::move(name), std::move(entry));
  return it->second;
}

void
Pit::erase(const Name& name)
{
  m_entries.erase(name);
}

std::vector<Name>
Pit::findDataMatches(const Name& fullName) const
{
  std::vector<Name> matches;
  for (size_t len = 0; len <= fullName.size(); ++len) {
    auto it = m_entries.find(fullName.getPrefix(len));
    if (it == m_entries.end())
      continue;
    if (len == fullName.size() || it->second.canBePrefix)
      matches.push_back(it->first);
  }
  return matches;
}

std::vector<Name>
Pit::expire(SimTime now)
{
  std::vector<Name> expired;
  for (auto it = m_entries.begin(); it != m_entries.end();) {
    if (it->second.expiry <= now) {
      expired.push_back(it->first);
      it = m_entries.erase(it);
    }
    else {
      ++it;
    }
  }
  return expired;
}

} // namespace ndnstream::fw
