#ifndef NDNSTREAM_FW_PIT_HPP
#define NDNSTREAM_FW_PIT_HPP

#include "ndnstream/core/name.hpp"
#include "ndnstream/core/time.hpp"
#include "ndnstream/fw/face.hpp"

#include <map>
#include <set>

namespace ndnstream::fw {

struct PitEntry
{
  Name name;
  bool canBePrefix = false;
  std::set<FaceId> downstream;
  std::set<uint32_t> seenNonces;
  SimTime expiry = 0;
  SimTime upstreamSentAt = 0;
};

/// Pending Interest Table: at most one entry per exact Interest name.
class Pit
{
public:
  PitEntry*
  find(const Name& name);

  const PitEntry*
  find(const Name& name) const;

  PitEntry&
  insert(PitEntry entry);

  void
  erase(const Name& name);

  /// Names of entries a Data packet with \p fullName satisfies: the exact name,
  /// plus shorter entries that accept prefix matches.
  std::vector<Name>
  findDataMatches(const Name& fullName) const;

  /// Removes entries with expiry <= now and returns their names.
  std::vector<Name>
  expire(SimTime now);

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
  std::map<Name, PitEntry> m_entries;
};

} // namespace ndnstream::fw

#endif // NDNSTREAM_FW_PIT_HPP
