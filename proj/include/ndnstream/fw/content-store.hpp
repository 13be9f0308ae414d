#ifndef NDNSTREAM_FW_CONTENT_STORE_HPP
#define NDNSTREAM_FW_CONTENT_STORE_HPP

#include "ndnstream/core/packet.hpp"
#include "ndnstream/core/time.hpp"

#include <list>
#include <map>
#include <optional>

namespace ndnstream::fw {

/**
 * \brief Byte-bounded LRU cache of Data packets keyed by full name.
 *
 * Entry size is the encoded wire size. Entries older than their freshness
 * period are skipped by lookups and dropped lazily.
 */
class ContentStore
{
public:
  explicit
  ContentStore(size_t capacityBytes);

  /**
   * Exact-name match for fully named Interests. For can_be_prefix Interests,
   * the fresh entry under the Interest name with the highest version, then
   * lowest chunk. A hit refreshes the entry's recency.
   */
  std::optional<Data>
  lookup(const Interest& interest, SimTime now);

  /// Inserts or refreshes \p data and returns the names evicted to make room.
  /// Data larger than the whole capacity is not cached.
  std::vector<Name>
  insert(const Data& data, SimTime now);

  /// Fresh exact-name presence check; does not touch recency.
  bool
  contains(const Name& fullName, SimTime now) const;

  std::optional<SimTime>
  lastAccess(const Name& fullName) const;

  /// Full names from least to most recently accessed.
  std::vector<Name>
  lruOrder() const;

  size_t
  capacityBytes() const noexcept
  {
    return m_capacity;
  }

  size_t
  usedBytes() const noexcept
  {
    return m_used;
  }

  size_t
  size() const noexcept
  {
    return m_entries.size();
  }

private:
  struct Entry
  {
    Data data;
    SimTime lastAccess;
    SimTime inserted;
    size_t bytes;
    std::list<Name>::iterator lruPos;
  };

  using EntryMap = std::map<Name, Entry>;

  static bool
  isStale(const Entry& e, SimTime now) noexcept;

  void
  touch(Entry& e, SimTime now);

  EntryMap::iterator
  erase(EntryMap::iterator it);

private:
  size_t m_capacity;
  size_t m_used = 0;
  EntryMap m_entries;
  std::list<Name> m_lru; // front is least recently accessed
};

} // namespace ndnstream::fw

#endif // NDNSTREAM_FW_CONTENT_STORE_HPP
