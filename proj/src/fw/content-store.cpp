#include "ndnstream/fw/content-store.hpp"
#include "ndnstream/core/wire.hpp"

namespace ndnstream::fw {

ContentStore::ContentStore(size_t capacityBytes)
  : m_capacity(capacityBytes)
{
}

bool
ContentStore::isStale(const Entry& e, SimTime now) noexcept
{
  return now - e.inserted > fromMillis(static_cast<double>(e.data.freshnessMs));
}

void
ContentStore::touch(Entry& e, SimTime now)
{
  e.lastAccess = now;
  m_lru.splice(m_lru.end(), m_lru, e.lruPos);
}

ContentStore::EntryMap::iterator
ContentStore::erase(EntryMap::iterator it)
{
  m_used -= it->second.bytes;
  m_lru.erase(it->second.lruPos);
  return m_entries.erase(it);
}

std::optional<Data>
ContentStore::lookup(const Interest& interest, SimTime now)
{
  if (!interest.canBePrefix) {
    auto it = m_entries.find(interest.name);
    if (it == m_entries.end())
      return std::nullopt;
    if (isStale(it->second, now)) {
      erase(it);
      return std::nullopt;
    }
    touch(it->second, now);
    return it->second.data;
  }

  Entry* best = nullptr;
  for (auto it = m_entries.lower_bound(interest.name);
       it != m_entries.end() && interest.name.isPrefixOf(it->first);) {
    if (isStale(it->second, now)) {
      it = erase(it);
      continue;
    }
    const auto& n = it->second.data.name;
    if (best == nullptr || n.version > best->data.name.version ||
        (n.version == best->data.name.version && n.chunk < best->data.name.chunk)) {
      best = &it->second;
    }
    ++it;
  }
  if (best == nullptr)
    return std::nullopt;
  touch(*best, now);
  return best->data;
}

std::vector<Name>
ContentStore::insert(const Data& data, SimTime now)
{
  size_t bytes = encodedSize(data);
  if (bytes > m_capacity)
    return {};

  auto name = data.fullName();
  auto existing = m_entries.find(name);
  if (existing != m_entries.end())
    erase(existing);

  std::vector<Name> evicted;
  while (m_used + bytes > m_capacity) {
    auto victim = m_entries.find(m_lru.front());
    evicted.push_back(victim->first);
    erase(victim);
  }

  auto pos = m_lru.insert(m_lru.end(), name);
  m_entries.emplace(std::move(name), Entry{data, now, now, bytes, pos});
  m_used += bytes;
  return evicted;
}

bool
ContentStore::contains(const Name& fullName, SimTime now) const
{
  auto it = m_entries.find(fullName);
  return it != m_entries.end() && !isStale(it->second, now);
}

std::optional<SimTime>
ContentStore::lastAccess(const Name& fullName) const
{
  auto it = m_entries.find(fullName);
  if (it == m_entries.end())
    return std::nullopt;
  return it->second.lastAccess;
}

std::vector<Name>
ContentStore::lruOrder() const
{
  return {m_lru.begin(), m_lru.end()};
}

} // namespace ndnstream::fw
