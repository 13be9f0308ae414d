#include "ndnstream/core/packet.hpp"

#include <algorithm>

namespace ndnstream {

Content::Content(Bytes bytes)
  : m_storage(std::make_shared<const Bytes>(std::move(bytes)))
  , m_offset(0)
  , m_length(m_storage->size())
{
}

Content::Content(std::shared_ptr<const Bytes> storage, size_t offset, size_t length)
  : m_storage(std::move(storage))
  , m_offset(offset)
  , m_length(length)
{
  if (m_storage == nullptr ? (offset != 0 || length != 0)
                           : (offset > m_storage->size() || length > m_storage->size() - offset)) {
    throw std::out_of_range("content slice exceeds its storage");
  }
}

Content
Content::withByteFlipped(size_t index, uint8_t mask) const
{
  auto view = bytes();
  Bytes copy(view.begin(), view.end());
  copy.at(index) ^= mask;
  return Content(std::move(copy));
}

bool
operator==(const Content& a, const Content& b) noexcept
{
  auto x = a.bytes();
  auto y = b.bytes();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

Interest
Interest::forDiscovery(Name base, uint32_t nonce)
{
  return Interest{std::move(base), true, nonce, DEFAULT_INTEREST_LIFETIME_MS};
}

Interest
Interest::forChunk(const VersionedChunkName& name, uint32_t nonce)
{
  return Interest{name.toName(), false, nonce, DEFAULT_INTEREST_LIFETIME_MS};
}

bool
Interest::isWellFormed() const
{
  bool hasMarkers = std::any_of(name.begin(), name.end(),
                                [] (const auto& c) { return isMarkerComponent(c); });
  return canBePrefix != hasMarkers;
}

const char*
toString(NackReason reason) noexcept
{
  switch (reason) {
  case NackReason::NoContent:
    return "NoContent";
  case NackReason::NoRoute:
    return "NoRoute";
  }
  return "Unknown";
}

} // namespace ndnstream
