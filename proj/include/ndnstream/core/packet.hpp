#ifndef NDNSTREAM_CORE_PACKET_HPP
#define NDNSTREAM_CORE_PACKET_HPP

#include "ndnstream/core/name.hpp"

#include <array>
#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace ndnstream {

using Bytes = std::vector<uint8_t>;

/**
 * \brief Immutable byte payload of a Data packet.
 *
 * Copies share storage; a Content may be a slice of a larger buffer so that a
 * file's chunks can reference one allocation.
 */
class Content
{
public:
  Content() = default;

  explicit
  Content(Bytes bytes);

  Content(std::shared_ptr<const Bytes> storage, size_t offset, size_t length);

  std::span<const uint8_t>
  bytes() const noexcept
  {
    if (!m_storage)
      return {};
    return {m_storage->data() + m_offset, m_length};
  }

  size_t
  size() const noexcept
  {
    return m_length;
  }

  bool
  empty() const noexcept
  {
    return m_length == 0;
  }

  /// Returns a private copy with byte \p index XOR-ed by \p mask.
  Content
  withByteFlipped(size_t index, uint8_t mask) const;

  friend bool
  operator==(const Content& a, const Content& b) noexcept;

private:
  std::shared_ptr<const Bytes> m_storage;
  size_t m_offset = 0;
  size_t m_length = 0;
};

inline constexpr uint64_t DEFAULT_INTEREST_LIFETIME_MS = 4000;

struct Interest
{
  Name name;
  bool canBePrefix = false;
  uint32_t nonce = 0;
  uint64_t lifetimeMs = DEFAULT_INTEREST_LIFETIME_MS;

  /// Discovery Interest for an unversioned file name.
  static Interest
  forDiscovery(Name base, uint32_t nonce);

  /// Fully named Interest for one chunk.
  static Interest
  forChunk(const VersionedChunkName& name, uint32_t nonce);

  /// can_be_prefix must be set exactly when the name carries no version/chunk markers.
  bool
  isWellFormed() const;

  friend bool
  operator==(const Interest&, const Interest&) = default;
};

using IntegrityTag = std::array<uint8_t, 32>;

struct Data
{
  VersionedChunkName name;
  Content content;
  uint64_t finalChunk = 0;
  uint64_t freshnessMs = 0;
  IntegrityTag integrityTag{};

  Name
  fullName() const
  {
    return name.toName();
  }

  friend bool
  operator==(const Data&, const Data&) = default;
};

enum class NackReason : uint8_t {
  NoContent = 1,
  NoRoute = 2,
};

const char*
toString(NackReason reason) noexcept;

struct Nack
{
  Name interestName;
  NackReason reason = NackReason::NoContent;

  friend bool
  operator==(const Nack&, const Nack&) = default;
};

using Packet = std::variant<Interest, Data, Nack>;

} // namespace ndnstream

#endif // NDNSTREAM_CORE_PACKET_HPP
