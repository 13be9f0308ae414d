#ifndef NDNSTREAM_CORE_DETAIL_TLV_ENCODER_HPP
#define NDNSTREAM_CORE_DETAIL_TLV_ENCODER_HPP

#include "ndnstream/core/packet.hpp"
#include "ndnstream/core/wire.hpp"

namespace ndnstream::detail {

constexpr size_t
varintSize(uint64_t v) noexcept
{
  size_t n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

constexpr size_t
integerSize(uint64_t v) noexcept
{
  size_t n = 1;
  while (v > 0xFF) {
    v >>= 8;
    ++n;
  }
  return n;
}

inline size_t
nameValueSize(const Name& name) noexcept
{
  size_t total = 0;
  for (const auto& c : name)
    total += 1 + varintSize(c.size()) + c.size();
  return total;
}

constexpr size_t
fieldSize(size_t valueLength) noexcept
{
  return 1 + varintSize(valueLength) + valueLength;
}

/// Writes TLV structures into any sink providing put(std::span<const uint8_t>).
template<typename Sink>
class TlvEncoder
{
public:
  explicit
  TlvEncoder(Sink& sink)
    : m_sink(sink)
  {
  }

  void
  byte(uint8_t b)
  {
    m_sink.put(std::span<const uint8_t>(&b, 1));
  }

  void
  raw(std::span<const uint8_t> bytes)
  {
    m_sink.put(bytes);
  }

  void
  varint(uint64_t v)
  {
    uint8_t buf[10];
    size_t n = 0;
    do {
      uint8_t b = v & 0x7F;
      v >>= 7;
      buf[n++] = v != 0 ? (b | 0x80) : b;
    } while (v != 0);
    raw({buf, n});
  }

  void
  header(uint8_t tag, size_t length)
  {
    byte(tag);
    varint(length);
  }

  void
  integerField(uint8_t tag, uint64_t v)
  {
    size_t n = integerSize(v);
    header(tag, n);
    uint8_t buf[8];
    for (size_t i = 0; i < n; ++i)
      buf[i] = static_cast<uint8_t>(v >> (8 * (n - 1 - i)));
    raw({buf, n});
  }

  void
  nameField(uint8_t tag, const Name& name)
  {
    header(tag, nameValueSize(name));
    for (const auto& c : name) {
      header(wire::TAG_NAME_COMPONENT, c.size());
      raw({reinterpret_cast<const uint8_t*>(c.data()), c.size()});
    }
  }

  /// Data fields covered by the integrity tag, in wire order.
  void
  dataSignedFields(const Data& data)
  {
    nameField(wire::TAG_NAME, data.fullName());
    header(wire::TAG_CONTENT, data.content.size());
    raw(data.content.bytes());
    integerField(wire::TAG_FINAL_CHUNK, data.finalChunk);
    integerField(wire::TAG_FRESHNESS, data.freshnessMs);
  }

private:
  Sink& m_sink;
};

} // namespace ndnstream::detail

#endif // NDNSTREAM_CORE_DETAIL_TLV_ENCODER_HPP
