#include "ndnstream/core/wire.hpp"
#include "ndnstream/core/detail/tlv-encoder.hpp"

#include <optional>

namespace ndnstream {

using namespace detail;

namespace {

struct VectorSink
{
  Bytes& out;

  void
  put(std::span<const uint8_t> bytes)
  {
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
};

size_t
interestBodySize(const Interest& interest)
{
  return fieldSize(nameValueSize(interest.name)) +
         fieldSize(1) +
         fieldSize(4) +
         fieldSize(integerSize(interest.lifetimeMs));
}

size_t
dataBodySize(const Data& data)
{
  // the full name adds the two marker components to the base
  size_t nameSize = nameValueSize(data.name.base);
  for (size_t len : {1 + 1 + std::to_string(data.name.version).size(),
                     1 + 1 + std::to_string(data.name.chunk).size()}) {
    nameSize += 1 + varintSize(len) + len;
  }
  return fieldSize(nameSize) +
         fieldSize(data.content.size()) +
         fieldSize(integerSize(data.finalChunk)) +
         fieldSize(integerSize(data.freshnessMs)) +
         fieldSize(data.integrityTag.size());
}

size_t
nackBodySize(const Nack& nack)
{
  return fieldSize(nameValueSize(nack.interestName)) + fieldSize(1);
}

class Reader
{
public:
  explicit
  Reader(std::span<const uint8_t> bytes)
    : m_bytes(bytes)
  {
  }

  bool
  atEnd() const noexcept
  {
    return m_pos == m_bytes.size();
  }

  uint8_t
  byte()
  {
    if (atEnd())
      throw MalformedPacket("truncated packet");
    return m_bytes[m_pos++];
  }

  uint64_t
  varint()
  {
    uint64_t value = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      uint8_t b = byte();
      uint64_t part = b & 0x7F;
      if (shift == 63 && part > 1)
        throw MalformedPacket("varint overflow");
      value |= part << shift;
      if ((b & 0x80) == 0) {
        if (b == 0 && shift != 0)
          throw MalformedPacket("non-minimal varint");
        return value;
      }
    }
    throw MalformedPacket("varint overflow");
  }

  std::span<const uint8_t>
  take(uint64_t n)
  {
    if (n > m_bytes.size() - m_pos)
      throw MalformedPacket("truncated packet");
    auto out = m_bytes.subspan(m_pos, n);
    m_pos += n;
    return out;
  }

private:
  std::span<const uint8_t> m_bytes;
  size_t m_pos = 0;
};

/// Reads all fields of a packet body, enforcing ascending unique tags drawn from \p allowed.
class FieldTable
{
public:
  FieldTable(Reader& reader, std::initializer_list<uint8_t> allowed)
    : m_allowed(allowed)
  {
    int lastTag = -1;
    while (!reader.atEnd()) {
      uint8_t tag = reader.byte();
      if (std::find(m_allowed.begin(), m_allowed.end(), tag) == m_allowed.end())
        throw MalformedPacket("unknown field tag " + std::to_string(tag));
      if (tag == lastTag)
        throw MalformedPacket("duplicate field tag " + std::to_string(tag));
      if (tag < lastTag)
        throw MalformedPacket("field tag " + std::to_string(tag) + " out of order");
      lastTag = tag;
      uint64_t len = reader.varint();
      m_fields[tag] = reader.take(len);
    }
  }

  std::span<const uint8_t>
  require(uint8_t tag) const
  {
    if (!m_fields[tag])
      throw MalformedPacket("missing field tag " + std::to_string(tag));
    return *m_fields[tag];
  }

private:
  std::vector<uint8_t> m_allowed;
  std::array<std::optional<std::span<const uint8_t>>, 256> m_fields;
};

Name
decodeName(std::span<const uint8_t> value)
{
  Reader r(value);
  std::vector<Name::Component> comps;
  while (!r.atEnd()) {
    if (r.byte() != wire::TAG_NAME_COMPONENT)
      throw MalformedPacket("bad name component tag");
    auto bytes = r.take(r.varint());
    if (bytes.empty())
      throw MalformedPacket("empty name component");
    comps.emplace_back(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  }
  return Name(std::move(comps));
}

uint64_t
decodeInteger(std::span<const uint8_t> value)
{
  if (value.empty() || value.size() > 8)
    throw MalformedPacket("bad integer length");
  if (value.size() > 1 && value[0] == 0)
    throw MalformedPacket("non-minimal integer");
  uint64_t v = 0;
  for (uint8_t b : value)
    v = (v << 8) | b;
  return v;
}

Interest
decodeInterest(Reader& r)
{
  FieldTable f(r, {wire::TAG_NAME, wire::TAG_CAN_BE_PREFIX, wire::TAG_NONCE, wire::TAG_LIFETIME});
  Interest interest;
  interest.name = decodeName(f.require(wire::TAG_NAME));
  auto cbp = f.require(wire::TAG_CAN_BE_PREFIX);
  if (cbp.size() != 1 || cbp[0] > 1)
    throw MalformedPacket("bad CanBePrefix field");
  interest.canBePrefix = cbp[0] == 1;
  auto nonce = f.require(wire::TAG_NONCE);
  if (nonce.size() != 4)
    throw MalformedPacket("nonce must be 4 bytes");
  interest.nonce = (uint32_t(nonce[0]) << 24) | (uint32_t(nonce[1]) << 16) |
                   (uint32_t(nonce[2]) << 8) | uint32_t(nonce[3]);
  interest.lifetimeMs = decodeInteger(f.require(wire::TAG_LIFETIME));
  return interest;
}

Data
decodeData(Reader& r)
{
  FieldTable f(r, {wire::TAG_NAME, wire::TAG_CONTENT, wire::TAG_FINAL_CHUNK,
                   wire::TAG_FRESHNESS, wire::TAG_INTEGRITY});
  auto full = decodeName(f.require(wire::TAG_NAME));
  auto name = VersionedChunkName::tryFromName(full);
  if (!name)
    throw MalformedPacket("Data name lacks version/chunk markers: " + full.toUri());
  auto content = f.require(wire::TAG_CONTENT);
  Data data{*name, Content(Bytes(content.begin(), content.end())),
            decodeInteger(f.require(wire::TAG_FINAL_CHUNK)),
            decodeInteger(f.require(wire::TAG_FRESHNESS)), {}};
  auto tag = f.require(wire::TAG_INTEGRITY);
  if (tag.size() != data.integrityTag.size())
    throw MalformedPacket("integrity tag must be 32 bytes");
  std::copy(tag.begin(), tag.end(), data.integrityTag.begin());
  return data;
}

Nack
decodeNack(Reader& r)
{
  FieldTable f(r, {wire::TAG_NAME, wire::TAG_NACK_REASON});
  Nack nack;
  nack.interestName = decodeName(f.require(wire::TAG_NAME));
  auto reason = f.require(wire::TAG_NACK_REASON);
  if (reason.size() != 1 ||
      (reason[0] != uint8_t(NackReason::NoContent) && reason[0] != uint8_t(NackReason::NoRoute)))
    throw MalformedPacket("bad Nack reason");
  nack.reason = static_cast<NackReason>(reason[0]);
  return nack;
}

} // namespace

size_t
encodedSize(const Interest& interest)
{
  return 1 + interestBodySize(interest);
}

size_t
encodedSize(const Data& data)
{
  return 1 + dataBodySize(data);
}

size_t
encodedSize(const Packet& pkt)
{
  return std::visit([] (const auto& p) -> size_t {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Nack>)
      return 1 + nackBodySize(p);
    else
      return encodedSize(p);
  }, pkt);
}

Bytes
encodePacket(const Packet& pkt)
{
  Bytes out;
  out.reserve(encodedSize(pkt));
  VectorSink sink{out};
  TlvEncoder enc(sink);

  std::visit([&] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>) {
      enc.byte(wire::KIND_INTEREST);
      enc.nameField(wire::TAG_NAME, p.name);
      enc.header(wire::TAG_CAN_BE_PREFIX, 1);
      enc.byte(p.canBePrefix ? 1 : 0);
      enc.header(wire::TAG_NONCE, 4);
      uint8_t nonce[4] = {uint8_t(p.nonce >> 24), uint8_t(p.nonce >> 16),
                          uint8_t(p.nonce >> 8), uint8_t(p.nonce)};
      enc.raw(nonce);
      enc.integerField(wire::TAG_LIFETIME, p.lifetimeMs);
    }
    else if constexpr (std::is_same_v<T, Data>) {
      enc.byte(wire::KIND_DATA);
      enc.dataSignedFields(p);
      enc.header(wire::TAG_INTEGRITY, p.integrityTag.size());
      enc.raw(p.integrityTag);
    }
    else {
      enc.byte(wire::KIND_NACK);
      enc.nameField(wire::TAG_NAME, p.interestName);
      enc.header(wire::TAG_NACK_REASON, 1);
      enc.byte(static_cast<uint8_t>(p.reason));
    }
  }, pkt);
  return out;
}

Bytes
encodeSignedPortion(const Data& data)
{
  Bytes out;
  VectorSink sink{out};
  TlvEncoder enc(sink);
  enc.dataSignedFields(data);
  return out;
}

Packet
decodePacket(std::span<const uint8_t> bytes)
{
  Reader r(bytes);
  if (r.atEnd())
    throw MalformedPacket("empty packet");
  switch (r.byte()) {
  case wire::KIND_INTEREST:
    return decodeInterest(r);
  case wire::KIND_DATA:
    return decodeData(r);
  case wire::KIND_NACK:
    return decodeNack(r);
  default:
    throw MalformedPacket("unknown packet kind");
  }
}

} // namespace ndnstream
