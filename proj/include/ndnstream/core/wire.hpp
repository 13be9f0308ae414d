#ifndef NDNSTREAM_CORE_WIRE_HPP
#define NDNSTREAM_CORE_WIRE_HPP

#include "ndnstream/core/packet.hpp"

namespace ndnstream {

NDNSTREAM_DECLARE_ERROR(MalformedPacket);

/**
 * Wire layout (see docs/wire-format.md):
 *
 *   packet  := kind:u8  field*
 *   field   := tag:u8  length:varint  value[length]
 *
 * Fields appear in ascending tag order, each exactly once. Lengths are
 * unsigned LEB128. Integers are minimal big-endian, nonces are 4 bytes.
 */
namespace wire {

inline constexpr uint8_t KIND_NACK = 0x03;
inline constexpr uint8_t KIND_INTEREST = 0x05;
inline constexpr uint8_t KIND_DATA = 0x06;

inline constexpr uint8_t TAG_NAME = 0x01;
inline constexpr uint8_t TAG_NAME_COMPONENT = 0x08;

inline constexpr uint8_t TAG_CAN_BE_PREFIX = 0x02;
inline constexpr uint8_t TAG_NONCE = 0x03;
inline constexpr uint8_t TAG_LIFETIME = 0x04;

inline constexpr uint8_t TAG_CONTENT = 0x02;
inline constexpr uint8_t TAG_FINAL_CHUNK = 0x03;
inline constexpr uint8_t TAG_FRESHNESS = 0x04;
inline constexpr uint8_t TAG_INTEGRITY = 0x05;

inline constexpr uint8_t TAG_NACK_REASON = 0x02;

} // namespace wire

Bytes
encodePacket(const Packet& pkt);

/// Byte length of encodePacket(pkt), computed without encoding.
size_t
encodedSize(const Packet& pkt);

size_t
encodedSize(const Data& data);

size_t
encodedSize(const Interest& interest);

/// \throw MalformedPacket on truncation, unknown kind or tag, duplicate or out-of-order fields
Packet
decodePacket(std::span<const uint8_t> bytes);

/// Encodes the Data fields covered by the integrity tag (everything but kind and tag).
Bytes
encodeSignedPortion(const Data& data);

} // namespace ndnstream

#endif // NDNSTREAM_CORE_WIRE_HPP
