#ifndef NDNSTREAM_FW_FACE_HPP
#define NDNSTREAM_FW_FACE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace ndnstream::fw {

/// Identifies one face of a forwarder; unique per node.
struct FaceId
{
  uint32_t value = 0;

  /// Node-local face used by the prefetcher; Data delivered to it is cached, never sent.
  static constexpr FaceId
  internal() noexcept
  {
    return FaceId{0};
  }

  friend constexpr auto
  operator<=>(const FaceId&, const FaceId&) = default;
};

std::ostream&
operator<<(std::ostream& os, FaceId face);

} // namespace ndnstream::fw

#endif // NDNSTREAM_FW_FACE_HPP
