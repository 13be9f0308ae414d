#ifndef NDNSTREAM_PRODUCER_CATALOG_HPP
#define NDNSTREAM_PRODUCER_CATALOG_HPP

#include "ndnstream/core/packet.hpp"

#include <string>
#include <vector>

namespace ndnstream::producer {

NDNSTREAM_DECLARE_ERROR(InvalidConfig);
NDNSTREAM_DECLARE_ERROR(UnknownRepresentation);

/// One encoded quality tier of a video.
struct Representation
{
  std::string label;
  uint32_t height = 0;
  uint64_t minBandwidthBps = 0;
  uint64_t mediaBitrateBps = 0;

  friend bool
  operator==(const Representation&, const Representation&) = default;
};

/// The five tiers served for every video in the measured deployment,
/// with media bitrate equal to the advertised minimum bandwidth.
std::vector<Representation>
standardTierTable();

/// A file of the packaged video as a path relative to the video prefix.
struct CatalogFile
{
  enum class Kind {
    MasterPlaylist,
    MediaPlaylist,
    Segment,
  };

  Kind kind;
  size_t representation = 0;
  size_t segment = 0;
  std::vector<std::string> path;
};

/**
 * \brief A video split into equal-duration segments for every representation.
 *
 * Segment payloads are seeded pseudo-random bytes; only their sizes matter.
 */
class VideoCatalog
{
public:
  VideoCatalog(std::string videoId, double durationS, double segmentDurationS,
               std::vector<Representation> representations);

  const std::string&
  videoId() const noexcept
  {
    return m_videoId;
  }

  double
  durationS() const noexcept
  {
    return m_durationS;
  }

  double
  segmentDurationS() const noexcept
  {
    return m_segmentDurationS;
  }

  /// Representations sorted by ascending minimum bandwidth.
  const std::vector<Representation>&
  representations() const noexcept
  {
    return m_representations;
  }

  size_t
  segmentCount() const noexcept
  {
    return m_segmentCount;
  }

  /// Media duration of segment \p k; only the last one can be shorter.
  double
  segmentDuration(size_t k) const;

  size_t
  segmentSize(size_t representation, size_t k) const
  {
    return m_segmentSizes.at(representation).at(k);
  }

  /// \throw UnknownRepresentation
  size_t
  representationIndex(std::string_view label) const;

  /// Master playlist, then per representation its media playlist and segments in order.
  std::vector<CatalogFile>
  files() const;

  /// Files of one representation in playback order: media playlist then segments.
  std::vector<CatalogFile>
  representationFiles(size_t representation) const;

  Bytes
  payload(const CatalogFile& file) const;

  Bytes
  segmentPayload(size_t representation, size_t k) const;

private:
  std::string m_videoId;
  double m_durationS;
  double m_segmentDurationS;
  std::vector<Representation> m_representations;
  size_t m_segmentCount;
  std::vector<std::vector<size_t>> m_segmentSizes;
};

/// \throw InvalidConfig on non-positive durations, no representations, or bad tier rates
VideoCatalog
packageVideo(std::string videoId, double durationS, double segmentDurationS,
             std::vector<Representation> representations);

} // namespace ndnstream::producer

#endif // NDNSTREAM_PRODUCER_CATALOG_HPP
