#ifndef NDNSTREAM_PRODUCER_PLAYLIST_HPP
#define NDNSTREAM_PRODUCER_PLAYLIST_HPP

#include "ndnstream/producer/catalog.hpp"

#include <string>

namespace ndnstream::producer {

NDNSTREAM_DECLARE_ERROR(PlaylistError);

std::string
generateMasterPlaylist(const VideoCatalog& catalog);

/// \throw UnknownRepresentation
std::string
generateMediaPlaylist(const VideoCatalog& catalog, std::string_view label);

struct VariantStream
{
  Representation representation;
  std::string uri;
};

struct MediaSegment
{
  double durationS = 0;
  std::string uri;
};

/// Variants in playlist order. \throw PlaylistError
std::vector<VariantStream>
parseMasterPlaylist(std::string_view text);

/// \throw PlaylistError if the text is not a complete VOD media playlist
std::vector<MediaSegment>
parseMediaPlaylist(std::string_view text);

} // namespace ndnstream::producer

#endif // NDNSTREAM_PRODUCER_PLAYLIST_HPP
