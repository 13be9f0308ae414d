#include "ndnstream/producer/catalog.hpp"
#include "ndnstream/producer/playlist.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace ndnstream::producer {

namespace {

uint64_t
fnv1a(std::string_view text, uint64_t h = 0xcbf29ce484222325ULL)
{
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t
splitmix64(uint64_t& state)
{
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

std::vector<Representation>
standardTierTable()
{
  return {
    {"240p", 240, 600'000, 600'000},
    {"360p", 360, 900'000, 900'000},
    {"480p", 480, 1'800'000, 1'800'000},
    {"720p", 720, 3'300'000, 3'300'000},
    {"1080p", 1080, 6'300'000, 6'300'000},
  };
}

VideoCatalog::VideoCatalog(std::string videoId, double durationS, double segmentDurationS,
                           std::vector<Representation> representations)
  : m_videoId(std::move(videoId))
  , m_durationS(durationS)
  , m_segmentDurationS(segmentDurationS)
  , m_representations(std::move(representations))
{
  if (!(durationS > 0) || !(segmentDurationS > 0))
    throw InvalidConfig("video and segment durations must be positive");
  if (m_representations.empty())
    throw InvalidConfig("a video needs at least one representation");
  if (m_videoId.empty())
    throw InvalidConfig("video id must not be empty");
  for (const auto& r : m_representations) {
    if (r.label.empty() || r.label.find('/') != std::string::npos)
      throw InvalidConfig("bad representation label '" + r.label + "'");
    if (r.mediaBitrateBps == 0 || r.minBandwidthBps < r.mediaBitrateBps)
      throw InvalidConfig("representation " + r.label +
                          " needs min_bandwidth >= media_bitrate > 0");
  }
  std::stable_sort(m_representations.begin(), m_representations.end(),
                   [] (const auto& a, const auto& b) { return a.minBandwidthBps < b.minBandwidthBps; });
  for (size_t i = 1; i < m_representations.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (m_representations[i].label == m_representations[j].label)
        throw InvalidConfig("duplicate representation label " + m_representations[i].label);
    }
  }

  // tolerate floating error so 12 s / 4 s yields exactly 3 segments
  m_segmentCount = static_cast<size_t>(std::ceil(durationS / segmentDurationS - 1e-9));
  m_segmentCount = std::max<size_t>(m_segmentCount, 1);

  for (const auto& r : m_representations) {
    std::vector<size_t> sizes;
    for (size_t k = 0; k < m_segmentCount; ++k) {
      double bytes = static_cast<double>(r.mediaBitrateBps) * segmentDuration(k) / 8.0;
      sizes.push_back(static_cast<size_t>(std::llround(bytes)));
    }
    m_segmentSizes.push_back(std::move(sizes));
  }
}

double
VideoCatalog::segmentDuration(size_t k) const
{
  if (k >= m_segmentCount)
    throw std::out_of_range("segment index out of range");
  if (k + 1 < m_segmentCount)
    return m_segmentDurationS;
  return m_durationS - m_segmentDurationS * static_cast<double>(m_segmentCount - 1);
}

size_t
VideoCatalog::representationIndex(std::string_view label) const
{
  for (size_t i = 0; i < m_representations.size(); ++i) {
    if (m_representations[i].label == label)
      return i;
  }
  throw UnknownRepresentation("unknown representation '" + std::string(label) + "'");
}

std::vector<CatalogFile>
VideoCatalog::representationFiles(size_t r) const
{
  const auto& label = m_representations.at(r).label;
  std::vector<CatalogFile> out;
  out.push_back({CatalogFile::Kind::MediaPlaylist, r, 0, {label, "playlist.m3u8"}});
  for (size_t k = 0; k < m_segmentCount; ++k)
    out.push_back({CatalogFile::Kind::Segment, r, k, {label, "seg" + std::to_string(k) + ".m4s"}});
  return out;
}

std::vector<CatalogFile>
VideoCatalog::files() const
{
  std::vector<CatalogFile> out;
  out.push_back({CatalogFile::Kind::MasterPlaylist, 0, 0, {"playlist.m3u8"}});
  for (size_t r = 0; r < m_representations.size(); ++r) {
    auto repFiles = representationFiles(r);
    out.insert(out.end(), repFiles.begin(), repFiles.end());
  }
  return out;
}

Bytes
VideoCatalog::segmentPayload(size_t r, size_t k) const
{
  Bytes out(segmentSize(r, k));
  uint64_t seed = fnv1a(m_videoId);
  seed = fnv1a(std::string_view("\0", 1), seed);
  seed = fnv1a(m_representations[r].label, seed);
  seed = fnv1a("/" + std::to_string(k), seed);
  uint64_t state = seed;
  size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    uint64_t v = splitmix64(state);
    std::memcpy(out.data() + i, &v, 8);
  }
  if (i < out.size()) {
    uint64_t v = splitmix64(state);
    std::memcpy(out.data() + i, &v, out.size() - i);
  }
  return out;
}

Bytes
VideoCatalog::payload(const CatalogFile& file) const
{
  std::string text;
  switch (file.kind) {
  case CatalogFile::Kind::MasterPlaylist:
    text = generateMasterPlaylist(*this);
    break;
  case CatalogFile::Kind::MediaPlaylist:
    text = generateMediaPlaylist(*this, m_representations.at(file.representation).label);
    break;
  case CatalogFile::Kind::Segment:
    return segmentPayload(file.representation, file.segment);
  }
  return Bytes(text.begin(), text.end());
}

VideoCatalog
packageVideo(std::string videoId, double durationS, double segmentDurationS,
             std::vector<Representation> representations)
{
  return VideoCatalog(std::move(videoId), durationS, segmentDurationS, std::move(representations));
}

} // namespace ndnstream::producer
