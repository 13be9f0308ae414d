#include "ndnstream/producer/playlist.hpp"

#include <fmt/format.h>

#include <cmath>
#include <charconv>
#include <cstdlib>

namespace ndnstream::producer {

namespace {

std::vector<std::string_view>
splitLines(std::string_view text)
{
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (!line.empty())
      lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

bool
startsWith(std::string_view s, std::string_view prefix)
{
  return s.substr(0, prefix.size()) == prefix;
}

/// Splits an HLS attribute list, honouring quoted values.
std::vector<std::pair<std::string, std::string>>
parseAttributes(std::string_view list)
{
  std::vector<std::pair<std::string, std::string>> attrs;
  size_t pos = 0;
  while (pos < list.size()) {
    size_t eq = list.find('=', pos);
    if (eq == std::string_view::npos)
      throw PlaylistError("malformed attribute list");
    std::string key(list.substr(pos, eq - pos));
    std::string value;
    size_t cur = eq + 1;
    if (cur < list.size() && list[cur] == '"') {
      size_t close = list.find('"', cur + 1);
      if (close == std::string_view::npos)
        throw PlaylistError("unterminated quoted attribute");
      value = std::string(list.substr(cur + 1, close - cur - 1));
      cur = close + 1;
    }
    else {
      size_t comma = list.find(',', cur);
      if (comma == std::string_view::npos)
        comma = list.size();
      value = std::string(list.substr(cur, comma - cur));
      cur = comma;
    }
    attrs.emplace_back(std::move(key), std::move(value));
    if (cur < list.size() && list[cur] == ',')
      ++cur;
    pos = cur;
  }
  return attrs;
}

uint64_t
parseUnsigned(std::string_view s)
{
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw PlaylistError("bad integer '" + std::string(s) + "'");
  return v;
}

uint32_t
widthFor(uint32_t height)
{
  return 2 * static_cast<uint32_t>(std::lround(height * 8.0 / 9.0));
}

} // namespace

std::string
generateMasterPlaylist(const VideoCatalog& catalog)
{
  std::string out = "#EXTM3U\n#EXT-X-VERSION:3\n";
  for (const auto& r : catalog.representations()) {
    out += fmt::format("#EXT-X-STREAM-INF:BANDWIDTH={},AVERAGE-BANDWIDTH={},RESOLUTION={}x{},NAME=\"{}\"\n",
                       r.minBandwidthBps, r.mediaBitrateBps, widthFor(r.height), r.height, r.label);
    out += r.label + "/playlist.m3u8\n";
  }
  return out;
}

std::string
generateMediaPlaylist(const VideoCatalog& catalog, std::string_view label)
{
  catalog.representationIndex(label);
  auto target = static_cast<long>(std::ceil(catalog.segmentDurationS() - 1e-9));
  std::string out = fmt::format("#EXTM3U\n#EXT-X-VERSION:3\n#EXT-X-TARGETDURATION:{}\n"
                                "#EXT-X-MEDIA-SEQUENCE:0\n#EXT-X-PLAYLIST-TYPE:VOD\n", target);
  for (size_t k = 0; k < catalog.segmentCount(); ++k)
    out += fmt::format("#EXTINF:{:.3f},\nseg{}.m4s\n", catalog.segmentDuration(k), k);
  out += "#EXT-X-ENDLIST\n";
  return out;
}

std::vector<VariantStream>
parseMasterPlaylist(std::string_view text)
{
  auto lines = splitLines(text);
  if (lines.empty() || lines[0] != "#EXTM3U")
    throw PlaylistError("master playlist must start with #EXTM3U");

  std::vector<VariantStream> variants;
  for (size_t i = 1; i < lines.size(); ++i) {
    constexpr std::string_view tag = "#EXT-X-STREAM-INF:";
    if (!startsWith(lines[i], tag))
      continue;
    if (i + 1 >= lines.size() || startsWith(lines[i + 1], "#"))
      throw PlaylistError("variant entry without URI");

    VariantStream v;
    for (const auto& [key, value] : parseAttributes(lines[i].substr(tag.size()))) {
      if (key == "BANDWIDTH")
        v.representation.minBandwidthBps = parseUnsigned(value);
      else if (key == "AVERAGE-BANDWIDTH")
        v.representation.mediaBitrateBps = parseUnsigned(value);
      else if (key == "NAME")
        v.representation.label = value;
      else if (key == "RESOLUTION") {
        auto x = value.find('x');
        if (x == std::string::npos)
          throw PlaylistError("bad RESOLUTION");
        v.representation.height = static_cast<uint32_t>(parseUnsigned(std::string_view(value).substr(x + 1)));
      }
    }
    if (v.representation.minBandwidthBps == 0)
      throw PlaylistError("variant without BANDWIDTH");
    if (v.representation.mediaBitrateBps == 0)
      v.representation.mediaBitrateBps = v.representation.minBandwidthBps;
    v.uri = std::string(lines[++i]);
    if (v.representation.label.empty())
      v.representation.label = v.uri.substr(0, v.uri.find('/'));
    variants.push_back(std::move(v));
  }
  if (variants.empty())
    throw PlaylistError("master playlist lists no variants");
  return variants;
}

std::vector<MediaSegment>
parseMediaPlaylist(std::string_view text)
{
  auto lines = splitLines(text);
  if (lines.empty() || lines[0] != "#EXTM3U")
    throw PlaylistError("media playlist must start with #EXTM3U");

  std::vector<MediaSegment> segments;
  bool ended = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    constexpr std::string_view tag = "#EXTINF:";
    if (lines[i] == "#EXT-X-ENDLIST") {
      ended = true;
      break;
    }
    if (!startsWith(lines[i], tag))
      continue;
    auto value = lines[i].substr(tag.size());
    value = value.substr(0, value.find(','));
    std::string durationText(value);
    char* end = nullptr;
    double duration = std::strtod(durationText.c_str(), &end);
    if (end == durationText.c_str() || *end != '\0' || !(duration > 0))
      throw PlaylistError("bad #EXTINF duration '" + durationText + "'");
    if (i + 1 >= lines.size() || startsWith(lines[i + 1], "#"))
      throw PlaylistError("segment entry without URI");
    segments.push_back({duration, std::string(lines[++i])});
  }
  if (!ended)
    throw PlaylistError("media playlist lacks #EXT-X-ENDLIST");
  return segments;
}

} // namespace ndnstream::producer
