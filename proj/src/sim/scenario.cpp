#include "ndnstream/sim/scenario.hpp"

#include <algorithm>

namespace ndnstream::sim {

const char*
toString(NodeRole role) noexcept
{
  switch (role) {
  case NodeRole::Consumer:
    return "consumer";
  case NodeRole::Forwarder:
    return "forwarder";
  case NodeRole::Producer:
    return "producer";
  }
  return "unknown";
}

const NodeConfig*
Scenario::findNode(std::string_view id) const
{
  auto it = std::find_if(nodes.begin(), nodes.end(), [&] (const NodeConfig& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

const VideoConfig*
Scenario::findVideo(std::string_view id) const
{
  auto it = std::find_if(videos.begin(), videos.end(), [&] (const VideoConfig& v) { return v.id == id; });
  return it == videos.end() ? nullptr : &*it;
}

} // namespace ndnstream::sim
