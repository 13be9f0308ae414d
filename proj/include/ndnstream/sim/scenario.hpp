#ifndef NDNSTREAM_SIM_SCENARIO_HPP
#define NDNSTREAM_SIM_SCENARIO_HPP

#include "ndnstream/consumer/player-session.hpp"
#include "ndnstream/fw/forwarder.hpp"
#include "ndnstream/metrics/metrics.hpp"
#include "ndnstream/producer/repository.hpp"
#include "ndnstream/sim/link.hpp"

#include <map>

namespace ndnstream::sim {

NDNSTREAM_DECLARE_ERROR(InvalidScenario);

enum class NodeRole {
  Consumer,
  Forwarder,
  Producer,
};

const char*
toString(NodeRole role) noexcept;

struct ProducerConfig
{
  double processingDelayMs = producer::DEFAULT_PROCESSING_DELAY_MS;
  uint64_t freshnessMs = producer::DEFAULT_FRESHNESS_MS;
  size_t chunkSize = producer::DEFAULT_CHUNK_SIZE;
};

struct NodeConfig
{
  std::string id;
  NodeRole role = NodeRole::Forwarder;
  fw::ForwarderConfig forwarder;
  ProducerConfig producer;
};

struct LinkConfig
{
  std::string a;
  std::string b;
  DirectionConfig ab;
  DirectionConfig ba;
};

struct RouteConfig
{
  std::string node;
  Name prefix;
  std::string nextHop;
  uint64_t cost = 0;
};

struct VideoConfig
{
  std::string id;
  std::string producer;
  double durationS = 60;
  double segmentDurationS = 4;
  uint64_t version = 1;
  std::vector<producer::Representation> tiers = producer::standardTierTable();
};

struct PrewarmConfig
{
  std::string node;
  std::string video;
  std::string representation;
  double fraction = 0;
};

struct ThrottleStep
{
  SimTime at = 0;
  double bandwidthBps = UNLIMITED_BANDWIDTH;
};

/// Bandwidth changes of the \c from → \c to direction of a link.
struct ThrottleConfig
{
  std::string from;
  std::string to;
  std::vector<ThrottleStep> steps;
};

struct SessionPlan
{
  std::string consumer;
  std::string video;
  SimTime startAt = 0;
  consumer::FetchOptions fetch;
  consumer::EstimatorConfig estimator;
  double safetyFactor = consumer::DEFAULT_SAFETY_FACTOR;
  double startupThresholdS = 2.0;
  double bufferCapacityS = 30.0;
};

using metrics::JitterMode;

struct Scenario
{
  std::string id = "scenario";
  uint64_t seed = 1;
  /// Stop the event loop after this much simulated time.
  std::optional<SimTime> horizonS;
  Name namePrefix = Name::parse("/ndn/web/video");
  std::string keyPassphrase = "ndnstream";
  /// Consumers check integrity tags on every Data.
  bool verifyData = true;
  /// Packets are encoded and decoded on every link hop.
  bool wireCodec = false;
  JitterMode jitter = JitterMode::MeanAbsoluteDifference;

  std::vector<NodeConfig> nodes;
  std::vector<LinkConfig> links;
  /// Shortest-propagation routes towards every producer, added after static routes.
  bool autoRoutes = true;
  std::vector<RouteConfig> routes;
  std::vector<VideoConfig> videos;
  std::vector<PrewarmConfig> prewarm;
  std::vector<ThrottleConfig> throttles;
  /// Candidate gateways per consumer; neighbours in link order when absent.
  std::map<std::string, std::vector<std::string>> fch;
  std::vector<SessionPlan> sessions;

  const NodeConfig*
  findNode(std::string_view id) const;

  const VideoConfig*
  findVideo(std::string_view id) const;

  /// Name prefix under which a video's files are published.
  Name
  videoPrefix(const VideoConfig& video) const
  {
    return namePrefix / video.id;
  }
};

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_SCENARIO_HPP
