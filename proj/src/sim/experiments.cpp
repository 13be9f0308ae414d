#include "ndnstream/sim/experiments.hpp"

namespace ndnstream::sim::experiments {
namespace {

constexpr double MBPS = 1e6;

NodeConfig
consumerNode(std::string id)
{
  NodeConfig n;
  n.id = std::move(id);
  n.role = NodeRole::Consumer;
  return n;
}

NodeConfig
forwarderNode(std::string id, size_t csBytes, fw::Strategy strategy = fw::Strategy::bestRoute())
{
  NodeConfig n;
  n.id = std::move(id);
  n.role = NodeRole::Forwarder;
  n.forwarder.csCapacityBytes = csBytes;
  n.forwarder.strategy = strategy;
  return n;
}

NodeConfig
producerNode(std::string id)
{
  NodeConfig n;
  n.id = std::move(id);
  n.role = NodeRole::Producer;
  return n;
}

LinkConfig
link(std::string a, std::string b, double propagationMs, double bandwidthBps)
{
  LinkConfig l;
  l.a = std::move(a);
  l.b = std::move(b);
  l.ab.propagationMs = propagationMs;
  l.ab.bandwidthBps = bandwidthBps;
  l.ba = l.ab;
  return l;
}

VideoConfig
video(double durationS, std::vector<producer::Representation> tiers = producer::standardTierTable())
{
  VideoConfig v;
  v.id = "foo";
  v.producer = "server";
  v.durationS = durationS;
  v.segmentDurationS = 4.0;
  v.tiers = std::move(tiers);
  return v;
}

SessionPlan
session(std::string consumer, SimTime startAt = 0)
{
  SessionPlan p;
  p.consumer = std::move(consumer);
  p.video = "foo";
  p.startAt = startAt;
  return p;
}

/// consumer - gw - server with the video used by the cache experiments.
Scenario
cacheChain(std::string id, size_t csBytes, fw::Strategy strategy)
{
  Scenario s;
  s.id = std::move(id);
  s.nodes = {consumerNode("consumer"), forwarderNode("gw", csBytes, strategy), producerNode("server")};
  s.links = {link("consumer", "gw", 20, 100 * MBPS), link("gw", "server", 35, 100 * MBPS)};
  s.videos = {video(240)};
  s.sessions = {session("consumer")};
  return s;
}

/// Gateway capacity for the cache experiments: the prewarm set plus a little headroom.
constexpr size_t CACHE_CAPACITY_BYTES = 106'000'000;

} // namespace

const std::vector<std::string>&
names()
{
  static const std::vector<std::string> list{"abr-staircase", "no-cache", "with-cache", "prefetch", "multicast"};
  return list;
}

Scenario
make(std::string_view name)
{
  if (name == "abr-staircase")
    return abrStaircase();
  if (name == "no-cache")
    return noCache();
  if (name == "with-cache")
    return withCache();
  if (name == "prefetch")
    return prefetch();
  if (name == "multicast")
    return multicast();
  throw UnknownExperiment("unknown experiment '" + std::string(name) + "'");
}

std::vector<double>
staircaseRatesBps()
{
  return {20 * MBPS, 8 * MBPS, 5 * MBPS, 2.5 * MBPS, 1.5 * MBPS, 0.8 * MBPS,
          1.5 * MBPS, 2.5 * MBPS, 5 * MBPS, 8 * MBPS, 20 * MBPS};
}

Scenario
abrStaircase()
{
  Scenario s;
  s.id = "abr-staircase";
  s.nodes = {consumerNode("consumer"), forwarderNode("gw", 0), producerNode("server")};
  s.links = {link("consumer", "gw", 2, 100 * MBPS), link("gw", "server", 5, 100 * MBPS)};
  auto rates = staircaseRatesBps();
  s.videos = {video(STAIRCASE_DWELL_S * static_cast<double>(rates.size()) + 40)};

  ThrottleConfig egress;
  egress.from = "server";
  egress.to = "gw";
  for (size_t i = 0; i < rates.size(); ++i)
    egress.steps.push_back({STAIRCASE_DWELL_S * static_cast<double>(i), rates[i]});
  s.throttles = {egress};
  s.sessions = {session("consumer")};
  return s;
}

Scenario
noCache()
{
  return cacheChain("no-cache", 0, fw::Strategy::bestRoute());
}

Scenario
withCache()
{
  auto s = cacheChain("with-cache", CACHE_CAPACITY_BYTES, fw::Strategy::bestRoute());
  s.prewarm = {PrewarmConfig{"gw", "foo", "720p", 0.92}};
  return s;
}

Scenario
prefetch(uint32_t depth)
{
  auto s = cacheChain("prefetch", CACHE_CAPACITY_BYTES, fw::Strategy::gatewayPrefetch(depth));
  s.prewarm = {PrewarmConfig{"gw", "foo", "720p", 0.92}};
  return s;
}

Scenario
multicast(bool baseline)
{
  Scenario s;
  s.id = baseline ? "multicast-baseline" : "multicast";
  auto gw = forwarderNode("gw", baseline ? 0 : 200'000'000);
  gw.forwarder.aggregateInterests = !baseline;
  s.nodes = {consumerNode("alice"), consumerNode("bob"), gw, producerNode("server")};
  s.links = {link("alice", "gw", 10, 100 * MBPS), link("bob", "gw", 10, 100 * MBPS),
             link("gw", "server", 20, 100 * MBPS)};
  s.videos = {video(60)};
  // bob starts 20 ms after alice, well within one 61 ms round trip
  s.sessions = {session("alice", 0.0), session("bob", 0.02)};
  return s;
}

Scenario
startup()
{
  Scenario s;
  s.id = "startup";
  s.nodes = {consumerNode("consumer"), forwarderNode("gw", 0), producerNode("server")};
  auto bottleneck = link("gw", "server", 20, 100 * MBPS);
  bottleneck.ba.bandwidthBps = 2 * MBPS;
  s.links = {link("consumer", "gw", 5, 100 * MBPS), bottleneck};
  s.videos = {video(40, {producer::standardTierTable().front()})};
  s.sessions = {session("consumer")};
  return s;
}

Scenario
rttCalibration()
{
  Scenario s;
  s.id = "rtt-calibration";
  s.nodes = {consumerNode("consumer"), forwarderNode("gw", 0), producerNode("server")};
  s.links = {link("consumer", "gw", 10, 1000 * MBPS), link("gw", "server", 30, 1000 * MBPS)};
  s.videos = {video(40)};
  s.sessions = {session("consumer")};
  return s;
}

} // namespace ndnstream::sim::experiments
