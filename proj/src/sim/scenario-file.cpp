#include "ndnstream/sim/scenario-file.hpp"

#include <fmt/core.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ndnstream::sim {
namespace {

double
mbps(double value)
{
  return value * 1e6;
}

/// A YAML mapping whose keys must all be consumed.
class Section
{
public:
  Section(const YAML::Node& node, std::string path)
    : m_node(node)
    , m_path(std::move(path))
  {
    if (!node.IsMap())
      throw InvalidScenario(m_path + ": expected a mapping");
  }

  const std::string&
  path() const noexcept
  {
    return m_path;
  }

  bool
  has(const std::string& key) const
  {
    return static_cast<bool>(m_node[key]);
  }

  YAML::Node
  child(const std::string& key)
  {
    m_used.insert(key);
    return m_node[key];
  }

  std::string
  keyPath(const std::string& key) const
  {
    return m_path.empty() ? key : m_path + "." + key;
  }

  template<typename T>
  T
  require(const std::string& key)
  {
    if (!has(key))
      throw InvalidScenario(keyPath(key) + ": required key is missing");
    return convert<T>(key);
  }

  template<typename T>
  T
  get(const std::string& key, T fallback)
  {
    if (!has(key)) {
      m_used.insert(key);
      return fallback;
    }
    return convert<T>(key);
  }

  template<typename T>
  std::optional<T>
  optional(const std::string& key)
  {
    if (!has(key)) {
      m_used.insert(key);
      return std::nullopt;
    }
    return convert<T>(key);
  }

  double
  positive(const std::string& key, double fallback)
  {
    double v = get<double>(key, fallback);
    if (!(v > 0) || !std::isfinite(v))
      throw InvalidScenario(keyPath(key) + ": must be a positive number");
    return v;
  }

  double
  nonNegative(const std::string& key, double fallback)
  {
    double v = get<double>(key, fallback);
    if (!(v >= 0) || !std::isfinite(v))
      throw InvalidScenario(keyPath(key) + ": must be a non-negative number");
    return v;
  }

  /// Rejects keys that were never read.
  void
  finish() const
  {
    for (const auto& kv : m_node) {
      auto key = kv.first.as<std::string>();
      if (m_used.count(key) == 0)
        throw InvalidScenario(keyPath(key) + ": unknown key");
    }
  }

private:
  template<typename T>
  T
  convert(const std::string& key)
  {
    m_used.insert(key);
    const YAML::Node value = m_node[key];
    if constexpr (std::is_unsigned_v<T>) {
      // yaml-cpp wraps negative literals into unsigned types
      if (value.IsScalar() && !value.Scalar().empty() && value.Scalar().front() == '-')
        throw InvalidScenario(keyPath(key) + ": must not be negative");
    }
    try {
      if (!value.IsScalar())
        throw YAML::BadConversion(value.Mark());
      return value.as<T>();
    }
    catch (const YAML::Exception&) {
      throw InvalidScenario(keyPath(key) + ": has the wrong type");
    }
  }

private:
  YAML::Node m_node;
  std::string m_path;
  std::set<std::string> m_used;
};

std::vector<YAML::Node>
sequence(const YAML::Node& node, const std::string& path)
{
  if (!node)
    return {};
  if (!node.IsSequence())
    throw InvalidScenario(path + ": expected a list");
  return std::vector<YAML::Node>(node.begin(), node.end());
}

Name
parseName(const std::string& text, const std::string& path)
{
  try {
    return Name::parse(text);
  }
  catch (const Error& e) {
    throw InvalidScenario(path + ": " + e.what());
  }
}

NodeRole
parseRole(const std::string& text, const std::string& path)
{
  if (text == "consumer")
    return NodeRole::Consumer;
  if (text == "forwarder")
    return NodeRole::Forwarder;
  if (text == "producer")
    return NodeRole::Producer;
  throw InvalidScenario(path + ": role must be consumer, forwarder or producer, not '" + text + "'");
}

NodeConfig
parseNode(const YAML::Node& yaml, const std::string& path)
{
  Section s(yaml, path);
  NodeConfig n;
  n.id = s.require<std::string>("id");
  n.role = parseRole(s.require<std::string>("role"), s.keyPath("role"));

  if (n.role == NodeRole::Forwarder) {
    n.forwarder.csCapacityBytes = s.get<uint64_t>("cs_capacity_bytes", 0);
    auto strategy = s.get<std::string>("strategy", "best-route");
    if (strategy == "best-route")
      n.forwarder.strategy = fw::Strategy::bestRoute();
    else if (strategy == "gateway-prefetch")
      n.forwarder.strategy = fw::Strategy::gatewayPrefetch();
    else
      throw InvalidScenario(s.keyPath("strategy") + ": must be best-route or gateway-prefetch");
    n.forwarder.strategy.prefetchDepth = s.get<uint32_t>("prefetch_depth", fw::DEFAULT_PREFETCH_DEPTH);
    n.forwarder.aggregateInterests = s.get<bool>("aggregate_interests", true);
    n.forwarder.retxSuppressionMs = s.nonNegative("retx_suppression_ms", n.forwarder.retxSuppressionMs);
  }
  else if (n.role == NodeRole::Producer) {
    n.producer.processingDelayMs = s.nonNegative("processing_delay_ms", n.producer.processingDelayMs);
    n.producer.freshnessMs = s.get<uint64_t>("freshness_ms", n.producer.freshnessMs);
    n.producer.chunkSize = s.get<uint64_t>("chunk_size", n.producer.chunkSize);
    if (n.producer.chunkSize == 0)
      throw InvalidScenario(s.keyPath("chunk_size") + ": must be positive");
  }
  s.finish();
  return n;
}

void
parseDirection(Section& s, DirectionConfig& d)
{
  d.propagationMs = s.nonNegative("propagation_ms", d.propagationMs);
  if (s.has("bandwidth_mbps"))
    d.bandwidthBps = mbps(s.positive("bandwidth_mbps", 1));
  else
    s.child("bandwidth_mbps");
  if (auto limit = s.optional<uint64_t>("queue_limit_bytes"))
    d.queueLimitBytes = *limit;
}

LinkConfig
parseLink(const YAML::Node& yaml, const std::string& path)
{
  Section s(yaml, path);
  LinkConfig l;
  auto ends = s.child("between");
  if (!ends || !ends.IsSequence() || ends.size() != 2)
    throw InvalidScenario(s.keyPath("between") + ": expected a list of two node ids");
  try {
    l.a = ends[0].as<std::string>();
    l.b = ends[1].as<std::string>();
  }
  catch (const YAML::Exception&) {
    throw InvalidScenario(s.keyPath("between") + ": expected a list of two node ids");
  }
  parseDirection(s, l.ab);
  l.ba = l.ab;
  if (auto reverse = s.child("reverse")) {
    Section r(reverse, s.keyPath("reverse"));
    parseDirection(r, l.ba);
    r.finish();
  }
  s.finish();
  return l;
}

producer::Representation
parseTier(const YAML::Node& yaml, const std::string& path)
{
  Section s(yaml, path);
  producer::Representation r;
  r.label = s.require<std::string>("label");
  r.height = s.require<uint32_t>("height");
  r.minBandwidthBps = static_cast<uint64_t>(std::llround(mbps(s.positive("min_bandwidth_mbps", 1))));
  double media = s.has("media_bitrate_mbps") ? s.positive("media_bitrate_mbps", 1)
                                             : s.positive("min_bandwidth_mbps", 1);
  r.mediaBitrateBps = static_cast<uint64_t>(std::llround(mbps(media)));
  s.finish();
  return r;
}

VideoConfig
parseVideo(const YAML::Node& yaml, const std::string& path)
{
  Section s(yaml, path);
  VideoConfig v;
  v.id = s.require<std::string>("id");
  v.producer = s.require<std::string>("producer");
  v.durationS = s.positive("duration_s", v.durationS);
  v.segmentDurationS = s.positive("segment_duration_s", v.segmentDurationS);
  v.version = s.get<uint64_t>("version", v.version);
  auto tiers = s.child("tiers");
  if (tiers) {
    if (tiers.IsScalar() && tiers.Scalar() == "standard") {
      v.tiers = producer::standardTierTable();
    }
    else {
      v.tiers.clear();
      auto items = sequence(tiers, s.keyPath("tiers"));
      for (size_t i = 0; i < items.size(); ++i)
        v.tiers.push_back(parseTier(items[i], fmt::format("{}[{}]", s.keyPath("tiers"), i)));
    }
  }
  s.finish();
  return v;
}

SessionPlan
parseSession(const YAML::Node& yaml, const std::string& path)
{
  Section s(yaml, path);
  SessionPlan p;
  p.consumer = s.require<std::string>("consumer");
  p.video = s.require<std::string>("video");
  p.startAt = s.nonNegative("start_s", 0);
  p.fetch.window = s.get<uint32_t>("window", p.fetch.window);
  if (p.fetch.window == 0)
    throw InvalidScenario(s.keyPath("window") + ": must be at least 1");
  p.fetch.rtoMs = s.positive("rto_ms", p.fetch.rtoMs);
  p.fetch.maxRetx = s.get<uint32_t>("max_retx", p.fetch.maxRetx);
  p.estimator.fastHalfLifeS = s.positive("half_life_fast_s", p.estimator.fastHalfLifeS);
  p.estimator.slowHalfLifeS = s.positive("half_life_slow_s", p.estimator.slowHalfLifeS);
  p.safetyFactor = s.positive("safety_factor", p.safetyFactor);
  if (p.safetyFactor > 1)
    throw InvalidScenario(s.keyPath("safety_factor") + ": must lie in (0, 1]");
  p.startupThresholdS = s.nonNegative("startup_threshold_s", p.startupThresholdS);
  p.bufferCapacityS = s.positive("buffer_capacity_s", p.bufferCapacityS);
  s.finish();
  return p;
}

Scenario
parseRoot(const YAML::Node& root)
{
  Section s(root, "");
  Scenario sc;
  sc.id = s.get<std::string>("id", sc.id);
  sc.seed = s.get<uint64_t>("seed", sc.seed);
  if (s.has("horizon_s"))
    sc.horizonS = s.positive("horizon_s", 1);
  else
    s.child("horizon_s");
  sc.namePrefix = parseName(s.get<std::string>("name_prefix", sc.namePrefix.toUri()), "name_prefix");
  sc.wireCodec = s.get<bool>("wire_codec", sc.wireCodec);
  auto jitter = s.get<std::string>("jitter", "mad");
  if (jitter == "mad")
    sc.jitter = JitterMode::MeanAbsoluteDifference;
  else if (jitter == "var")
    sc.jitter = JitterMode::Variance;
  else
    throw InvalidScenario("jitter: must be mad or var");

  if (auto integrity = s.child("integrity")) {
    Section i(integrity, "integrity");
    sc.keyPassphrase = i.get<std::string>("passphrase", sc.keyPassphrase);
    sc.verifyData = i.get<bool>("verify", sc.verifyData);
    i.finish();
  }

  auto nodes = sequence(s.child("nodes"), "nodes");
  for (size_t i = 0; i < nodes.size(); ++i)
    sc.nodes.push_back(parseNode(nodes[i], fmt::format("nodes[{}]", i)));

  auto links = sequence(s.child("links"), "links");
  for (size_t i = 0; i < links.size(); ++i)
    sc.links.push_back(parseLink(links[i], fmt::format("links[{}]", i)));

  if (auto routes = s.child("routes")) {
    Section r(routes, "routes");
    sc.autoRoutes = r.get<bool>("auto", sc.autoRoutes);
    auto items = sequence(r.child("static"), "routes.static");
    for (size_t i = 0; i < items.size(); ++i) {
      Section e(items[i], fmt::format("routes.static[{}]", i));
      RouteConfig rc;
      rc.node = e.require<std::string>("node");
      rc.prefix = parseName(e.require<std::string>("prefix"), e.keyPath("prefix"));
      rc.nextHop = e.require<std::string>("next_hop");
      rc.cost = e.get<uint64_t>("cost", 0);
      e.finish();
      sc.routes.push_back(std::move(rc));
    }
    r.finish();
  }

  auto videos = sequence(s.child("videos"), "videos");
  for (size_t i = 0; i < videos.size(); ++i)
    sc.videos.push_back(parseVideo(videos[i], fmt::format("videos[{}]", i)));

  auto prewarm = sequence(s.child("prewarm"), "prewarm");
  for (size_t i = 0; i < prewarm.size(); ++i) {
    Section p(prewarm[i], fmt::format("prewarm[{}]", i));
    PrewarmConfig pc;
    pc.node = p.require<std::string>("node");
    pc.video = p.require<std::string>("video");
    pc.representation = p.require<std::string>("representation");
    pc.fraction = p.require<double>("fraction");
    p.finish();
    sc.prewarm.push_back(std::move(pc));
  }

  auto throttles = sequence(s.child("throttles"), "throttles");
  for (size_t i = 0; i < throttles.size(); ++i) {
    Section t(throttles[i], fmt::format("throttles[{}]", i));
    ThrottleConfig tc;
    tc.from = t.require<std::string>("from");
    tc.to = t.require<std::string>("to");
    auto steps = sequence(t.child("steps"), t.keyPath("steps"));
    for (size_t k = 0; k < steps.size(); ++k) {
      Section st(steps[k], fmt::format("{}[{}]", t.keyPath("steps"), k));
      ThrottleStep step;
      step.at = st.nonNegative("at_s", 0);
      step.bandwidthBps = mbps(st.positive("bandwidth_mbps", 1));
      st.finish();
      tc.steps.push_back(step);
    }
    t.finish();
    sc.throttles.push_back(std::move(tc));
  }

  if (auto fch = s.child("fch")) {
    if (!fch.IsMap())
      throw InvalidScenario("fch: expected a mapping from consumer to gateway list");
    for (const auto& kv : fch) {
      auto consumer = kv.first.as<std::string>();
      auto path = "fch." + consumer;
      std::vector<std::string> gateways;
      for (const auto& g : sequence(kv.second, path)) {
        if (!g.IsScalar())
          throw InvalidScenario(path + ": expected node ids");
        gateways.push_back(g.as<std::string>());
      }
      sc.fch[consumer] = std::move(gateways);
    }
  }

  auto sessions = sequence(s.child("sessions"), "sessions");
  for (size_t i = 0; i < sessions.size(); ++i)
    sc.sessions.push_back(parseSession(sessions[i], fmt::format("sessions[{}]", i)));

  s.finish();
  return sc;
}

} // namespace

Scenario
parseScenario(std::string_view text)
{
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  }
  catch (const YAML::Exception& e) {
    throw InvalidScenario(std::string("not valid YAML: ") + e.what());
  }
  if (!root || root.IsNull())
    throw InvalidScenario("empty scenario");
  Scenario sc = parseRoot(root);
  validateScenario(sc);
  return sc;
}

Scenario
loadScenarioFile(const std::filesystem::path& file)
{
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw InvalidScenario("cannot read scenario file '" + file.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parseScenario(text.str());
}

void
validateScenario(const Scenario& sc)
{
  if (sc.nodes.empty())
    throw InvalidScenario("nodes: at least one node is required");

  std::set<std::string> videoIds;
  for (const auto& v : sc.videos) {
    if (v.id.empty() || v.id.find('/') != std::string::npos)
      throw InvalidScenario("videos: id '" + v.id + "' must be a single name component");
    if (!videoIds.insert(v.id).second)
      throw InvalidScenario("videos: duplicate id '" + v.id + "'");
    if (v.tiers.empty())
      throw InvalidScenario("videos." + v.id + ": needs at least one tier");
  }

  std::set<std::string> busyConsumers;
  for (const auto& p : sc.sessions) {
    const auto* node = sc.findNode(p.consumer);
    if (node == nullptr || node->role != NodeRole::Consumer)
      throw InvalidScenario("sessions: '" + p.consumer + "' is not a consumer node");
    if (sc.findVideo(p.video) == nullptr)
      throw InvalidScenario("sessions: unknown video '" + p.video + "'");
    if (!busyConsumers.insert(p.consumer).second)
      throw InvalidScenario("sessions: consumer '" + p.consumer + "' has more than one session");
    if (p.startupThresholdS > p.bufferCapacityS)
      throw InvalidScenario("sessions: startup threshold of '" + p.consumer + "' exceeds its buffer capacity");
  }

  for (const auto& p : sc.prewarm) {
    const auto* node = sc.findNode(p.node);
    if (node == nullptr || node->role != NodeRole::Forwarder)
      throw InvalidScenario("prewarm: '" + p.node + "' is not a forwarder");
    const auto* video = sc.findVideo(p.video);
    if (video == nullptr)
      throw InvalidScenario("prewarm: unknown video '" + p.video + "'");
    if (std::none_of(video->tiers.begin(), video->tiers.end(),
                     [&] (const auto& t) { return t.label == p.representation; }))
      throw InvalidScenario("prewarm: video '" + p.video + "' has no representation '" + p.representation + "'");
    if (!(p.fraction >= 0 && p.fraction <= 1))
      throw InvalidScenario("prewarm: fraction must lie in [0, 1]");
  }

  for (const auto& t : sc.throttles) {
    bool exists = std::any_of(sc.links.begin(), sc.links.end(), [&] (const LinkConfig& l) {
      return (l.a == t.from && l.b == t.to) || (l.a == t.to && l.b == t.from);
    });
    if (!exists)
      throw InvalidScenario("throttles: no link between '" + t.from + "' and '" + t.to + "'");
    for (size_t i = 1; i < t.steps.size(); ++i) {
      if (!(t.steps[i].at > t.steps[i - 1].at))
        throw InvalidScenario("throttles: step times of '" + t.from + "' -> '" + t.to + "' must increase strictly");
    }
  }
}

} // namespace ndnstream::sim
