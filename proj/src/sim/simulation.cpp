#include "ndnstream/sim/simulation.hpp"

#include "ndnstream/core/wire.hpp"
#include "ndnstream/sim/scenario-file.hpp"

#include <fmt/core.h>

#include <cmath>
#include <random>

namespace ndnstream::sim {
namespace {

/// Per-node seed that depends only on the scenario seed and the node id.
uint64_t
nodeSeed(uint64_t seed, std::string_view id)
{
  uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace

struct Simulation::Node
{
  std::string id;
  NodeRole role = NodeRole::Forwarder;
  /// Face i+1 of the node leads through adjacency[i].
  std::vector<Adjacency> adjacency;
  /// Far end of each face and the face index it arrives on there.
  std::vector<std::pair<Node*, size_t>> peers;

  std::unique_ptr<fw::ForwarderNode> forwarder;
  std::unique_ptr<producer::Repository> repository;
  std::unique_ptr<producer::FileServer> server;
  std::unique_ptr<ConsumerPort> port;
  std::unique_ptr<consumer::PlayerSession> session;
  std::string video;
  std::optional<consumer::SessionRecord> finalRecord;
  EndpointCounters counters;

  size_t
  faceTowards(const std::string& neighbor) const
  {
    for (size_t i = 0; i < adjacency.size(); ++i) {
      if (adjacency[i].neighbor == neighbor)
        return i;
    }
    throw InvalidTopology("'" + id + "' has no link to '" + neighbor + "'");
  }
};

class Simulation::ConsumerPort : public consumer::NetworkPort
{
public:
  ConsumerPort(Simulation& sim, Node& node)
    : m_sim(sim)
    , m_node(node)
    , m_nonces(static_cast<std::mt19937::result_type>(nodeSeed(sim.m_scenario.seed, node.id)))
  {
  }

  SimTime
  now() const override
  {
    return m_sim.m_engine.now();
  }

  void
  expressInterest(const std::string& gateway, const Interest& interest) override
  {
    m_sim.send(m_node, m_node.faceTowards(gateway), interest, false);
  }

  consumer::TimerId
  schedule(double delayS, std::function<void()> callback) override
  {
    return m_sim.m_engine.scheduleAfter(delayS, std::move(callback));
  }

  void
  cancel(consumer::TimerId timer) override
  {
    m_sim.m_engine.cancel(timer);
  }

  uint32_t
  nextNonce() override
  {
    return static_cast<uint32_t>(m_nonces());
  }

private:
  Simulation& m_sim;
  Node& m_node;
  std::mt19937 m_nonces;
};

Simulation::Simulation(Scenario scenario)
  : m_scenario(std::move(scenario))
  , m_topology(Topology::build((validateScenario(m_scenario), m_scenario)))
  , m_key(KeyMaterial::fromPassphrase("/ndnstream/producer-key", m_scenario.keyPassphrase))
{
  for (const auto& l : m_scenario.links)
    m_links.push_back({LinkDirection(l.ab), LinkDirection(l.ba)});

  for (const auto& cfg : m_scenario.nodes) {
    auto n = std::make_unique<Node>();
    n->id = cfg.id;
    n->role = cfg.role;
    n->adjacency = m_topology.neighbors(cfg.id);
    switch (cfg.role) {
    case NodeRole::Forwarder:
      n->forwarder = std::make_unique<fw::ForwarderNode>(cfg.id, cfg.forwarder, nodeSeed(m_scenario.seed, cfg.id));
      for (size_t i = 0; i < n->adjacency.size(); ++i)
        n->forwarder->addFace(fw::FaceId{static_cast<uint32_t>(i + 1)});
      break;
    case NodeRole::Producer:
      n->repository = std::make_unique<producer::Repository>(m_key, cfg.producer.processingDelayMs,
                                                             cfg.producer.freshnessMs);
      n->server = std::make_unique<producer::FileServer>(*n->repository);
      break;
    case NodeRole::Consumer:
      n->port = std::make_unique<ConsumerPort>(*this, *n);
      break;
    }
    m_nodes.emplace(cfg.id, std::move(n));
  }

  for (auto& [id, n] : m_nodes) {
    for (const auto& adj : n->adjacency) {
      Node& peer = *m_nodes.at(adj.neighbor);
      n->peers.emplace_back(&peer, peer.faceTowards(id));
    }
  }

  for (const auto& [id, routes] : m_topology.routes()) {
    Node& n = node(id);
    for (const auto& r : routes) {
      try {
        n.forwarder->fib().addRoute(r.prefix, fw::FaceId{static_cast<uint32_t>(n.faceTowards(r.nextHop) + 1)}, r.cost);
      }
      catch (const fw::InvalidRoute& e) {
        throw InvalidTopology("route on '" + id + "': " + e.what());
      }
    }
  }

  for (const auto& v : m_scenario.videos) {
    try {
      auto [it, inserted] = m_catalogs.emplace(v.id, producer::packageVideo(v.id, v.durationS, v.segmentDurationS, v.tiers));
      Node& p = node(v.producer);
      const auto* cfg = m_scenario.findNode(v.producer);
      p.repository->publish(it->second, m_scenario.videoPrefix(v), cfg->producer.chunkSize, v.version);
    }
    catch (const producer::InvalidConfig& e) {
      throw InvalidScenario("video '" + v.id + "': " + e.what());
    }
  }

  for (const auto& p : m_scenario.prewarm)
    prewarm(p.node, p.video, p.representation, p.fraction);
}

Simulation::~Simulation() = default;

void
Simulation::setTamperHook(TamperHook hook)
{
  m_tamper = std::move(hook);
}

Simulation::Node&
Simulation::node(const std::string& id)
{
  auto it = m_nodes.find(id);
  if (it == m_nodes.end())
    throw InvalidTopology("unknown node '" + id + "'");
  return *it->second;
}

const Simulation::Node&
Simulation::node(const std::string& id) const
{
  auto it = m_nodes.find(id);
  if (it == m_nodes.end())
    throw InvalidTopology("unknown node '" + id + "'");
  return *it->second;
}

fw::ForwarderNode&
Simulation::forwarder(const std::string& id)
{
  Node& n = node(id);
  if (!n.forwarder)
    throw InvalidTopology("'" + id + "' is not a forwarder");
  return *n.forwarder;
}

const producer::Repository&
Simulation::repository(const std::string& id) const
{
  const Node& n = node(id);
  if (!n.repository)
    throw InvalidTopology("'" + id + "' is not a producer");
  return *n.repository;
}

const producer::VideoCatalog&
Simulation::catalog(const std::string& video) const
{
  auto it = m_catalogs.find(video);
  if (it == m_catalogs.end())
    throw InvalidScenario("unknown video '" + video + "'");
  return it->second;
}

std::vector<Name>
Simulation::representationChunks(const std::string& video, const std::string& representation) const
{
  const auto* v = m_scenario.findVideo(video);
  if (v == nullptr)
    throw InvalidScenario("unknown video '" + video + "'");
  const auto& cat = catalog(video);
  const auto& repo = repository(v->producer);
  size_t rep = cat.representationIndex(representation);

  std::vector<Name> names;
  for (const auto& file : cat.representationFiles(rep)) {
    Name base = m_scenario.videoPrefix(*v);
    for (const auto& c : file.path)
      base.append(c);
    const Data* first = repo.find(VersionedChunkName(base, v->version, 0).toName());
    if (first == nullptr)
      throw Error("chunk 0 of " + base.toUri() + " was not published");
    for (uint64_t c = 0; c <= first->finalChunk; ++c)
      names.push_back(VersionedChunkName(base, v->version, c).toName());
  }
  return names;
}

size_t
Simulation::prewarm(const std::string& nodeId, const std::string& video, const std::string& representation,
                    double fraction)
{
  if (!(fraction >= 0 && fraction <= 1))
    throw InvalidScenario("prewarm fraction must lie in [0, 1]");
  auto& cs = forwarder(nodeId).cs();
  const auto* v = m_scenario.findVideo(video);
  if (v == nullptr)
    throw InvalidScenario("unknown video '" + video + "'");
  const auto& repo = repository(v->producer);

  auto names = representationChunks(video, representation);
  auto count = static_cast<size_t>(std::ceil(fraction * static_cast<double>(names.size()) - 1e-9));
  names.resize(std::min(count, names.size()));

  size_t bytes = 0;
  for (const auto& n : names)
    bytes += encodedSize(*repo.find(n));
  if (bytes > cs.capacityBytes() - cs.usedBytes())
    throw CapacityExceeded(fmt::format("prewarming {} chunks of {} {} needs {} bytes but '{}' has {} free",
                                       names.size(), video, representation, bytes, nodeId,
                                       cs.capacityBytes() - cs.usedBytes()));
  for (const auto& n : names)
    cs.insert(*repo.find(n), m_engine.now());
  m_prewarmed[nodeId] += names.size();
  return names.size();
}

void
Simulation::send(Node& from, size_t face, Packet packet, bool fromCache)
{
  const auto& adj = from.adjacency.at(face);
  auto& direction = m_links[adj.link][adj.forward ? 0 : 1];
  if (m_tamper)
    m_tamper(LinkRef{adj.link, from.id, adj.neighbor}, packet);

  std::visit([&] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>)
      ++from.counters.interestsSent;
    else if constexpr (std::is_same_v<T, Data>)
      ++from.counters.dataSent;
    else
      ++from.counters.nacksSent;
  }, packet);

  auto arrival = direction.transmit(encodedSize(packet), m_engine.now());
  if (!arrival)
    return;
  auto [peer, peerFace] = from.peers[face];
  m_engine.schedule(*arrival, [this, peer = peer, peerFace = peerFace, &direction,
                               t = Transit{std::move(packet), fromCache}] () mutable {
    direction.markDelivered();
    deliver(*peer, peerFace, std::move(t));
  });
}

void
Simulation::deliver(Node& n, size_t face, Transit transit)
{
  if (m_scenario.wireCodec) {
    try {
      transit.packet = decodePacket(encodePacket(transit.packet));
    }
    catch (const MalformedPacket&) {
      ++n.counters.malformedDropped;
      return;
    }
  }
  std::visit([&] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>)
      ++n.counters.interestsReceived;
    else if constexpr (std::is_same_v<T, Data>)
      ++n.counters.dataReceived;
    else
      ++n.counters.nacksReceived;
  }, transit.packet);

  switch (n.role) {
  case NodeRole::Forwarder:
    return deliverToForwarder(n, face, transit);
  case NodeRole::Producer:
    return deliverToProducer(n, face, transit);
  case NodeRole::Consumer:
    return deliverToConsumer(n, face, transit);
  }
}

void
Simulation::deliverToForwarder(Node& n, size_t face, const Transit& transit)
{
  fw::FaceId from{static_cast<uint32_t>(face + 1)};
  SimTime now = m_engine.now();
  std::vector<fw::Action> actions;
  bool dataFromCache = false;
  if (const auto* interest = std::get_if<Interest>(&transit.packet)) {
    actions = n.forwarder->onInterest(from, *interest, now);
  }
  else if (const auto* data = std::get_if<Data>(&transit.packet)) {
    actions = n.forwarder->onData(from, *data, now);
    dataFromCache = transit.fromCache;
  }
  else {
    actions = n.forwarder->onNack(from, std::get<Nack>(transit.packet), now);
  }

  for (auto& action : actions) {
    std::visit([&] (auto& a) {
      using T = std::decay_t<decltype(a)>;
      size_t out = a.face.value - 1;
      if constexpr (std::is_same_v<T, fw::SendInterest>)
        send(n, out, std::move(a.interest), false);
      else if constexpr (std::is_same_v<T, fw::SendData>)
        send(n, out, std::move(a.data), a.fromCache || dataFromCache);
      else
        send(n, out, std::move(a.nack), false);
    }, action);
  }
}

void
Simulation::deliverToProducer(Node& n, size_t face, const Transit& transit)
{
  const auto* interest = std::get_if<Interest>(&transit.packet);
  if (interest == nullptr)
    return;
  auto response = n.server->handle(*interest);
  m_engine.scheduleAfter(fromMillis(response.delayMs), [this, &n, face, r = std::move(response.packet)] () mutable {
    std::visit([&] (auto& p) { send(n, face, std::move(p), false); }, r);
  });
}

void
Simulation::deliverToConsumer(Node& n, size_t face, const Transit& transit)
{
  if (!n.session)
    return;
  const auto& gateway = n.adjacency[face].neighbor;
  if (const auto* data = std::get_if<Data>(&transit.packet))
    n.session->onData(gateway, *data, consumer::DeliveryInfo{transit.fromCache});
  else if (const auto* nack = std::get_if<Nack>(&transit.packet))
    n.session->onNack(gateway, *nack);
}

SimulationResult
Simulation::run()
{
  if (m_ran)
    throw Error("a simulation runs only once");
  m_ran = true;

  for (const auto& t : m_scenario.throttles) {
    for (size_t i = 0; i < m_links.size(); ++i) {
      const auto& l = m_scenario.links[i];
      LinkDirection* direction = nullptr;
      if (l.a == t.from && l.b == t.to)
        direction = &m_links[i][0];
      else if (l.a == t.to && l.b == t.from)
        direction = &m_links[i][1];
      if (direction == nullptr)
        continue;
      for (const auto& step : t.steps)
        m_engine.schedule(step.at, [direction, bps = step.bandwidthBps] { direction->setBandwidth(bps); });
    }
  }

  for (const auto& plan : m_scenario.sessions) {
    Node& n = node(plan.consumer);
    consumer::SessionConfig cfg;
    cfg.prefix = m_scenario.namePrefix;
    cfg.videoId = plan.video;
    cfg.gateways = m_topology.directory().lookup(plan.consumer);
    cfg.fetch = plan.fetch;
    cfg.estimator = plan.estimator;
    cfg.safetyFactor = plan.safetyFactor;
    cfg.startupThresholdS = plan.startupThresholdS;
    cfg.bufferCapacityS = plan.bufferCapacityS;
    n.video = plan.video;
    n.session = std::make_unique<consumer::PlayerSession>(
      *n.port, std::move(cfg), m_scenario.verifyData ? &m_key : nullptr,
      [&n] (const consumer::SessionRecord& record) { n.finalRecord = record; });
    m_engine.schedule(plan.startAt, [&n] { n.session->start(); });
  }

  m_engine.run(m_scenario.horizonS);
  return collect();
}

SimulationResult
Simulation::collect() const
{
  SimulationResult r;
  r.scenarioId = m_scenario.id;
  r.seed = m_scenario.seed;
  r.endTime = m_engine.now();
  r.eventsExecuted = m_engine.executed();
  r.prewarmed = m_prewarmed;

  for (const auto& plan : m_scenario.sessions) {
    const Node& n = node(plan.consumer);
    if (!n.session)
      continue;
    if (n.finalRecord) {
      r.sessions.push_back({n.id, n.video, *n.finalRecord});
    }
    else {
      r.truncated = true;
      r.sessions.push_back({n.id, n.video, n.session->record()});
    }
  }

  for (const auto& [id, n] : m_nodes) {
    if (n->forwarder)
      r.forwarders[id] = n->forwarder->stats();
    if (n->server)
      r.servers[id] = n->server->stats();
    r.endpoints[id] = n->counters;
  }

  for (size_t i = 0; i < m_links.size(); ++i) {
    const auto& l = m_scenario.links[i];
    r.links.push_back({LinkRef{i, l.a, l.b}, m_links[i][0].stats()});
    r.links.push_back({LinkRef{i, l.b, l.a}, m_links[i][1].stats()});
  }
  return r;
}

SimulationResult
runScenario(const Scenario& scenario)
{
  Simulation sim(scenario);
  return sim.run();
}

} // namespace ndnstream::sim
