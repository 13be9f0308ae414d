#ifndef NDNSTREAM_SIM_SIMULATION_HPP
#define NDNSTREAM_SIM_SIMULATION_HPP

#include "ndnstream/sim/event-engine.hpp"
#include "ndnstream/sim/topology.hpp"

#include <memory>

namespace ndnstream::sim {

NDNSTREAM_DECLARE_ERROR(CapacityExceeded);

/// One direction of a link, as seen by hooks and reports.
struct LinkRef
{
  size_t link = 0;
  std::string from;
  std::string to;
};

/// Called for every packet handed to a link; may modify it in place.
using TamperHook = std::function<void(const LinkRef&, Packet&)>;

/// Packets an endpoint put on or took off its links.
struct EndpointCounters
{
  uint64_t interestsSent = 0;
  uint64_t interestsReceived = 0;
  uint64_t dataSent = 0;
  uint64_t dataReceived = 0;
  uint64_t nacksSent = 0;
  uint64_t nacksReceived = 0;
  uint64_t malformedDropped = 0;
};

struct LinkReport
{
  LinkRef ref;
  DirectionStats stats;
};

struct SessionOutcome
{
  std::string consumer;
  std::string video;
  consumer::SessionRecord record;
};

struct SimulationResult
{
  std::string scenarioId;
  uint64_t seed = 0;
  SimTime endTime = 0;
  uint64_t eventsExecuted = 0;
  /// Some session had not ended when the horizon stopped the run.
  bool truncated = false;
  std::vector<SessionOutcome> sessions;
  std::map<std::string, fw::ForwarderStats> forwarders;
  std::map<std::string, producer::ServerStats> servers;
  std::map<std::string, EndpointCounters> endpoints;
  std::map<std::string, size_t> prewarmed;
  std::vector<LinkReport> links;
};

/**
 * \brief A scenario wired into forwarders, file servers, player sessions
 * and links on one event engine.
 *
 * Construction validates the scenario, publishes every video and applies
 * the prewarm directives; run() drives the event loop.
 */
class Simulation
{
public:
  /// \throw InvalidScenario, InvalidTopology, CapacityExceeded
  explicit
  Simulation(Scenario scenario);

  ~Simulation();

  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  void
  setTamperHook(TamperHook hook);

  /// Runs to completion or the scenario horizon. May be called once.
  SimulationResult
  run();

  EventEngine&
  engine() noexcept
  {
    return m_engine;
  }

  const Scenario&
  scenario() const noexcept
  {
    return m_scenario;
  }

  const Topology&
  topology() const noexcept
  {
    return m_topology;
  }

  /// \throw InvalidTopology if \p id is not a forwarder
  fw::ForwarderNode&
  forwarder(const std::string& id);

  /// \throw InvalidTopology if \p id is not a producer
  const producer::Repository&
  repository(const std::string& id) const;

  /// \throw InvalidScenario for an unknown video
  const producer::VideoCatalog&
  catalog(const std::string& video) const;

  const KeyMaterial&
  key() const noexcept
  {
    return m_key;
  }

  /**
   * Inserts the first ceil(fraction x N) of the N chunks of a
   * representation's media playlist and segments, in playback order, into
   * the forwarder's Content Store. Returns the number inserted.
   * \throw CapacityExceeded if they do not all fit
   */
  size_t
  prewarm(const std::string& node, const std::string& video, const std::string& representation,
          double fraction);

  /// Full names of a representation's chunks in playback order.
  std::vector<Name>
  representationChunks(const std::string& video, const std::string& representation) const;

  /// Current snapshot of the collected statistics.
  SimulationResult
  collect() const;

private:
  struct Node;
  class ConsumerPort;

  struct Transit
  {
    Packet packet;
    bool fromCache = false;
  };

  void
  send(Node& node, size_t face, Packet packet, bool fromCache);

  void
  deliver(Node& node, size_t face, Transit transit);

  void
  deliverToForwarder(Node& node, size_t face, const Transit& transit);

  void
  deliverToProducer(Node& node, size_t face, const Transit& transit);

  void
  deliverToConsumer(Node& node, size_t face, const Transit& transit);

  Node&
  node(const std::string& id);

  const Node&
  node(const std::string& id) const;

private:
  Scenario m_scenario;
  Topology m_topology;
  KeyMaterial m_key;
  EventEngine m_engine;
  std::vector<std::array<LinkDirection, 2>> m_links;
  std::map<std::string, std::unique_ptr<Node>> m_nodes;
  std::map<std::string, producer::VideoCatalog> m_catalogs;
  std::map<std::string, size_t> m_prewarmed;
  TamperHook m_tamper;
  bool m_ran = false;
};

/// Builds and runs \p scenario.
SimulationResult
runScenario(const Scenario& scenario);

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_SIMULATION_HPP
