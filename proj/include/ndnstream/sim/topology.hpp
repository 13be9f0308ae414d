#ifndef NDNSTREAM_SIM_TOPOLOGY_HPP
#define NDNSTREAM_SIM_TOPOLOGY_HPP

#include "ndnstream/sim/scenario.hpp"

namespace ndnstream::sim {

NDNSTREAM_DECLARE_ERROR(InvalidTopology);
NDNSTREAM_DECLARE_ERROR(UnknownConsumer);

/// Static "closest hub" table: consumer id to candidate gateways in preference order.
class FchDirectory
{
public:
  FchDirectory() = default;

  explicit
  FchDirectory(std::map<std::string, std::vector<std::string>> table)
    : m_table(std::move(table))
  {
  }

  /// \throw UnknownConsumer
  const std::vector<std::string>&
  lookup(const std::string& consumer) const;

  const std::map<std::string, std::vector<std::string>>&
  table() const noexcept
  {
    return m_table;
  }

private:
  std::map<std::string, std::vector<std::string>> m_table;
};

struct Adjacency
{
  std::string neighbor;
  size_t link = 0;
  /// True when this node is the link's \c a end.
  bool forward = true;
};

/**
 * \brief Validated wiring of a scenario: adjacency, the FIB routes of every
 * forwarder, and the gateway directory.
 */
class Topology
{
public:
  /**
   * \throw InvalidTopology on duplicate or unknown node ids, self or
   * duplicate links, routes through non-neighbours, bad gateway candidates, or
   * a published prefix that some consumer cannot reach through some candidate
   */
  static Topology
  build(const Scenario& scenario);

  const std::vector<Adjacency>&
  neighbors(const std::string& node) const;

  /// Routes per forwarder id, static ones first.
  const std::map<std::string, std::vector<RouteConfig>>&
  routes() const noexcept
  {
    return m_routes;
  }

  const FchDirectory&
  directory() const noexcept
  {
    return m_directory;
  }

  NodeRole
  role(const std::string& node) const;

  size_t
  linkCount() const noexcept
  {
    return m_linkCount;
  }

  /**
   * Node sequence an Interest for \p name takes from \p consumer through
   * \p gateway under best-route forwarding, ending at a producer.
   * \throw InvalidTopology if the walk dead-ends or loops
   */
  std::vector<std::string>
  forwardingPath(const std::string& consumer, const std::string& gateway, const Name& name) const;

private:
  std::map<std::string, NodeRole> m_roles;
  std::map<std::string, std::vector<Adjacency>> m_adjacency;
  std::map<std::string, std::vector<RouteConfig>> m_routes;
  FchDirectory m_directory;
  size_t m_linkCount = 0;
};

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_TOPOLOGY_HPP
