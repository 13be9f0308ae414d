#include "ndnstream/sim/topology.hpp"

#include <fmt/core.h>

#include <queue>
#include <set>

namespace ndnstream::sim {

const std::vector<std::string>&
FchDirectory::lookup(const std::string& consumer) const
{
  auto it = m_table.find(consumer);
  if (it == m_table.end())
    throw UnknownConsumer("no gateway candidates for consumer '" + consumer + "'");
  return it->second;
}

namespace {

/// Installs shortest-propagation routes towards \p producer for \p prefix.
void
addShortestPathRoutes(const Scenario& scenario, const std::map<std::string, NodeRole>& roles,
                      const std::map<std::string, std::vector<Adjacency>>& adjacency,
                      const std::string& producer, const Name& prefix,
                      std::map<std::string, std::vector<RouteConfig>>& routes)
{
  // (delay, hops, node): lexicographic order keeps ties deterministic
  using Item = std::tuple<double, size_t, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::map<std::string, std::pair<double, size_t>> best;
  std::map<std::string, std::string> towards;
  std::set<std::string> done;
  best[producer] = {0.0, 0};
  queue.emplace(0.0, 0, producer);

  while (!queue.empty()) {
    auto [delay, hops, node] = queue.top();
    queue.pop();
    if (!done.insert(node).second)
      continue;
    // only forwarders relay; the producer is the source
    if (node != producer && roles.at(node) != NodeRole::Forwarder)
      continue;
    for (const auto& adj : adjacency.at(node)) {
      if (roles.at(adj.neighbor) != NodeRole::Forwarder)
        continue;
      // Interests travel neighbour -> node
      const auto& link = scenario.links[adj.link];
      double hop = adj.forward ? link.ba.propagationMs : link.ab.propagationMs;
      std::pair<double, size_t> candidate{delay + hop, hops + 1};
      auto it = best.find(adj.neighbor);
      if (it == best.end() || candidate < it->second) {
        best[adj.neighbor] = candidate;
        towards[adj.neighbor] = node;
        queue.emplace(candidate.first, candidate.second, adj.neighbor);
      }
    }
  }

  for (const auto& [node, nextHop] : towards) {
    auto& list = routes[node];
    bool covered = std::any_of(list.begin(), list.end(), [&] (const RouteConfig& r) { return r.prefix == prefix; });
    if (!covered)
      list.push_back(RouteConfig{node, prefix, nextHop, 0});
  }
}

} // namespace

Topology
Topology::build(const Scenario& scenario)
{
  Topology t;
  for (const auto& n : scenario.nodes) {
    if (n.id.empty())
      throw InvalidTopology("node with an empty id");
    if (!t.m_roles.emplace(n.id, n.role).second)
      throw InvalidTopology("duplicate node '" + n.id + "'");
    t.m_adjacency[n.id];
  }

  std::set<std::pair<std::string, std::string>> linked;
  for (size_t i = 0; i < scenario.links.size(); ++i) {
    const auto& l = scenario.links[i];
    for (const auto* end : {&l.a, &l.b}) {
      if (t.m_roles.count(*end) == 0)
        throw InvalidTopology(fmt::format("link {} references unknown node '{}'", i, *end));
    }
    if (l.a == l.b)
      throw InvalidTopology("link connects '" + l.a + "' to itself");
    if (!linked.insert(std::minmax(l.a, l.b)).second)
      throw InvalidTopology("duplicate link between '" + l.a + "' and '" + l.b + "'");
    if (t.m_roles[l.a] != NodeRole::Forwarder && t.m_roles[l.b] != NodeRole::Forwarder)
      throw InvalidTopology("link between '" + l.a + "' and '" + l.b + "' has no forwarder end");
    t.m_adjacency[l.a].push_back({l.b, i, true});
    t.m_adjacency[l.b].push_back({l.a, i, false});
  }
  t.m_linkCount = scenario.links.size();

  for (const auto& r : scenario.routes) {
    auto it = t.m_roles.find(r.node);
    if (it == t.m_roles.end() || it->second != NodeRole::Forwarder)
      throw InvalidTopology("route on '" + r.node + "', which is not a forwarder");
    const auto& adj = t.m_adjacency[r.node];
    if (std::none_of(adj.begin(), adj.end(), [&] (const Adjacency& a) { return a.neighbor == r.nextHop; }))
      throw InvalidTopology("route on '" + r.node + "' via non-neighbour '" + r.nextHop + "'");
    t.m_routes[r.node].push_back(r);
  }

  for (const auto& v : scenario.videos) {
    auto it = t.m_roles.find(v.producer);
    if (it == t.m_roles.end() || it->second != NodeRole::Producer)
      throw InvalidTopology("video '" + v.id + "' is served by '" + v.producer + "', which is not a producer");
    if (scenario.autoRoutes)
      addShortestPathRoutes(scenario, t.m_roles, t.m_adjacency, v.producer, scenario.videoPrefix(v), t.m_routes);
  }

  std::map<std::string, std::vector<std::string>> table;
  for (const auto& [node, role] : t.m_roles) {
    if (role != NodeRole::Consumer)
      continue;
    auto configured = scenario.fch.find(node);
    if (configured != scenario.fch.end()) {
      table[node] = configured->second;
    }
    else {
      for (const auto& adj : t.m_adjacency[node])
        table[node].push_back(adj.neighbor);
    }
    if (table[node].empty())
      throw InvalidTopology("consumer '" + node + "' has no gateway candidates");
    for (const auto& gw : table[node]) {
      const auto& adj = t.m_adjacency[node];
      if (std::none_of(adj.begin(), adj.end(), [&] (const Adjacency& a) { return a.neighbor == gw; }))
        throw InvalidTopology("gateway candidate '" + gw + "' is not a neighbour of '" + node + "'");
    }
  }
  for (const auto& [consumer, gateways] : scenario.fch) {
    auto it = t.m_roles.find(consumer);
    if (it == t.m_roles.end() || it->second != NodeRole::Consumer)
      throw InvalidTopology("directory entry for '" + consumer + "', which is not a consumer");
  }
  t.m_directory = FchDirectory(std::move(table));

  for (const auto& [consumer, gateways] : t.m_directory.table()) {
    for (const auto& gw : gateways) {
      for (const auto& v : scenario.videos) {
        auto path = t.forwardingPath(consumer, gw, scenario.videoPrefix(v) / "playlist.m3u8");
        if (path.back() != v.producer)
          throw InvalidTopology(fmt::format("'{}' via '{}' reaches '{}' instead of '{}' for video '{}'",
                                            consumer, gw, path.back(), v.producer, v.id));
      }
    }
  }
  return t;
}

const std::vector<Adjacency>&
Topology::neighbors(const std::string& node) const
{
  auto it = m_adjacency.find(node);
  if (it == m_adjacency.end())
    throw InvalidTopology("unknown node '" + node + "'");
  return it->second;
}

NodeRole
Topology::role(const std::string& node) const
{
  auto it = m_roles.find(node);
  if (it == m_roles.end())
    throw InvalidTopology("unknown node '" + node + "'");
  return it->second;
}

std::vector<std::string>
Topology::forwardingPath(const std::string& consumer, const std::string& gateway, const Name& name) const
{
  std::vector<std::string> path{consumer};
  std::string previous = consumer;
  std::string current = gateway;
  std::set<std::string> visited{consumer};
  while (true) {
    if (!visited.insert(current).second)
      throw InvalidTopology("forwarding loop at '" + current + "' for " + name.toUri());
    path.push_back(current);
    NodeRole r = role(current);
    if (r == NodeRole::Producer)
      return path;
    if (r == NodeRole::Consumer)
      throw InvalidTopology("Interests for " + name.toUri() + " are routed into consumer '" + current + "'");

    // longest matching prefix, then its lowest-cost hop other than the incoming neighbour
    const RouteConfig* chosen = nullptr;
    auto it = m_routes.find(current);
    if (it != m_routes.end()) {
      std::optional<size_t> longest;
      for (const auto& route : it->second) {
        if (route.prefix.isPrefixOf(name) && (!longest || route.prefix.size() > *longest))
          longest = route.prefix.size();
      }
      for (const auto& route : it->second) {
        if (!longest || route.prefix.size() != *longest || !route.prefix.isPrefixOf(name) ||
            route.nextHop == previous)
          continue;
        if (chosen == nullptr || route.cost < chosen->cost)
          chosen = &route;
      }
    }
    if (chosen == nullptr)
      throw InvalidTopology("no route for " + name.toUri() + " at '" + current + "'");
    previous = current;
    current = chosen->nextHop;
  }
}

} // namespace ndnstream::sim
