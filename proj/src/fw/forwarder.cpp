#include "ndnstream/fw/forwarder.hpp"

namespace ndnstream::fw {

ForwarderNode::ForwarderNode(std::string nodeId, ForwarderConfig config, uint64_t nonceSeed)
  : m_id(std::move(nodeId))
  , m_config(config)
  , m_cs(config.csCapacityBytes)
  , m_nonceGen(static_cast<std::mt19937::result_type>(nonceSeed ^ (nonceSeed >> 32)))
{
}

void
ForwarderNode::addFace(FaceId face)
{
  if (face == FaceId::internal())
    throw UnknownFace("face id 0 is reserved for the internal face");
  m_faces.insert(face);
}

void
ForwarderNode::requireFace(FaceId face) const
{
  if (!hasFace(face))
    throw UnknownFace(m_id + ": unknown face " + std::to_string(face.value));
}

std::optional<FaceId>
ForwarderNode::selectNextHop(const Name& name, FaceId exclude) const
{
  const auto* entry = m_fib.findLongestPrefixMatch(name);
  if (entry == nullptr)
    return std::nullopt;
  for (const auto& hop : entry->nextHops) {
    if (hop.face != exclude)
      return hop.face;
  }
  return std::nullopt;
}

std::vector<Action>
ForwarderNode::onInterest(FaceId from, const Interest& interest, SimTime now)
{
  requireFace(from);
  expirePit(now);
  ++m_stats.interestsIn;

  auto* entry = m_pit.find(interest.name);
  if (entry != nullptr && entry->seenNonces.count(interest.nonce) > 0) {
    ++m_stats.loopsDropped;
    return {};
  }

  if (auto hit = m_cs.lookup(interest, now)) {
    ++m_stats.csHits;
    ++m_stats.dataOut;
    return {SendData{from, std::move(*hit), true}};
  }
  ++m_stats.csMisses;

  SimTime expiry = now + fromMillis(static_cast<double>(interest.lifetimeMs));
  if (entry != nullptr) {
    bool isRetx = entry->downstream.count(from) > 0;
    entry->downstream.insert(from);
    entry->seenNonces.insert(interest.nonce);
    entry->expiry = std::max(entry->expiry, expiry);

    bool forwardAgain = !m_config.aggregateInterests ||
      (isRetx && now - entry->upstreamSentAt >= fromMillis(m_config.retxSuppressionMs));
    if (!forwardAgain)
      return {};
    auto hop = selectNextHop(interest.name, from);
    if (!hop)
      return {};
    entry->upstreamSentAt = now;
    ++m_stats.interestsOut;
    return {SendInterest{*hop, interest}};
  }

  auto hop = selectNextHop(interest.name, from);
  if (!hop) {
    ++m_stats.nacksOut;
    return {SendNack{from, Nack{interest.name, NackReason::NoRoute}}};
  }

  PitEntry fresh;
  fresh.name = interest.name;
  fresh.canBePrefix = interest.canBePrefix;
  fresh.downstream.insert(from);
  fresh.seenNonces.insert(interest.nonce);
  fresh.expiry = expiry;
  fresh.upstreamSentAt = now;
  m_pit.insert(std::move(fresh));
  ++m_stats.interestsOut;
  return {SendInterest{*hop, interest}};
}

std::vector<Action>
ForwarderNode::onData(FaceId from, const Data& data, SimTime now)
{
  requireFace(from);
  expirePit(now);
  ++m_stats.dataIn;

  auto matches = m_pit.findDataMatches(data.fullName());
  if (matches.empty()) {
    ++m_stats.unsolicitedData;
    return {};
  }

  std::set<FaceId> downstream;
  for (const auto& name : matches) {
    const auto* entry = m_pit.find(name);
    downstream.insert(entry->downstream.begin(), entry->downstream.end());
    m_pit.erase(name);
  }
  m_cs.insert(data, now);

  std::vector<Action> actions;
  for (FaceId face : downstream) {
    if (face == FaceId::internal())
      continue;
    actions.push_back(SendData{face, data, false});
    ++m_stats.dataOut;
  }

  if (m_config.strategy.kind == StrategyKind::GatewayPrefetch) {
    for (auto& interest : prefetchPlan(data, now)) {
      auto hop = selectNextHop(interest.name, FaceId::internal());
      if (!hop)
        continue;
      PitEntry entry;
      entry.name = interest.name;
      entry.downstream.insert(FaceId::internal());
      entry.seenNonces.insert(interest.nonce);
      entry.expiry = now + fromMillis(static_cast<double>(interest.lifetimeMs));
      entry.upstreamSentAt = now;
      m_pit.insert(std::move(entry));
      ++m_stats.interestsOut;
      ++m_stats.prefetchInterests;
      actions.push_back(SendInterest{*hop, std::move(interest), true});
    }
  }
  return actions;
}

std::vector<Action>
ForwarderNode::onNack(FaceId from, const Nack& nack, SimTime now)
{
  requireFace(from);
  expirePit(now);
  ++m_stats.nacksIn;

  const auto* entry = m_pit.find(nack.interestName);
  if (entry == nullptr)
    return {};

  std::vector<Action> actions;
  for (FaceId face : entry->downstream) {
    if (face == FaceId::internal())
      continue;
    actions.push_back(SendNack{face, nack});
    ++m_stats.nacksOut;
  }
  m_pit.erase(nack.interestName);
  return actions;
}

std::vector<Interest>
ForwarderNode::prefetchPlan(const Data& trigger, SimTime now)
{
  if (m_config.strategy.kind != StrategyKind::GatewayPrefetch)
    return {};

  std::vector<Interest> plan;
  uint64_t first = trigger.name.chunk + 1;
  uint64_t last = std::min(trigger.name.chunk + m_config.strategy.prefetchDepth, trigger.finalChunk);
  for (uint64_t c = first; c <= last; ++c) {
    auto name = trigger.name.withChunk(c).toName();
    if (m_cs.contains(name, now) || m_pit.find(name) != nullptr)
      continue;
    Interest interest;
    interest.name = std::move(name);
    interest.nonce = m_nonceGen();
    plan.push_back(std::move(interest));
  }
  return plan;
}

std::vector<Name>
ForwarderNode::expirePit(SimTime now)
{
  return m_pit.expire(now);
}

} // namespace ndnstream::fw
