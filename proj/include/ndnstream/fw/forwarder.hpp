#ifndef NDNSTREAM_FW_FORWARDER_HPP
#define NDNSTREAM_FW_FORWARDER_HPP

#include "ndnstream/core/packet.hpp"
#include "ndnstream/fw/content-store.hpp"
#include "ndnstream/fw/fib.hpp"
#include "ndnstream/fw/pit.hpp"

#include <random>
#include <set>
#include <string>
#include <variant>

namespace ndnstream::fw {

NDNSTREAM_DECLARE_ERROR(UnknownFace);

enum class StrategyKind {
  BestRoute,
  GatewayPrefetch,
};

inline constexpr uint32_t DEFAULT_PREFETCH_DEPTH = 16;

struct Strategy
{
  StrategyKind kind = StrategyKind::BestRoute;
  uint32_t prefetchDepth = DEFAULT_PREFETCH_DEPTH;

  static Strategy
  bestRoute()
  {
    return {};
  }

  static Strategy
  gatewayPrefetch(uint32_t depth = DEFAULT_PREFETCH_DEPTH)
  {
    return {StrategyKind::GatewayPrefetch, depth};
  }
};

struct ForwarderConfig
{
  size_t csCapacityBytes = 0;
  Strategy strategy;
  /// When false every Interest with a fresh nonce is forwarded upstream.
  bool aggregateInterests = true;
  /// A downstream face re-expressing a pending name with a new nonce is
  /// forwarded again once this long has passed since the last upstream send.
  double retxSuppressionMs = 100.0;
};

struct SendInterest
{
  FaceId face;
  Interest interest;
  bool prefetch = false;
};

struct SendData
{
  FaceId face;
  Data data;
  bool fromCache = false;
};

struct SendNack
{
  FaceId face;
  Nack nack;
};

using Action = std::variant<SendInterest, SendData, SendNack>;

struct ForwarderStats
{
  uint64_t interestsIn = 0;
  uint64_t interestsOut = 0;
  uint64_t dataIn = 0;
  uint64_t dataOut = 0;
  uint64_t nacksIn = 0;
  uint64_t nacksOut = 0;
  uint64_t csHits = 0;
  uint64_t csMisses = 0;
  uint64_t loopsDropped = 0;
  uint64_t unsolicitedData = 0;
  uint64_t prefetchInterests = 0;
};

/**
 * \brief Per-node NDN forwarding plane.
 *
 * The node is a pure state machine: each handler consumes one packet at a
 * given time and returns the packets to send. Expired PIT entries are purged
 * at the start of every handler.
 */
class ForwarderNode
{
public:
  ForwarderNode(std::string nodeId, ForwarderConfig config, uint64_t nonceSeed = 0);

  const std::string&
  id() const noexcept
  {
    return m_id;
  }

  void
  addFace(FaceId face);

  bool
  hasFace(FaceId face) const
  {
    return m_faces.count(face) > 0;
  }

  const std::set<FaceId>&
  faces() const noexcept
  {
    return m_faces;
  }

  Fib&
  fib() noexcept
  {
    return m_fib;
  }

  const Fib&
  fib() const noexcept
  {
    return m_fib;
  }

  ContentStore&
  cs() noexcept
  {
    return m_cs;
  }

  const ContentStore&
  cs() const noexcept
  {
    return m_cs;
  }

  const Pit&
  pit() const noexcept
  {
    return m_pit;
  }

  const ForwarderConfig&
  config() const noexcept
  {
    return m_config;
  }

  const ForwarderStats&
  stats() const noexcept
  {
    return m_stats;
  }

  /// \throw UnknownFace
  std::vector<Action>
  onInterest(FaceId from, const Interest& interest, SimTime now);

  /// \throw UnknownFace
  std::vector<Action>
  onData(FaceId from, const Data& data, SimTime now);

  /// \throw UnknownFace
  std::vector<Action>
  onNack(FaceId from, const Nack& nack, SimTime now);

  /**
   * Interests for chunks after \p trigger, up to the prefetch depth and the
   * final chunk, skipping chunks already cached or pending. Empty for
   * BestRoute nodes.
   */
  std::vector<Interest>
  prefetchPlan(const Data& trigger, SimTime now);

  std::vector<Name>
  expirePit(SimTime now);

private:
  void
  requireFace(FaceId face) const;

  /// Lowest-cost next hop that is not \p exclude.
  std::optional<FaceId>
  selectNextHop(const Name& name, FaceId exclude) const;

private:
  std::string m_id;
  ForwarderConfig m_config;
  std::set<FaceId> m_faces;
  Fib m_fib;
  Pit m_pit;
  ContentStore m_cs;
  ForwarderStats m_stats;
  std::mt19937 m_nonceGen;
};

} // namespace ndnstream::fw

#endif // NDNSTREAM_FW_FORWARDER_HPP
