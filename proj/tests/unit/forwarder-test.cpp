#include "generators.hpp"

#include "ndnstream/fw/forwarder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace ndnstream::fw {
namespace {

constexpr FaceId UP{1};
constexpr FaceId DOWN_A{2};
constexpr FaceId DOWN_B{3};

const Name F = Name::parse("/pfx/f");

ForwarderNode
makeNode(ForwarderConfig config = {1'000'000, Strategy::bestRoute(), true, 100.0})
{
  ForwarderNode node("gw", config, 7);
  for (auto f : {UP, DOWN_A, DOWN_B})
    node.addFace(f);
  node.fib().addRoute(Name::parse("/pfx"), UP, 0);
  return node;
}

template<typename T>
std::vector<T>
only(const std::vector<Action>& actions)
{
  std::vector<T> out;
  for (const auto& a : actions) {
    if (const auto* x = std::get_if<T>(&a))
      out.push_back(*x);
  }
  return out;
}

Interest
chunkInterest(uint64_t c, uint32_t nonce)
{
  return Interest::forChunk(VersionedChunkName(F, 1, c), nonce);
}

TEST(Forwarder, AggregatesSameNameFromTwoFaces)
{
  auto node = makeNode();
  auto a = node.onInterest(DOWN_A, chunkInterest(0, 1), 0);
  auto b = node.onInterest(DOWN_B, chunkInterest(0, 2), 0.001);
  ASSERT_EQ(only<SendInterest>(a).size(), 1u);
  EXPECT_EQ(only<SendInterest>(a)[0].face, UP);
  EXPECT_TRUE(b.empty());
  EXPECT_EQ(node.stats().interestsOut, 1u);
}

TEST(Forwarder, ReplayedNonceIsDropped)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, chunkInterest(0, 9), 0);
  EXPECT_TRUE(node.onInterest(DOWN_B, chunkInterest(0, 9), 0.01).empty());
  EXPECT_TRUE(node.onInterest(DOWN_A, chunkInterest(0, 9), 0.5).empty());
  EXPECT_EQ(node.stats().loopsDropped, 2u);
}

TEST(Forwarder, CachedDataIsServedWithoutPitState)
{
  auto node = makeNode();
  auto data = test::makeData(F, 1, 0, 3);
  node.cs().insert(data, 0);
  auto actions = node.onInterest(DOWN_A, chunkInterest(0, 1), 0.1);
  auto sent = only<SendData>(actions);
  ASSERT_EQ(actions.size(), 1u);
  ASSERT_EQ(sent.size(), 1u);
  EXPECT_EQ(sent[0].face, DOWN_A);
  EXPECT_EQ(sent[0].data, data);
  EXPECT_TRUE(sent[0].fromCache);
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_EQ(node.stats().csHits, 1u);
}

TEST(Forwarder, DataFansOutAlongPitAndIsCached)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, chunkInterest(0, 1), 0);
  node.onInterest(DOWN_B, chunkInterest(0, 2), 0);
  auto data = test::makeData(F, 1, 0, 3);
  auto actions = node.onData(UP, data, 0.05);
  auto sent = only<SendData>(actions);
  ASSERT_EQ(sent.size(), 2u);
  std::set<FaceId> faces{sent[0].face, sent[1].face};
  EXPECT_EQ(faces, (std::set<FaceId>{DOWN_A, DOWN_B}));
  EXPECT_FALSE(sent[0].fromCache);
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_TRUE(node.cs().contains(data.fullName(), 0.05));
}

TEST(Forwarder, UnsolicitedDataIsDroppedAndNotCached)
{
  auto node = makeNode();
  auto data = test::makeData(F, 1, 0, 3);
  EXPECT_TRUE(node.onData(UP, data, 0).empty());
  EXPECT_FALSE(node.cs().contains(data.fullName(), 0));
  EXPECT_EQ(node.stats().unsolicitedData, 1u);
}

TEST(Forwarder, DiscoveryEntryIsSatisfiedByPrefixMatch)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, Interest::forDiscovery(F, 1), 0);
  auto sent = only<SendData>(node.onData(UP, test::makeData(F, 1, 0, 0), 0.02));
  ASSERT_EQ(sent.size(), 1u);
  EXPECT_EQ(sent[0].face, DOWN_A);
  EXPECT_EQ(node.pit().size(), 0u);
}

TEST(Forwarder, NackFollowsPit)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, chunkInterest(5, 1), 0);
  node.onInterest(DOWN_B, chunkInterest(5, 2), 0);
  Nack nack{chunkInterest(5, 0).name, NackReason::NoContent};
  auto sent = only<SendNack>(node.onNack(UP, nack, 0.01));
  EXPECT_EQ(sent.size(), 2u);
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_TRUE(node.onNack(UP, nack, 0.02).empty());
}

TEST(Forwarder, NackAfterDataIsDropped)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, chunkInterest(1, 1), 0);
  node.onData(UP, test::makeData(F, 1, 1, 3), 0.01);
  EXPECT_TRUE(node.onNack(UP, Nack{chunkInterest(1, 0).name, NackReason::NoContent}, 0.02).empty());
}

TEST(Forwarder, NoRouteYieldsNack)
{
  auto node = makeNode();
  auto actions = node.onInterest(DOWN_A, Interest::forDiscovery(Name::parse("/elsewhere"), 1), 0);
  auto nacks = only<SendNack>(actions);
  ASSERT_EQ(nacks.size(), 1u);
  EXPECT_EQ(nacks[0].face, DOWN_A);
  EXPECT_EQ(nacks[0].nack.reason, NackReason::NoRoute);
  EXPECT_EQ(node.pit().size(), 0u);
}

TEST(Forwarder, NeverForwardsBackToIngress)
{
  auto node = makeNode();
  // the only route points back at the requester
  auto actions = node.onInterest(UP, chunkInterest(0, 1), 0);
  EXPECT_EQ(only<SendNack>(actions).size(), 1u);
  EXPECT_TRUE(only<SendInterest>(actions).empty());
}

TEST(Forwarder, UnknownFaceThrows)
{
  auto node = makeNode();
  EXPECT_THROW(node.onInterest(FaceId{42}, chunkInterest(0, 1), 0), UnknownFace);
  EXPECT_THROW(node.onData(FaceId{42}, test::makeData(F, 1, 0, 0), 0), UnknownFace);
  EXPECT_THROW(node.onNack(FaceId{42}, Nack{F, NackReason::NoRoute}, 0), UnknownFace);
  EXPECT_THROW(node.addFace(FaceId::internal()), UnknownFace);
}

TEST(Forwarder, RetransmissionPassesSuppressionWindow)
{
  auto node = makeNode();
  node.onInterest(DOWN_A, chunkInterest(0, 1), 0);
  EXPECT_TRUE(node.onInterest(DOWN_A, chunkInterest(0, 2), 0.05).empty());
  auto again = only<SendInterest>(node.onInterest(DOWN_A, chunkInterest(0, 3), 0.2));
  EXPECT_EQ(again.size(), 1u);
}

TEST(Forwarder, AggregationCanBeDisabled)
{
  ForwarderConfig cfg{0, Strategy::bestRoute(), false, 100.0};
  auto node = makeNode(cfg);
  EXPECT_EQ(only<SendInterest>(node.onInterest(DOWN_A, chunkInterest(0, 1), 0)).size(), 1u);
  EXPECT_EQ(only<SendInterest>(node.onInterest(DOWN_B, chunkInterest(0, 2), 0)).size(), 1u);
}

TEST(Forwarder, ExpiredPitEntryIsPurged)
{
  auto node = makeNode();
  auto in = chunkInterest(0, 1);
  in.lifetimeMs = 100;
  node.onInterest(DOWN_A, in, 0);
  EXPECT_EQ(node.expirePit(0.0999).size(), 0u);
  EXPECT_EQ(node.expirePit(0.1).size(), 1u);
  EXPECT_TRUE(node.onData(UP, test::makeData(F, 1, 0, 0), 0.11).empty());
}

/// Burst of k Interests: one upstream forward, k deliveries.
TEST(Forwarder, AggregationProperty)
{
  test::Rng rng(61);
  for (int round = 0; round < 100; ++round) {
    ForwarderNode node("gw", {0, Strategy::bestRoute(), true, 1e9}, 1);
    node.addFace(UP);
    size_t k = 1 + rng() % 12;
    for (size_t i = 0; i < k; ++i)
      node.addFace(FaceId{static_cast<uint32_t>(10 + i)});
    node.fib().addRoute(Name::parse("/pfx"), UP, 0);
    auto c = rng() % 50;
    size_t upstream = 0;
    for (size_t i = 0; i < k; ++i) {
      auto acts = node.onInterest(FaceId{static_cast<uint32_t>(10 + i)},
                                  chunkInterest(c, static_cast<uint32_t>(1000 + i)), 0.001 * i);
      upstream += only<SendInterest>(acts).size();
    }
    ASSERT_EQ(upstream, 1u);
    auto delivered = only<SendData>(node.onData(UP, test::makeData(F, 1, c, 60), 0.5));
    ASSERT_EQ(delivered.size(), k);
  }
}

TEST(Forwarder, HitsPlusMissesCountNonLoopInterests)
{
  test::Rng rng(62);
  auto node = makeNode({20'000, Strategy::bestRoute(), true, 100.0});
  uint64_t passed = 0;
  SimTime now = 0;
  for (int i = 0; i < 3000; ++i) {
    now += 0.001;
    auto c = rng() % 20;
    auto face = std::array<FaceId, 2>{DOWN_A, DOWN_B}[rng() % 2];
    auto before = node.stats().loopsDropped;
    switch (rng() % 3) {
    case 0:
      node.onInterest(face, chunkInterest(c, static_cast<uint32_t>(rng() % 40)), now);
      passed += node.stats().loopsDropped == before ? 1 : 0;
      break;
    case 1:
      node.onData(UP, test::makeData(F, 1, c, 19), now);
      break;
    default:
      node.onNack(UP, Nack{chunkInterest(c, 0).name, NackReason::NoContent}, now);
    }
  }
  EXPECT_EQ(node.stats().csHits + node.stats().csMisses, passed);
}

TEST(Prefetch, PlansNextChunksUpToDepth)
{
  auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(4), true, 100.0});
  auto plan = node.prefetchPlan(test::makeData(F, 1, 0, 10), 0);
  std::vector<Name> names;
  for (const auto& i : plan)
    names.push_back(i.name);
  std::vector<Name> want;
  for (uint64_t c = 1; c <= 4; ++c)
    want.push_back(VersionedChunkName(F, 1, c).toName());
  EXPECT_EQ(names, want);
}

TEST(Prefetch, NothingBeyondFinalChunk)
{
  auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(4), true, 100.0});
  EXPECT_TRUE(node.prefetchPlan(test::makeData(F, 1, 10, 10), 0).empty());
  EXPECT_EQ(node.prefetchPlan(test::makeData(F, 1, 8, 10), 0).size(), 2u);
}

TEST(Prefetch, SkipsCachedChunks)
{
  auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(4), true, 100.0});
  node.cs().insert(test::makeData(F, 1, 1, 10), 0);
  node.cs().insert(test::makeData(F, 1, 2, 10), 0);
  auto plan = node.prefetchPlan(test::makeData(F, 1, 0, 10), 0);
  ASSERT_EQ(plan.size(), 2u);
  EXPECT_EQ(plan[0].name, VersionedChunkName(F, 1, 3).toName());
  EXPECT_EQ(plan[1].name, VersionedChunkName(F, 1, 4).toName());
}

TEST(Prefetch, BestRoutePlansNothing)
{
  auto node = makeNode();
  EXPECT_TRUE(node.prefetchPlan(test::makeData(F, 1, 0, 10), 0).empty());
}

TEST(Prefetch, FetchedDataIsCachedNotForwarded)
{
  auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(3), true, 100.0});
  node.onInterest(DOWN_A, chunkInterest(0, 1), 0);
  auto actions = node.onData(UP, test::makeData(F, 1, 0, 10), 0.01);
  auto prefetches = only<SendInterest>(actions);
  ASSERT_EQ(prefetches.size(), 3u);
  for (const auto& p : prefetches) {
    EXPECT_TRUE(p.prefetch);
    EXPECT_EQ(p.face, UP);
    EXPECT_TRUE(p.interest.isWellFormed());
  }
  EXPECT_EQ(only<SendData>(actions).size(), 1u);
  EXPECT_EQ(node.stats().prefetchInterests, 3u);

  auto chunk1 = only<SendData>(node.onData(UP, test::makeData(F, 1, 1, 10), 0.02));
  EXPECT_TRUE(chunk1.empty());
  EXPECT_TRUE(node.cs().contains(VersionedChunkName(F, 1, 1).toName(), 0.02));

  // the consumer's later request is a cache hit
  auto hit = only<SendData>(node.onInterest(DOWN_A, chunkInterest(1, 5), 0.03));
  ASSERT_EQ(hit.size(), 1u);
  EXPECT_TRUE(hit[0].fromCache);
}

TEST(Prefetch, PendingChunkJoinsThePrefetchEntry)
{
  auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(2), true, 100.0});
  node.onInterest(DOWN_A, chunkInterest(0, 1), 0);
  node.onData(UP, test::makeData(F, 1, 0, 10), 0.01);
  // chunk 1 is now pending on the internal face
  EXPECT_TRUE(node.onInterest(DOWN_A, chunkInterest(1, 2), 0.015).empty());
  auto delivered = only<SendData>(node.onData(UP, test::makeData(F, 1, 1, 10), 0.02));
  ASSERT_EQ(delivered.size(), 1u);
  EXPECT_EQ(delivered[0].face, DOWN_A);
}

/// Prefetch never targets cached, pending or out-of-range chunks.
TEST(Prefetch, PlanProperty)
{
  test::Rng rng(63);
  for (int round = 0; round < 300; ++round) {
    uint32_t depth = 1 + rng() % 20;
    auto node = makeNode({1'000'000, Strategy::gatewayPrefetch(depth), true, 100.0});
    uint64_t finalChunk = rng() % 30;
    std::set<uint64_t> cached;
    std::set<uint64_t> pending;
    for (uint64_t c = 0; c <= finalChunk; ++c) {
      switch (rng() % 4) {
      case 0:
        node.cs().insert(test::makeData(F, 1, c, finalChunk), 0);
        cached.insert(c);
        break;
      case 1:
        node.onInterest(DOWN_A, chunkInterest(c, static_cast<uint32_t>(c)), 0);
        pending.insert(c);
        break;
      default:
        break;
      }
    }
    uint64_t trigger = rng() % (finalChunk + 1);
    auto plan = node.prefetchPlan(test::makeData(F, 1, trigger, finalChunk), 0);
    std::set<uint64_t> want;
    for (uint64_t c = trigger + 1; c <= std::min<uint64_t>(trigger + depth, finalChunk); ++c) {
      if (!cached.count(c) && !pending.count(c))
        want.insert(c);
    }
    std::set<uint64_t> got;
    for (const auto& i : plan)
      got.insert(VersionedChunkName::fromName(i.name).chunk);
    ASSERT_EQ(got, want);
    ASSERT_EQ(got.size(), plan.size());
  }
}

} // namespace
} // namespace ndnstream::fw
