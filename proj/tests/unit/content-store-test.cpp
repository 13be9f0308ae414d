#include "generators.hpp"
#include "oracles.hpp"

#include "ndnstream/core/wire.hpp"
#include "ndnstream/fw/content-store.hpp"

#include <gtest/gtest.h>

namespace ndnstream::fw {
namespace {

const Name F = Name::parse("/f");

Interest
exact(const Data& d)
{
  return Interest::forChunk(d.name, 1);
}

TEST(ContentStore, DiscoveryFindsStoredChunk)
{
  ContentStore cs(1'000'000);
  auto d = test::makeData(F, 3, 0, 4);
  cs.insert(d, 0);
  auto hit = cs.lookup(Interest::forDiscovery(F, 1), 0.1);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, d);
}

TEST(ContentStore, EmptyStoreMisses)
{
  ContentStore cs(1'000'000);
  EXPECT_FALSE(cs.lookup(Interest::forDiscovery(F, 1), 0));
  EXPECT_FALSE(cs.lookup(exact(test::makeData(F, 1, 0, 0)), 0));
}

TEST(ContentStore, DiscoveryPrefersNewestVersionThenLowestChunk)
{
  ContentStore cs(1'000'000);
  cs.insert(test::makeData(F, 1, 0, 3), 0);
  cs.insert(test::makeData(F, 2, 2, 3), 0);
  cs.insert(test::makeData(F, 2, 1, 3), 0);
  cs.insert(test::makeData(Name::parse("/f/x"), 9, 0, 0), 0);
  cs.insert(test::makeData(Name::parse("/g"), 9, 0, 0), 0);
  auto hit = cs.lookup(Interest::forDiscovery(F, 1), 0);
  ASSERT_TRUE(hit);
  // /f/x sits under /f too, and its version 9 wins
  EXPECT_EQ(hit->name, VersionedChunkName(Name::parse("/f/x"), 9, 0));

  ContentStore only(1'000'000);
  only.insert(test::makeData(F, 1, 0, 3), 0);
  only.insert(test::makeData(F, 2, 2, 3), 0);
  only.insert(test::makeData(F, 2, 1, 3), 0);
  EXPECT_EQ(only.lookup(Interest::forDiscovery(F, 1), 0)->name, VersionedChunkName(F, 2, 1));
}

TEST(ContentStore, LruEvictsLeastRecentlyTouched)
{
  auto a = test::makeData(F, 1, 0, 2);
  auto b = test::makeData(F, 1, 1, 2);
  auto c = test::makeData(F, 1, 2, 2);
  ASSERT_EQ(encodedSize(a), encodedSize(b));
  ContentStore cs(2 * encodedSize(a));
  cs.insert(a, 0);
  cs.insert(b, 1);
  ASSERT_TRUE(cs.lookup(exact(a), 2));
  auto evicted = cs.insert(c, 3);
  ASSERT_EQ(evicted.size(), 1u);
  EXPECT_EQ(evicted[0], b.fullName());
  EXPECT_TRUE(cs.contains(a.fullName(), 3));
  EXPECT_TRUE(cs.contains(c.fullName(), 3));
}

TEST(ContentStore, ReinsertIsIdempotent)
{
  auto a = test::makeData(F, 1, 0, 0);
  ContentStore cs(10 * encodedSize(a));
  cs.insert(a, 0);
  EXPECT_TRUE(cs.insert(a, 1).empty());
  EXPECT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs.usedBytes(), encodedSize(a));
  EXPECT_EQ(cs.lastAccess(a.fullName()), 1.0);
}

TEST(ContentStore, OversizedDataIsNotCached)
{
  auto a = test::makeData(F, 1, 0, 0, 500);
  ContentStore cs(encodedSize(a) - 1);
  EXPECT_TRUE(cs.insert(a, 0).empty());
  EXPECT_EQ(cs.size(), 0u);
  ContentStore zero(0);
  EXPECT_TRUE(zero.insert(a, 0).empty());
  EXPECT_FALSE(zero.lookup(exact(a), 0));
}

TEST(ContentStore, StaleEntriesAreSkippedAndDropped)
{
  auto a = test::makeData(F, 1, 0, 0, 10, 1000);
  ContentStore cs(1'000'000);
  cs.insert(a, 10);
  EXPECT_TRUE(cs.lookup(exact(a), 11.0));
  EXPECT_FALSE(cs.lookup(exact(a), 11.001));
  EXPECT_EQ(cs.size(), 0u);
  EXPECT_EQ(cs.usedBytes(), 0u);

  cs.insert(a, 20);
  EXPECT_FALSE(cs.lookup(Interest::forDiscovery(F, 1), 21.5));
  EXPECT_EQ(cs.size(), 0u);
}

TEST(ContentStore, HitRefreshesRecency)
{
  auto a = test::makeData(F, 1, 0, 2);
  auto b = test::makeData(F, 1, 1, 2);
  ContentStore cs(1'000'000);
  cs.insert(a, 0);
  cs.insert(b, 1);
  EXPECT_EQ(cs.lruOrder(), (std::vector<Name>{a.fullName(), b.fullName()}));
  cs.lookup(Interest::forDiscovery(F, 1), 2);
  EXPECT_EQ(cs.lruOrder(), (std::vector<Name>{b.fullName(), a.fullName()}));
  EXPECT_EQ(cs.lastAccess(a.fullName()), 2.0);
  EXPECT_FALSE(cs.lastAccess(Name::parse("/nope")));
}

/// Randomized operation sequence checked against the brute-force model.
TEST(ContentStore, MatchesShadowModelOverRandomOperations)
{
  test::Rng rng(41);
  std::vector<Data> universe;
  for (int f = 0; f < 6; ++f) {
    Name base = Name::parse("/v/file" + std::to_string(f));
    for (uint64_t v = 1; v <= 2; ++v) {
      for (uint64_t c = 0; c < 6; ++c)
        universe.push_back(test::makeData(base, v, c, 5, 50 + 37 * ((f + c) % 5), 400 + 300 * f));
    }
  }

  ContentStore cs(4000);
  test::ShadowContentStore shadow(4000);
  SimTime now = 0;
  for (int op = 0; op < 10'000; ++op) {
    now += 0.001 * static_cast<double>(rng() % 50);
    const auto& d = universe[rng() % universe.size()];
    switch (rng() % 3) {
    case 0: {
      auto got = cs.insert(d, now);
      auto want = shadow.insert(d, encodedSize(d), now);
      ASSERT_EQ(got, want) << "op " << op;
      break;
    }
    case 1: {
      auto got = cs.lookup(exact(d), now);
      auto want = shadow.lookup(exact(d), now);
      ASSERT_EQ(got, want) << "op " << op;
      break;
    }
    default: {
      auto in = Interest::forDiscovery(d.name.base, 7);
      auto got = cs.lookup(in, now);
      auto want = shadow.lookup(in, now);
      ASSERT_EQ(got, want) << "op " << op;
    }
    }
    ASSERT_EQ(cs.usedBytes(), shadow.usedBytes()) << "op " << op;
    ASSERT_LE(cs.usedBytes(), cs.capacityBytes());
    ASSERT_EQ(cs.lruOrder(), shadow.lruOrder()) << "op " << op;
  }
}

} // namespace
} // namespace ndnstream::fw
