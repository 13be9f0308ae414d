#include "generators.hpp"

#include "ndnstream/fw/fib.hpp"
#include "ndnstream/fw/pit.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace ndnstream::fw {
namespace {

TEST(Fib, LongestPrefixWins)
{
  Fib fib;
  fib.addRoute(Name::parse("/ndn"), FaceId{1}, 0);
  fib.addRoute(Name::parse("/ndn/web"), FaceId{2}, 0);
  const auto* e = fib.findLongestPrefixMatch(Name::parse("/ndn/web/video/x"));
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->prefix, Name::parse("/ndn/web"));
}

TEST(Fib, RootMatchesEverything)
{
  Fib fib;
  fib.addRoute(Name(), FaceId{1}, 0);
  ASSERT_NE(fib.findLongestPrefixMatch(Name::parse("/any/thing")), nullptr);
  EXPECT_TRUE(fib.findLongestPrefixMatch(Name::parse("/x"))->prefix.empty());
}

TEST(Fib, NoMatch)
{
  Fib fib;
  fib.addRoute(Name::parse("/a"), FaceId{1}, 0);
  EXPECT_EQ(fib.findLongestPrefixMatch(Name::parse("/b/c")), nullptr);
}

TEST(Fib, NextHopsStayOrderedByCost)
{
  Fib fib;
  auto p = Name::parse("/p");
  fib.addRoute(p, FaceId{3}, 30);
  fib.addRoute(p, FaceId{1}, 10);
  fib.addRoute(p, FaceId{2}, 20);
  fib.addRoute(p, FaceId{3}, 5);
  const auto* e = fib.findExact(p);
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->nextHops.size(), 3u);
  EXPECT_EQ(e->nextHops[0], (NextHop{FaceId{3}, 5}));
  EXPECT_EQ(e->nextHops[1], (NextHop{FaceId{1}, 10}));
  EXPECT_EQ(e->nextHops[2], (NextHop{FaceId{2}, 20}));
  EXPECT_THROW(fib.addRoute(p, FaceId{4}, 10), InvalidRoute);
  EXPECT_THROW(fib.addRoute(p, FaceId{2}, 10), InvalidRoute);
  // a rejected update leaves the table untouched
  EXPECT_EQ(fib.findExact(p)->nextHops.size(), 3u);
  EXPECT_EQ(fib.findExact(p)->nextHops[2], (NextHop{FaceId{2}, 20}));
}

TEST(Fib, AgreesWithBruteForceScan)
{
  test::Rng rng(51);
  for (int round = 0; round < 50; ++round) {
    Fib fib;
    std::vector<Name> prefixes;
    auto seed = test::randomBase(rng, 3, 4);
    for (int i = 0; i < 8; ++i) {
      // prefixes of one long name plus unrelated ones
      Name p = rng() % 2 ? seed.getPrefix(rng() % (seed.size() + 1)) : test::randomBase(rng, 1, 3);
      if (std::find(prefixes.begin(), prefixes.end(), p) == prefixes.end()) {
        prefixes.push_back(p);
        fib.addRoute(p, FaceId{static_cast<uint32_t>(i + 1)}, 0);
      }
    }
    for (int q = 0; q < 20; ++q) {
      Name query = rng() % 2 ? seed : test::randomBase(rng, 1, 4);
      const Name* best = nullptr;
      for (const auto& p : prefixes) {
        if (p.isPrefixOf(query) && (best == nullptr || p.size() > best->size()))
          best = &p;
      }
      const auto* got = fib.findLongestPrefixMatch(query);
      if (best == nullptr) {
        ASSERT_EQ(got, nullptr);
      }
      else {
        ASSERT_NE(got, nullptr);
        ASSERT_EQ(got->prefix, *best);
      }
    }
  }
}

PitEntry
entry(const std::string& uri, SimTime expiry, bool canBePrefix = false)
{
  PitEntry e;
  e.name = Name::parse(uri);
  e.canBePrefix = canBePrefix;
  e.downstream.insert(FaceId{1});
  e.expiry = expiry;
  return e;
}

TEST(Pit, ExpiryBoundaryIsInclusive)
{
  Pit pit;
  pit.insert(entry("/a", 5));
  EXPECT_TRUE(pit.expire(4.999).empty());
  EXPECT_EQ(pit.expire(5), (std::vector<Name>{Name::parse("/a")}));
  EXPECT_EQ(pit.size(), 0u);
}

TEST(Pit, ExpireRemovesExactlyTheDueSubset)
{
  test::Rng rng(52);
  Pit pit;
  std::vector<std::pair<Name, SimTime>> all;
  for (int i = 0; i < 200; ++i) {
    auto e = entry("/n" + std::to_string(i), static_cast<double>(rng() % 100) / 10.0);
    all.emplace_back(e.name, e.expiry);
    pit.insert(e);
  }
  std::vector<Name> want;
  for (const auto& [n, t] : all) {
    if (t <= 4.2)
      want.push_back(n);
  }
  auto got = pit.expire(4.2);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(pit.size(), all.size() - want.size());
}

TEST(Pit, DataMatchesExactAndPrefixEntries)
{
  Pit pit;
  pit.insert(entry("/f", 10, true));
  pit.insert(entry("/f/v=1/c=0", 10));
  pit.insert(entry("/f/v=1", 10));
  pit.insert(entry("/f/v=1/c=1", 10));
  auto matches = pit.findDataMatches(Name::parse("/f/v=1/c=0"));
  std::sort(matches.begin(), matches.end());
  // "/f/v=1" is not a discovery entry, so only exact or can_be_prefix entries match
  EXPECT_EQ(matches, (std::vector<Name>{Name::parse("/f"), Name::parse("/f/v=1/c=0")}));
}

} // namespace
} // namespace ndnstream::fw
