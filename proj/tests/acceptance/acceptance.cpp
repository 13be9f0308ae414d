// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fake-net.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "ndnstream/core/wire.hpp"
#include "ndnstream/fw/content-store.hpp"
#include "ndnstream/metrics/metrics.hpp"
#include "ndnstream/metrics/report.hpp"
#include "ndnstream/sim/experiments.hpp"
#include "ndnstream/sim/simulation.hpp"

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <set>

namespace ndnstream {
namespace {

namespace ex = sim::experiments;
using consumer::ChunkTiming;
using consumer::FileRecord;
using consumer::SessionRecord;
using metrics::MetricsReport;

struct Verdict
{
  bool pass = false;
  std::string detail;
};

/// A finished scenario with its simulation kept alive for repository access.
struct Run
{
  std::unique_ptr<sim::Simulation> sim;
  sim::SimulationResult result;
  MetricsReport report;
  std::string json;
  double wallS = 0;

  const SessionRecord&
  session(size_t i = 0) const
  {
    return result.sessions.at(i).record;
  }
};

Run
execute(const sim::Scenario& scenario)
{
  Run r;
  auto start = std::chrono::steady_clock::now();
  r.sim = std::make_unique<sim::Simulation>(scenario);
  r.result = r.sim->run();
  r.report = metrics::buildReport(r.result, scenario.jitter);
  r.json = metrics::serializeReport(r.report);
  r.wallS = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// First runs of the canned experiments, reused by the determinism check.
std::map<std::string, Run> g_runs;

const Run&
experiment(const std::string& name)
{
  auto it = g_runs.find(name);
  if (it == g_runs.end())
    it = g_runs.emplace(name, execute(ex::make(name))).first;
  return it->second;
}

const sim::LinkConfig&
linkBetween(const sim::Scenario& sc, const std::string& a, const std::string& b)
{
  for (const auto& l : sc.links) {
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a))
      return l;
  }
  throw Error("no link " + a + " - " + b);
}

const Data&
chunkData(const Run& run, const FileRecord& file, uint64_t chunk)
{
  const auto* d = run.sim->repository("server").find(VersionedChunkName(file.base, file.version, chunk).toName());
  if (d == nullptr)
    throw Error("chunk missing from repository");
  return *d;
}

size_t
dataWireBytes(const Data& d)
{
  return test::oracleDataWireSize(d.fullName(), d.content.size(), d.finalChunk, d.freshnessMs);
}

size_t
interestWireBytes(const FileRecord& file, uint64_t chunk, bool discovery)
{
  auto interest = discovery ? Interest::forDiscovery(file.base, 0)
                            : Interest::forChunk(VersionedChunkName(file.base, file.version, chunk), 0);
  return test::oracleInterestWireSize(interest);
}

size_t
tierIndex(const std::vector<producer::Representation>& tiers, const std::string& label)
{
  for (size_t i = 0; i < tiers.size(); ++i) {
    if (tiers[i].label == label)
      return i;
  }
  throw Error("unknown tier " + label);
}

// 1 ---------------------------------------------------------------------------

Verdict
abrStaircase()
{
  const auto& run = experiment("abr-staircase");
  const auto& sc = run.sim->scenario();
  const auto& tiers = sc.videos[0].tiers;
  const auto& rec = run.session();
  auto rates = ex::staircaseRatesBps();
  const double dwell = ex::STAIRCASE_DWELL_S;
  const auto& segs = rec.segments;

  bool ok = !rec.aborted && rec.ended.has_value();
  std::string steps;
  std::vector<std::optional<size_t>> reachedAt(rates.size());
  for (size_t i = 0; i < rates.size(); ++i) {
    double t0 = dwell * static_cast<double>(i);
    double t1 = i + 1 < rates.size() ? dwell * static_cast<double>(i + 1) : 1e18;
    size_t want = 0;
    for (size_t k = 0; k < tiers.size(); ++k) {
      if (static_cast<double>(tiers[k].minBandwidthBps) <= 0.95 * rates[i])
        want = k;
    }
    // settled: the first download started in this dwell whose estimate is within 10% of the rate
    std::optional<size_t> settle;
    for (size_t s = 0; s < segs.size(); ++s) {
      if (segs[s].requested >= t0 && segs[s].requested < t1 &&
          std::abs(segs[s].estimateBps - rates[i]) <= 0.10 * rates[i]) {
        settle = s;
        break;
      }
    }
    bool stepOk = false;
    std::string lag = "never settled";
    if (settle) {
      std::optional<size_t> reached;
      for (size_t s = *settle + 1; s <= *settle + 3 && s < segs.size() && segs[s].requested < t1; ++s) {
        if (tierIndex(tiers, segs[s].label) == want) {
          reached = s;
          break;
        }
      }
      if (reached) {
        stepOk = true;
        for (size_t s = *reached; s < segs.size() && segs[s].requested < t1; ++s)
          stepOk = stepOk && tierIndex(tiers, segs[s].label) == want;
        lag = fmt::format("+{}", *reached - *settle);
        reachedAt[i] = reached;
      }
      else {
        lag = "not within 3";
      }
    }
    ok = ok && stepOk;
    steps += fmt::format("{}{:g}M->{}({})", i ? " " : "", rates[i] / 1e6, tiers[want].label, lag);
  }

  // non-increasing from the top step's tier to the lowest step's, non-decreasing after it
  const size_t lowest = std::min_element(rates.begin(), rates.end()) - rates.begin();
  bool downMono = reachedAt[0] && reachedAt[lowest];
  bool upMono = downMono;
  if (downMono) {
    for (size_t s = *reachedAt[0] + 1; s <= *reachedAt[lowest]; ++s)
      downMono = downMono && tierIndex(tiers, segs[s].label) <= tierIndex(tiers, segs[s - 1].label);
    for (size_t s = *reachedAt[lowest] + 1; s < segs.size(); ++s)
      upMono = upMono && tierIndex(tiers, segs[s].label) >= tierIndex(tiers, segs[s - 1].label);
  }
  bool fast = run.wallS < 10.0;
  ok = ok && downMono && upMono && fast;
  return {ok, fmt::format("{}; monotone down {} up {}; wall {:.2f} s", steps, downMono, upMono, run.wallS)};
}

// 2 ---------------------------------------------------------------------------

Verdict
rttCalibration()
{
  auto run = execute(ex::rttCalibration());
  const auto& sc = run.sim->scenario();
  const auto& access = linkBetween(sc, "consumer", "gw");
  const auto& core = linkBetween(sc, "gw", "server");
  auto hop = [] (const sim::DirectionConfig& d) {
    return test::Hop{d.propagationMs, static_cast<uint64_t>(d.bandwidthBps)};
  };
  std::vector<test::Hop> hops{hop(access.ab), hop(core.ab)};
  double processingMs = sc.findNode("server")->producer.processingDelayMs;

  size_t total = 0;
  size_t within = 0;
  double worst = 0;
  const auto& rec = run.session();
  for (const auto& file : rec.files) {
    for (size_t i = 0; i < file.timings.size(); ++i) {
      const auto& t = file.timings[i];
      if (t.retxCount > 0)
        continue;
      bool discovery = t.firstSent == file.started;
      double want = test::oracleChainRttMs(hops, interestWireBytes(file, t.chunk, discovery),
                                           dataWireBytes(chunkData(run, file, t.chunk)), processingMs);
      double dev = std::abs(t.rttMs() - want) / want;
      worst = std::max(worst, dev);
      ++total;
      within += dev <= 0.10;
    }
  }

  std::vector<double> fileRtts;
  for (const auto& f : run.report.sessions[0].files) {
    if (f.segment)
      fileRtts.push_back(f.avgRttMs);
  }
  std::sort(fileRtts.begin(), fileRtts.end());
  auto k = static_cast<size_t>(std::ceil(0.9 * static_cast<double>(fileRtts.size())));
  double bestRel = 1e18;
  double lo = 0;
  double hi = 0;
  for (size_t j = 0; k > 0 && j + k <= fileRtts.size(); ++j) {
    double a = fileRtts[j];
    double b = fileRtts[j + k - 1];
    double rel = (b - a) / ((a + b) / 2);
    if (rel < bestRel) {
      bestRel = rel;
      lo = a;
      hi = b;
    }
  }
  bool ok = total > 0 && within == total && bestRel <= 0.35;
  return {ok, fmt::format("{}/{} chunk RTTs within 10% of oracle (worst {:.2f}%); 90% of file RTTs in "
                          "[{:.4g}, {:.4g}] ms, width {:.2f}% of midpoint",
                          within, total, worst * 100, lo, hi, bestRel * 100)};
}

// 3, 4, 5 ---------------------------------------------------------------------

size_t
switches(const metrics::SessionMetrics& s, const std::string& a, const std::string& b)
{
  size_t n = 0;
  for (size_t i = 1; i < s.qualityTimeline.size(); ++i) {
    const auto& x = s.qualityTimeline[i - 1].label;
    const auto& y = s.qualityTimeline[i].label;
    n += (x == a && y == b) || (x == b && y == a);
  }
  return n;
}

Verdict
withCache()
{
  const auto& nc = experiment("no-cache").report;
  const auto& wc = experiment("with-cache").report;
  double ncMedian = *nc.sessions[0].medianFileRttMs;
  double wcMedian = *wc.sessions[0].medianFileRttMs;
  std::optional<double> ratio;
  for (const auto& c : wc.caches) {
    if (c.node == "gw")
      ratio = c.hitRatio;
  }
  auto osc = switches(wc.sessions[0], "720p", "1080p");
  bool a = wcMedian < ncMedian;
  bool b = ratio && *ratio > 0 && *ratio < 1;
  bool c = osc >= 2;
  return {a && b && c && wc.sessions[0].completed,
          fmt::format("median file RTT {:.4g} ms vs {:.4g} ms without cache; hit ratio {}; {} switches "
                      "between 720p and 1080p",
                      wcMedian, ncMedian, ratio ? fmt::format("{:.4g}", *ratio) : "-", osc)};
}

Verdict
cacheJitter()
{
  double nc = *experiment("no-cache").report.sessions[0].meanFileJitterMs;
  double wc = *experiment("with-cache").report.sessions[0].meanFileJitterMs;
  return {wc > nc, fmt::format("mean file jitter {:.4g} ms with cache vs {:.4g} ms without", wc, nc)};
}

Verdict
prefetch()
{
  const auto& pf = experiment("prefetch");
  double pfJitter = *pf.report.sessions[0].meanFileJitterMs;
  double wcJitter = *experiment("with-cache").report.sessions[0].meanFileJitterMs;
  const auto& sc = pf.sim->scenario();
  const auto& access = linkBetween(sc, "consumer", "gw");
  bool depthOk = sc.findNode("gw")->forwarder.strategy.prefetchDepth == 16;

  size_t total = 0;
  size_t bounded = 0;
  bool seenFirstSegment = false;
  for (const auto& file : pf.session().files) {
    if (!file.segment)
      continue;
    if (!seenFirstSegment) {
      seenFirstSegment = true;
      continue;
    }
    for (const auto& t : file.timings) {
      bool discovery = t.firstSent == file.started;
      double ser = test::serializationS(interestWireBytes(file, t.chunk, discovery), access.ab.bandwidthBps) +
                   test::serializationS(dataWireBytes(chunkData(pf, file, t.chunk)), access.ba.bandwidthBps);
      double boundMs = 1.2 * (access.ab.propagationMs + access.ba.propagationMs + ser * 1000);
      ++total;
      bounded += t.rttMs() <= boundMs;
    }
  }
  double frac = total ? static_cast<double>(bounded) / static_cast<double>(total) : 0;
  bool ok = depthOk && pfJitter <= wcJitter && frac >= 0.90;
  return {ok, fmt::format("mean file jitter {:.4g} ms vs {:.4g} ms with cache only; {:.2f}% of {} chunk RTTs "
                          "after the first segment within the access bound",
                          pfJitter, wcJitter, frac * 100, total)};
}

// 6 ---------------------------------------------------------------------------

double
serverToUniqueRatio(const Run& run, size_t* unique = nullptr, uint64_t* sent = nullptr)
{
  std::set<Name> chunks;
  for (const auto& s : run.result.sessions) {
    for (const auto& f : s.record.files) {
      for (const auto& t : f.timings)
        chunks.insert(VersionedChunkName(f.base, f.version, t.chunk).toName());
    }
  }
  auto dataSent = run.result.servers.at("server").dataSent;
  if (unique)
    *unique = chunks.size();
  if (sent)
    *sent = dataSent;
  return static_cast<double>(dataSent) / static_cast<double>(chunks.size());
}

Verdict
multicast()
{
  const auto& shared = experiment("multicast");
  auto baseline = execute(ex::multicast(true));
  size_t unique = 0;
  uint64_t sent = 0;
  double ratio = serverToUniqueRatio(shared, &unique, &sent);
  double baseRatio = serverToUniqueRatio(baseline);
  bool completed = std::all_of(shared.result.sessions.begin(), shared.result.sessions.end(),
                               [] (const auto& s) { return s.record.ended && !s.record.aborted; });
  bool ok = completed && ratio <= 1.1 && baseRatio >= 1.8;
  return {ok, fmt::format("server sent {} Data for {} unique chunks ({:.3f}x); without caching and "
                          "aggregation {:.3f}x",
                          sent, unique, ratio, baseRatio)};
}

// 7 ---------------------------------------------------------------------------

Verdict
startupDelay()
{
  auto run = execute(ex::startup());
  const auto& sc = run.sim->scenario();
  const auto& access = linkBetween(sc, "consumer", "gw");
  const auto& core = linkBetween(sc, "gw", "server");
  double procS = sc.findNode("server")->producer.processingDelayMs / 1000;
  double baseS = (access.ab.propagationMs + access.ba.propagationMs + core.ab.propagationMs + core.ba.propagationMs) / 1000;
  double bottleneck = core.ba.bandwidthBps;

  const auto& rec = run.session();
  if (!rec.startupDelayS || rec.files.size() < 3 || !rec.files[2].segment)
    return {false, "session did not start playback after three files"};

  // master playlist, media playlist, first segment
  double oracle = 0;
  for (size_t i = 0; i < 3; ++i) {
    const auto& file = rec.files[i];
    const auto& first = chunkData(run, file, 0);
    uint64_t last = first.finalChunk;
    auto round = [&] (uint64_t chunk, bool discovery) {
      auto d = dataWireBytes(chunkData(run, file, chunk));
      auto in = interestWireBytes(file, chunk, discovery);
      return baseS + procS + test::serializationS(in, access.ab.bandwidthBps) +
             test::serializationS(in, core.ab.bandwidthBps) + test::serializationS(d, access.ba.bandwidthBps);
    };
    oracle += round(0, true) + test::serializationS(dataWireBytes(first), bottleneck);
    if (last > 0) {
      double stream = 0;
      for (uint64_t c = 1; c <= last; ++c)
        stream += test::serializationS(dataWireBytes(chunkData(run, file, c)), bottleneck);
      oracle += round(last, false) + stream;
    }
  }
  double measured = *rec.startupDelayS;
  double dev = std::abs(measured - oracle) / oracle;
  return {dev <= 0.10, fmt::format("startup {:.4f} s vs oracle {:.4f} s ({:+.2f}%)", measured, oracle,
                                   (measured - oracle) / oracle * 100)};
}

// 8 ---------------------------------------------------------------------------

struct RoundTrip
{
  std::optional<consumer::FetchOutcome> outcome;
  size_t delivered = 0;
  size_t verified = 0;
};

RoundTrip
fetchOnce(const producer::Repository& repo, const KeyMaterial& key, const Name& base, test::Rng& rng,
          std::function<void(Data&)> tamper)
{
  test::FakeNet net(repo);
  net.defaultRttS = 0.005 + static_cast<double>(rng() % 20) / 1000;
  net.drop = [&rng] (const Interest&) { return rng() % 20 == 0; };
  net.extraDelay = [&rng] (const Interest&) { return static_cast<double>(rng() % 10) / 1000; };
  net.tamper = std::move(tamper);

  consumer::FetchOptions opt;
  opt.window = 1 + static_cast<uint32_t>(rng() % 16);
  opt.rtoMs = 100;
  opt.maxRetx = 50;
  RoundTrip rt;
  consumer::FileFetcher fetcher(net, "gw", &key, opt, base,
                                [&] (consumer::FetchOutcome o) { rt.outcome = std::move(o); });
  net.onData = [&] (const std::string&, const Data& d) {
    ++rt.delivered;
    rt.verified += verifyData(d, key);
    fetcher.onData(d, {});
  };
  net.onNack = [&] (const std::string&, const Nack& n) { fetcher.onNack(n); };
  fetcher.start();
  net.engine.run();
  return rt;
}

Verdict
reassemblyAndIntegrity()
{
  auto key = test::testKey("acceptance");
  test::Rng rng(8);
  size_t intact = 0;
  size_t detected = 0;
  size_t unverified = 0;
  const int rounds = 200;
  for (int i = 0; i < rounds; ++i) {
    producer::Repository repo(key, 0);
    auto base = test::randomBase(rng, 1, 4);
    auto payload = test::randomBytes(rng, 1 + rng() % 40'000);
    size_t chunkSize = 1 + rng() % 4000;
    uint64_t version = 1 + rng() % 1000;
    repo.publishFile(base, payload, chunkSize, version);

    auto clean = fetchOnce(repo, key, base, rng, nullptr);
    unverified += clean.delivered - clean.verified;
    if (auto* r = clean.outcome ? std::get_if<consumer::FetchResult>(&*clean.outcome) : nullptr;
        r && r->payload == payload && r->version == version && clean.delivered == clean.verified)
      ++intact;

    // one byte of one chunk's content or tag, on its first delivery only
    uint64_t chunks = (payload.size() + chunkSize - 1) / chunkSize;
    uint64_t target = rng() % chunks;
    auto contentSize = repo.find(VersionedChunkName(base, version, target).toName())->content.size();
    size_t offset = rng() % (contentSize + 32);
    auto mask = static_cast<uint8_t>(1 + rng() % 255);
    bool done = false;
    auto corrupt = fetchOnce(repo, key, base, rng, [&] (Data& d) {
      if (done || d.name.chunk != target)
        return;
      done = true;
      if (offset < d.content.size())
        d.content = d.content.withByteFlipped(offset, mask);
      else
        d.integrityTag[offset - d.content.size()] ^= mask;
    });
    if (auto* e = corrupt.outcome ? std::get_if<consumer::FetchError>(&*corrupt.outcome) : nullptr;
        e && e->kind() == consumer::FetchErrorKind::IntegrityFailure)
      ++detected;
  }
  bool ok = intact == rounds && detected == rounds && unverified == 0;
  return {ok, fmt::format("{}/{} round trips intact, {} unverifiable deliveries; {}/{} corruptions raised "
                          "IntegrityFailure",
                          intact, rounds, unverified, detected, rounds)};
}

// 9 ---------------------------------------------------------------------------

Verdict
determinism()
{
  std::vector<std::string> differing;
  for (const auto& name : ex::names()) {
    const auto& first = experiment(name);
    auto second = execute(ex::make(name));
    if (first.json != second.json)
      differing.push_back(name);
  }
  std::string list;
  for (const auto& n : differing)
    list += " " + n;
  return {differing.empty(), differing.empty()
                               ? fmt::format("{} experiments produced byte-identical report.json twice", ex::names().size())
                               : "reports differ:" + list};
}

// 10 --------------------------------------------------------------------------

bool
lruShadow()
{
  test::Rng rng(10);
  std::vector<Data> universe;
  for (int f = 0; f < 6; ++f) {
    Name base = Name::parse("/v/f" + std::to_string(f));
    for (uint64_t v = 1; v <= 2; ++v) {
      for (uint64_t c = 0; c < 6; ++c)
        universe.push_back(test::makeData(base, v, c, 5, 40 + 29 * ((f + c) % 7), 300 + 250 * f));
    }
  }
  fw::ContentStore cs(5000);
  test::ShadowContentStore shadow(5000);
  SimTime now = 0;
  for (int op = 0; op < 10'000; ++op) {
    now += 0.001 * static_cast<double>(rng() % 40);
    const auto& d = universe[rng() % universe.size()];
    switch (rng() % 3) {
    case 0:
      if (cs.insert(d, now) != shadow.insert(d, encodedSize(d), now))
        return false;
      break;
    case 1: {
      auto in = Interest::forChunk(d.name, 1);
      if (cs.lookup(in, now) != shadow.lookup(in, now))
        return false;
      break;
    }
    default: {
      auto in = Interest::forDiscovery(d.name.base, 1);
      if (cs.lookup(in, now) != shadow.lookup(in, now))
        return false;
    }
    }
    if (cs.usedBytes() != shadow.usedBytes() || cs.lruOrder() != shadow.lruOrder() ||
        cs.usedBytes() > cs.capacityBytes())
      return false;
  }
  return true;
}

bool
metricOracles()
{
  test::Rng rng(11);
  std::uniform_real_distribution<double> gap(0, 0.2);
  std::uniform_real_distribution<double> delay(0.001, 0.4);
  for (int trace = 0; trace < 1000; ++trace) {
    std::vector<ChunkTiming> timings;
    size_t n = 1 + rng() % 50;
    for (size_t c = 0; c < n; ++c) {
      ChunkTiming t;
      t.chunk = c;
      t.firstSent = gap(rng);
      t.lastSent = t.firstSent + (rng() % 5 == 0 ? gap(rng) : 0);
      t.received = t.lastSent + delay(rng);
      timings.push_back(t);
    }
    std::shuffle(timings.begin(), timings.end(), rng);
    double rtt = test::oracleFileRttMs(timings);
    if (std::abs(metrics::computeFileRtt(timings) - rtt) > 1e-9 * rtt)
      return false;
    for (auto mode : {metrics::JitterMode::MeanAbsoluteDifference, metrics::JitterMode::Variance}) {
      double j = test::oracleJitterMs(timings, mode);
      if (std::abs(metrics::computeJitter(timings, mode) - j) > 1e-9 * std::max(1.0, j))
        return false;
    }
    std::vector<double> values;
    for (const auto& t : timings)
      values.push_back(std::round(t.rttMs()));
    auto cdf = metrics::computeCdf(values);
    if (cdf != test::oracleCdf(values) || cdf.back().fraction != 1.0)
      return false;
  }
  return true;
}

bool
codecFuzz()
{
  test::Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    auto pkt = test::randomPacket(rng);
    auto wire = encodePacket(pkt);
    if (decodePacket(wire) != pkt || encodedSize(pkt) != wire.size())
      return false;
    if (i < 300) {
      for (size_t len = 0; len < wire.size(); ++len) {
        try {
          decodePacket(std::span<const uint8_t>(wire.data(), len));
          return false;
        }
        catch (const MalformedPacket&) {
        }
      }
    }
    auto mutated = wire;
    mutated[rng() % mutated.size()] ^= static_cast<uint8_t>(1 + rng() % 255);
    try {
      if (encodePacket(decodePacket(mutated)) != mutated)
        return false;
    }
    catch (const MalformedPacket&) {
    }
  }
  return true;
}

Verdict
microOracles()
{
  bool lru = lruShadow();
  bool met = metricOracles();
  bool codec = codecFuzz();
  return {lru && met && codec,
          fmt::format("LRU shadow over 10000 ops {}; RTT/jitter/CDF over 1000 traces {}; codec round trip "
                      "and truncation fuzz {}",
                      lru ? "agrees" : "DIFFERS", met ? "agree" : "DIFFER", codec ? "clean" : "BROKEN")};
}

} // namespace
} // namespace ndnstream

int
main()
{
  using namespace ndnstream;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
    {"abr staircase", abrStaircase},
    {"rtt calibration", rttCalibration},
    {"with-cache improvement", withCache},
    {"cache-induced jitter", cacheJitter},
    {"prefetch strategy", prefetch},
    {"interest aggregation", multicast},
    {"startup delay", startupDelay},
    {"reassembly and integrity", reassemblyAndIntegrity},
    {"determinism", determinism},
    {"micro-oracles", microOracles},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    }
    catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    fmt::print("{} criterion {:>2} ({}): {}\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
