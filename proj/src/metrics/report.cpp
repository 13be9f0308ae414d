#include "ndnstream/metrics/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace ndnstream::metrics {

using Json = nlohmann::ordered_json;

namespace {

double
r6(double v)
{
  return roundSignificant(v, 6);
}

std::optional<double>
r6(std::optional<double> v)
{
  if (v)
    return r6(*v);
  return std::nullopt;
}

FileMetrics
fileMetrics(const consumer::FileRecord& f, JitterMode jitter)
{
  FileMetrics m;
  m.name = f.base.toUri();
  m.version = f.version;
  m.segment = f.segment;
  m.bytes = f.bytes;
  m.chunks = f.timings.size();
  for (const auto& t : f.timings) {
    m.cacheChunks += t.fromCacheHint ? 1 : 0;
    m.retransmissions += t.retxCount;
  }
  m.startedS = r6(f.started);
  m.finishedS = r6(f.finished);
  if (!f.timings.empty()) {
    m.avgRttMs = r6(computeFileRtt(f.timings));
    m.jitterMs = r6(computeJitter(f.timings, jitter));
  }
  return m;
}

SessionMetrics
sessionMetrics(const sim::SessionOutcome& outcome, JitterMode jitter)
{
  const auto& rec = outcome.record;
  SessionMetrics s;
  s.consumer = outcome.consumer;
  s.video = outcome.video;
  s.gateway = rec.gateway;
  for (const auto& p : rec.probes)
    s.probes.push_back({p.gateway, r6(p.responseMs)});
  s.aborted = rec.aborted;
  s.abortReason = rec.abortReason;
  s.completed = rec.ended.has_value() && !rec.aborted;
  s.startedS = r6(rec.started);
  s.endedS = r6(rec.ended);
  s.startupDelayS = r6(rec.startupDelayS);
  s.rebufferCount = rec.rebuffers.size();
  double total = 0;
  for (const auto& r : rec.rebuffers) {
    s.rebuffers.push_back({r6(r.start), r6(r.end)});
    if (r.end)
      total += *r.end - r.start;
  }
  s.rebufferTotalS = r6(total);
  for (const auto& q : rec.qualityTimeline)
    s.qualityTimeline.push_back({r6(q.at), q.label});
  s.qualitySwitches = rec.qualityTimeline.empty() ? 0 : rec.qualityTimeline.size() - 1;
  for (const auto& e : rec.estimatorTrace)
    s.estimatorTrace.push_back({r6(e.at), r6(e.estimateBps)});
  for (const auto& seg : rec.segments)
    s.segments.push_back({seg.index, seg.label, r6(seg.requested), r6(seg.finished), seg.bytes, r6(seg.estimateBps)});

  std::vector<double> rtts;
  std::vector<double> jitters;
  for (const auto& f : rec.files) {
    s.files.push_back(fileMetrics(f, jitter));
    if (f.segment && !f.timings.empty()) {
      rtts.push_back(computeFileRtt(f.timings));
      jitters.push_back(computeJitter(f.timings, jitter));
    }
  }
  if (!rtts.empty()) {
    s.meanFileRttMs = r6(mean(rtts));
    s.medianFileRttMs = r6(median(rtts));
    s.meanFileJitterMs = r6(mean(jitters));
  }
  s.downloadedMediaS = r6(rec.downloadedMediaS);
  s.playedMediaS = r6(rec.playedMediaS);
  s.finalBufferS = r6(rec.finalBufferS);
  return s;
}

} // namespace

MetricsReport
buildReport(const sim::SimulationResult& result, JitterMode jitter)
{
  MetricsReport r;
  r.scenarioId = result.scenarioId;
  r.seed = result.seed;
  r.jitterMode = toString(jitter);
  r.endTimeS = r6(result.endTime);
  r.truncated = result.truncated;

  std::vector<double> fileRtts;
  for (const auto& s : result.sessions) {
    r.sessions.push_back(sessionMetrics(s, jitter));
    for (const auto& f : s.record.files) {
      if (f.segment && !f.timings.empty())
        fileRtts.push_back(computeFileRtt(f.timings));
    }
  }
  if (!fileRtts.empty()) {
    for (const auto& p : computeCdf(fileRtts))
      r.rttCdf.push_back({r6(p.value), r6(p.fraction)});
  }

  for (const auto& [node, st] : result.forwarders) {
    CacheMetrics c;
    c.node = node;
    c.hits = st.csHits;
    c.misses = st.csMisses;
    if (st.csHits + st.csMisses > 0)
      c.hitRatio = r6(cacheHitRatio(st.csHits, st.csMisses));
    auto pw = result.prewarmed.find(node);
    c.prewarmedChunks = pw == result.prewarmed.end() ? 0 : pw->second;
    c.prefetchInterests = st.prefetchInterests;
    c.interestsIn = st.interestsIn;
    c.interestsOut = st.interestsOut;
    c.dataIn = st.dataIn;
    c.dataOut = st.dataOut;
    r.caches.push_back(c);
  }

  for (const auto& [node, st] : result.servers) {
    ServerMetrics m;
    m.node = node;
    m.interests = st.interests;
    m.dataSent = st.dataSent;
    m.nacksSent = st.nacksSent;
    if (!st.responseTimesMs.empty()) {
      m.meanResponseMs = r6(mean(st.responseTimesMs));
      m.maxResponseMs = r6(*std::max_element(st.responseTimesMs.begin(), st.responseTimesMs.end()));
    }
    m.fractionWithin5Ms = r6(st.fractionWithin(5.0));
    r.servers.push_back(m);
  }

  for (const auto& l : result.links) {
    r.links.push_back({l.ref.from, l.ref.to, l.stats.packetsSent, l.stats.packetsDropped,
                       l.stats.packetsDelivered, l.stats.bytesSent});
  }
  return r;
}

namespace {

Json
optionalJson(const std::optional<double>& v)
{
  return v ? Json(*v) : Json(nullptr);
}

std::optional<double>
optionalFrom(const Json& j)
{
  if (j.is_null())
    return std::nullopt;
  return j.get<double>();
}

Json
toJson(const SessionMetrics& s)
{
  Json j;
  j["consumer"] = s.consumer;
  j["video"] = s.video;
  j["gateway"] = s.gateway;
  j["probes"] = Json::array();
  for (const auto& p : s.probes)
    j["probes"].push_back({{"gateway", p.gateway}, {"response_ms", optionalJson(p.responseMs)}});
  j["completed"] = s.completed;
  j["aborted"] = s.aborted;
  j["abort_reason"] = s.abortReason;
  j["started_s"] = s.startedS;
  j["ended_s"] = optionalJson(s.endedS);
  j["startup_delay_s"] = optionalJson(s.startupDelayS);
  j["rebuffer_count"] = s.rebufferCount;
  j["rebuffer_total_s"] = s.rebufferTotalS;
  j["rebuffers"] = Json::array();
  for (const auto& r : s.rebuffers)
    j["rebuffers"].push_back({{"start_s", r.startS}, {"end_s", optionalJson(r.endS)}});
  j["quality_switches"] = s.qualitySwitches;
  j["quality_timeline"] = Json::array();
  for (const auto& q : s.qualityTimeline)
    j["quality_timeline"].push_back({{"at_s", q.atS}, {"label", q.label}});
  j["estimator_trace"] = Json::array();
  for (const auto& e : s.estimatorTrace)
    j["estimator_trace"].push_back({{"at_s", e.atS}, {"estimate_bps", e.estimateBps}});
  j["segments"] = Json::array();
  for (const auto& g : s.segments) {
    j["segments"].push_back({{"index", g.index}, {"label", g.label}, {"requested_s", g.requestedS},
                             {"finished_s", g.finishedS}, {"bytes", g.bytes}, {"estimate_bps", g.estimateBps}});
  }
  j["mean_file_rtt_ms"] = optionalJson(s.meanFileRttMs);
  j["median_file_rtt_ms"] = optionalJson(s.medianFileRttMs);
  j["mean_file_jitter_ms"] = optionalJson(s.meanFileJitterMs);
  j["downloaded_media_s"] = s.downloadedMediaS;
  j["played_media_s"] = s.playedMediaS;
  j["final_buffer_s"] = s.finalBufferS;
  j["files"] = Json::array();
  for (const auto& f : s.files) {
    j["files"].push_back({{"name", f.name}, {"version", f.version}, {"segment", f.segment},
                          {"bytes", f.bytes}, {"chunks", f.chunks}, {"cache_chunks", f.cacheChunks},
                          {"retransmissions", f.retransmissions}, {"started_s", f.startedS},
                          {"finished_s", f.finishedS}, {"avg_rtt_ms", f.avgRttMs}, {"jitter_ms", f.jitterMs}});
  }
  return j;
}

SessionMetrics
sessionFrom(const Json& j)
{
  SessionMetrics s;
  s.consumer = j.at("consumer").get<std::string>();
  s.video = j.at("video").get<std::string>();
  s.gateway = j.at("gateway").get<std::string>();
  for (const auto& p : j.at("probes"))
    s.probes.push_back({p.at("gateway").get<std::string>(), optionalFrom(p.at("response_ms"))});
  s.completed = j.at("completed").get<bool>();
  s.aborted = j.at("aborted").get<bool>();
  s.abortReason = j.at("abort_reason").get<std::string>();
  s.startedS = j.at("started_s").get<double>();
  s.endedS = optionalFrom(j.at("ended_s"));
  s.startupDelayS = optionalFrom(j.at("startup_delay_s"));
  s.rebufferCount = j.at("rebuffer_count").get<uint64_t>();
  s.rebufferTotalS = j.at("rebuffer_total_s").get<double>();
  for (const auto& r : j.at("rebuffers"))
    s.rebuffers.push_back({r.at("start_s").get<double>(), optionalFrom(r.at("end_s"))});
  s.qualitySwitches = j.at("quality_switches").get<uint64_t>();
  for (const auto& q : j.at("quality_timeline"))
    s.qualityTimeline.push_back({q.at("at_s").get<double>(), q.at("label").get<std::string>()});
  for (const auto& e : j.at("estimator_trace"))
    s.estimatorTrace.push_back({e.at("at_s").get<double>(), e.at("estimate_bps").get<double>()});
  for (const auto& g : j.at("segments")) {
    s.segments.push_back({g.at("index").get<uint64_t>(), g.at("label").get<std::string>(),
                          g.at("requested_s").get<double>(), g.at("finished_s").get<double>(),
                          g.at("bytes").get<uint64_t>(), g.at("estimate_bps").get<double>()});
  }
  s.meanFileRttMs = optionalFrom(j.at("mean_file_rtt_ms"));
  s.medianFileRttMs = optionalFrom(j.at("median_file_rtt_ms"));
  s.meanFileJitterMs = optionalFrom(j.at("mean_file_jitter_ms"));
  s.downloadedMediaS = j.at("downloaded_media_s").get<double>();
  s.playedMediaS = j.at("played_media_s").get<double>();
  s.finalBufferS = j.at("final_buffer_s").get<double>();
  for (const auto& f : j.at("files")) {
    FileMetrics m;
    m.name = f.at("name").get<std::string>();
    m.version = f.at("version").get<uint64_t>();
    m.segment = f.at("segment").get<bool>();
    m.bytes = f.at("bytes").get<uint64_t>();
    m.chunks = f.at("chunks").get<uint64_t>();
    m.cacheChunks = f.at("cache_chunks").get<uint64_t>();
    m.retransmissions = f.at("retransmissions").get<uint64_t>();
    m.startedS = f.at("started_s").get<double>();
    m.finishedS = f.at("finished_s").get<double>();
    m.avgRttMs = f.at("avg_rtt_ms").get<double>();
    m.jitterMs = f.at("jitter_ms").get<double>();
    s.files.push_back(std::move(m));
  }
  return s;
}

} // namespace

std::string
serializeReport(const MetricsReport& r)
{
  Json j;
  j["scenario"] = r.scenarioId;
  j["seed"] = r.seed;
  j["jitter_mode"] = r.jitterMode;
  j["end_time_s"] = r.endTimeS;
  j["truncated"] = r.truncated;
  j["sessions"] = Json::array();
  for (const auto& s : r.sessions)
    j["sessions"].push_back(toJson(s));
  j["caches"] = Json::array();
  for (const auto& c : r.caches) {
    j["caches"].push_back({{"node", c.node}, {"cs_hits", c.hits}, {"cs_misses", c.misses},
                           {"hit_ratio", optionalJson(c.hitRatio)}, {"prewarmed_chunks", c.prewarmedChunks},
                           {"prefetch_interests", c.prefetchInterests}, {"interests_in", c.interestsIn},
                           {"interests_out", c.interestsOut}, {"data_in", c.dataIn}, {"data_out", c.dataOut}});
  }
  j["servers"] = Json::array();
  for (const auto& s : r.servers) {
    j["servers"].push_back({{"node", s.node}, {"interests", s.interests}, {"data_sent", s.dataSent},
                            {"nacks_sent", s.nacksSent}, {"mean_response_ms", optionalJson(s.meanResponseMs)},
                            {"max_response_ms", optionalJson(s.maxResponseMs)},
                            {"fraction_within_5ms", s.fractionWithin5Ms}});
  }
  j["links"] = Json::array();
  for (const auto& l : r.links) {
    j["links"].push_back({{"from", l.from}, {"to", l.to}, {"packets_sent", l.packetsSent},
                          {"packets_dropped", l.packetsDropped}, {"packets_delivered", l.packetsDelivered},
                          {"bytes_sent", l.bytesSent}});
  }
  j["rtt_cdf"] = Json::array();
  for (const auto& p : r.rttCdf)
    j["rtt_cdf"].push_back({{"avg_rtt_ms", p.value}, {"fraction", p.fraction}});
  return j.dump(2) + "\n";
}

MetricsReport
parseReport(std::string_view text)
{
  try {
    Json j = Json::parse(text);
    MetricsReport r;
    r.scenarioId = j.at("scenario").get<std::string>();
    r.seed = j.at("seed").get<uint64_t>();
    r.jitterMode = j.at("jitter_mode").get<std::string>();
    r.endTimeS = j.at("end_time_s").get<double>();
    r.truncated = j.at("truncated").get<bool>();
    for (const auto& s : j.at("sessions"))
      r.sessions.push_back(sessionFrom(s));
    for (const auto& c : j.at("caches")) {
      r.caches.push_back({c.at("node").get<std::string>(), c.at("cs_hits").get<uint64_t>(),
                          c.at("cs_misses").get<uint64_t>(), optionalFrom(c.at("hit_ratio")),
                          c.at("prewarmed_chunks").get<uint64_t>(), c.at("prefetch_interests").get<uint64_t>(),
                          c.at("interests_in").get<uint64_t>(), c.at("interests_out").get<uint64_t>(),
                          c.at("data_in").get<uint64_t>(), c.at("data_out").get<uint64_t>()});
    }
    for (const auto& s : j.at("servers")) {
      r.servers.push_back({s.at("node").get<std::string>(), s.at("interests").get<uint64_t>(),
                           s.at("data_sent").get<uint64_t>(), s.at("nacks_sent").get<uint64_t>(),
                           optionalFrom(s.at("mean_response_ms")), optionalFrom(s.at("max_response_ms")),
                           s.at("fraction_within_5ms").get<double>()});
    }
    for (const auto& l : j.at("links")) {
      r.links.push_back({l.at("from").get<std::string>(), l.at("to").get<std::string>(),
                         l.at("packets_sent").get<uint64_t>(), l.at("packets_dropped").get<uint64_t>(),
                         l.at("packets_delivered").get<uint64_t>(), l.at("bytes_sent").get<uint64_t>()});
    }
    for (const auto& p : j.at("rtt_cdf"))
      r.rttCdf.push_back({p.at("avg_rtt_ms").get<double>(), p.at("fraction").get<double>()});
    return r;
  }
  catch (const nlohmann::json::exception& e) {
    throw ReportFormatError(std::string("malformed report: ") + e.what());
  }
}

} // namespace ndnstream::metrics
