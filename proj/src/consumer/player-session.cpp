#include "ndnstream/consumer/player-session.hpp"

#include <algorithm>

namespace ndnstream::consumer {

const char*
toString(SessionState state) noexcept
{
  switch (state) {
  case SessionState::Idle:
    return "Idle";
  case SessionState::Startup:
    return "Startup";
  case SessionState::Playing:
    return "Playing";
  case SessionState::Rebuffering:
    return "Rebuffering";
  case SessionState::Ended:
    return "Ended";
  }
  return "Unknown";
}

namespace {

std::string
textOf(const Bytes& payload)
{
  return std::string(payload.begin(), payload.end());
}

/// Directory part of a relative path, with a trailing slash, or empty.
std::string
directoryOf(std::string_view path)
{
  auto slash = path.rfind('/');
  return slash == std::string_view::npos ? std::string() : std::string(path.substr(0, slash + 1));
}

std::string
masterPath(const SessionConfig& config)
{
  return config.videoId + "/playlist.m3u8";
}

} // namespace

PlayerSession::PlayerSession(NetworkPort& port, SessionConfig config, const KeyMaterial* verifyKey,
                             Completion completion)
  : m_port(port)
  , m_config(std::move(config))
  , m_key(verifyKey)
  , m_completion(std::move(completion))
  , m_estimator(m_config.estimator)
  , m_buffer(m_config.startupThresholdS, m_config.bufferCapacityS)
{
  if (m_config.gateways.empty())
    throw Error("session needs at least one candidate gateway");
  if (m_config.videoId.empty())
    throw Error("session needs a video id");
  if (!(m_config.safetyFactor > 0 && m_config.safetyFactor <= 1))
    throw Error("safety factor must lie in (0, 1]");
}

PlayerSession::~PlayerSession()
{
  m_port.cancel(m_stallTimer);
  m_port.cancel(m_waitTimer);
}

Name
PlayerSession::resourceName(std::string_view path) const
{
  while (!path.empty() && path.front() == '/')
    path.remove_prefix(1);
  if (path.empty())
    throw FetchError(FetchErrorKind::InvalidRequest, "empty resource path");

  Name name = m_config.prefix;
  size_t pos = 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos)
      next = path.size();
    if (next == pos)
      throw FetchError(FetchErrorKind::InvalidRequest, "empty component in '" + std::string(path) + "'");
    name.append(std::string(path.substr(pos, next - pos)));
    pos = next + 1;
  }
  return name;
}

void
PlayerSession::start()
{
  if (m_state != SessionState::Idle)
    throw Error("session already started");
  m_state = SessionState::Startup;
  m_record.started = m_port.now();

  if (m_config.gateways.size() == 1) {
    attach(m_config.gateways.front());
    return;
  }

  Name probe = m_config.probeName.empty() ? resourceName(masterPath(m_config)) : m_config.probeName;
  m_prober = std::make_unique<GatewayProber>(
    m_port, m_config.gateways, probe, m_config.fetch.rtoMs,
    [this] (std::vector<ProbeResult> results) {
      m_retiredProber = std::move(m_prober);
      m_record.probes = results;
      size_t best = 0;
      try {
        best = chooseFastest(results);
      }
      catch (const AllProbesFailed& e) {
        abort(e.what());
        return;
      }
      attach(results[best].gateway);
    });
  m_prober->start();
}

void
PlayerSession::attach(std::string gateway)
{
  m_record.gateway = std::move(gateway);
  resourceRequest(masterPath(m_config), [this] (FetchOutcome outcome) {
    if (auto* err = std::get_if<FetchError>(&outcome))
      return abort(err->what());
    onMasterPlaylist(std::move(std::get<FetchResult>(outcome)));
  });
}

void
PlayerSession::onData(const std::string& gateway, const Data& data, DeliveryInfo info)
{
  if (m_prober && !m_prober->done()) {
    m_prober->onData(gateway, data);
    return;
  }
  if (m_fetcher && !m_fetcher->done() && gateway == m_record.gateway)
    m_fetcher->onData(data, info);
}

void
PlayerSession::onNack(const std::string& gateway, const Nack& nack)
{
  if (m_prober && !m_prober->done()) {
    m_prober->onNack(gateway, nack);
    return;
  }
  if (m_fetcher && !m_fetcher->done() && gateway == m_record.gateway)
    m_fetcher->onNack(nack);
}

void
PlayerSession::resourceRequest(std::string_view path, FileFetcher::Completion completion)
{
  if (m_record.gateway.empty())
    throw Error("no gateway chosen yet");
  Name base = resourceName(path);
  // the old fetcher may still be on the call stack; keep it alive one more round
  m_retiredFetcher = std::move(m_fetcher);
  m_fetcher = std::make_unique<FileFetcher>(
    m_port, m_record.gateway, m_key, m_config.fetch, base,
    [this, completion = std::move(completion)] (FetchOutcome outcome) {
      if (auto* result = std::get_if<FetchResult>(&outcome)) {
        m_record.files.push_back(FileRecord{result->base, result->version, result->payload.size(),
                                            result->started, result->finished, result->timings, false});
      }
      completion(std::move(outcome));
    });
  m_fetcher->start();
}

void
PlayerSession::onMasterPlaylist(FetchResult result)
{
  try {
    m_variants = producer::parseMasterPlaylist(textOf(result.payload));
  }
  catch (const producer::PlaylistError& e) {
    return abort(std::string("master playlist: ") + e.what());
  }
  if (m_variants.empty())
    return abort("master playlist lists no variants");

  std::stable_sort(m_variants.begin(), m_variants.end(), [] (const auto& a, const auto& b) {
    return a.representation.minBandwidthBps < b.representation.minBandwidthBps;
  });
  std::vector<Representation> tiers;
  for (const auto& v : m_variants)
    tiers.push_back(v.representation);
  try {
    m_abr.emplace(tiers, m_config.safetyFactor);
  }
  catch (const Error& e) {
    return abort(std::string("master playlist: ") + e.what());
  }
  m_mediaPlaylists.assign(m_variants.size(), std::nullopt);

  ensureMediaPlaylist(0, [this] {
    m_segmentCount = m_mediaPlaylists[0]->size();
    requestNextSegment();
  });
}

void
PlayerSession::ensureMediaPlaylist(size_t tier, std::function<void()> next)
{
  if (m_mediaPlaylists[tier]) {
    next();
    return;
  }
  std::string path = directoryOf(masterPath(m_config)) + m_variants[tier].uri;
  resourceRequest(path, [this, tier, next = std::move(next)] (FetchOutcome outcome) {
    if (auto* err = std::get_if<FetchError>(&outcome))
      return abort(err->what());
    try {
      m_mediaPlaylists[tier] = producer::parseMediaPlaylist(textOf(std::get<FetchResult>(outcome).payload));
    }
    catch (const producer::PlaylistError& e) {
      return abort(std::string("media playlist: ") + e.what());
    }
    if (m_segmentCount != 0 && m_mediaPlaylists[tier]->size() != m_segmentCount)
      return abort("media playlists disagree on segment count");
    next();
  });
}

void
PlayerSession::requestNextSegment()
{
  m_waitTimer = 0;
  if (m_state == SessionState::Ended)
    return;
  if (m_nextSegment >= m_segmentCount) {
    updatePlayback();
    return;
  }

  SimTime now = m_port.now();
  double duration = (*m_mediaPlaylists[0])[m_nextSegment].durationS;
  if (m_buffer.playing() && !m_buffer.canAccept(duration, now)) {
    double wait = m_buffer.timeUntilRoom(duration, now);
    m_waitTimer = m_port.schedule(wait, [this] { requestNextSegment(); });
    return;
  }

  if (auto estimate = m_estimator.estimate())
    m_abr->select(*estimate);
  size_t tier = m_abr->currentIndex();
  const auto& label = m_abr->current().label;
  if (m_record.qualityTimeline.empty() || m_record.qualityTimeline.back().label != label)
    m_record.qualityTimeline.push_back({now, label});

  ensureMediaPlaylist(tier, [this, tier] {
    const auto& segment = (*m_mediaPlaylists[tier])[m_nextSegment];
    std::string path = directoryOf(masterPath(m_config)) + directoryOf(m_variants[tier].uri) + segment.uri;
    SimTime requested = m_port.now();
    resourceRequest(path, [this, tier, requested] (FetchOutcome outcome) {
      if (auto* err = std::get_if<FetchError>(&outcome))
        return abort(err->what());
      onSegment(tier, requested, std::move(std::get<FetchResult>(outcome)));
    });
  });
}

void
PlayerSession::onSegment(size_t tier, SimTime requested, FetchResult result)
{
  SimTime now = m_port.now();
  double duration = (*m_mediaPlaylists[tier])[m_nextSegment].durationS;
  m_record.files.back().segment = true;
  double elapsed = result.finished - result.started;
  double estimate = elapsed > 0 ? m_estimator.recordSample(result.payload.size(), elapsed)
                                : m_estimator.estimate().value_or(0);
  m_record.estimatorTrace.push_back({now, estimate});
  m_record.segments.push_back(SegmentRecord{m_nextSegment, m_variants[tier].representation.label,
                                            requested, now, result.payload.size(), estimate});

  m_buffer.add(duration, now);
  m_record.downloadedMediaS += duration;
  ++m_nextSegment;
  updatePlayback();
  requestNextSegment();
}

void
PlayerSession::updatePlayback()
{
  SimTime now = m_port.now();
  bool allDownloaded = m_nextSegment >= m_segmentCount;
  if (m_state == SessionState::Startup || m_state == SessionState::Rebuffering) {
    if (!m_buffer.reachedStartupThreshold(now) && !allDownloaded)
      return;
    if (m_state == SessionState::Startup)
      m_record.startupDelayS = now - m_record.started;
    else
      m_record.rebuffers.back().end = now;
    m_buffer.play(now);
    m_state = SessionState::Playing;
  }
  if (m_state == SessionState::Playing)
    armStallTimer();
}

void
PlayerSession::armStallTimer()
{
  m_port.cancel(m_stallTimer);
  double delay = std::max(0.0, m_buffer.emptyAt() - m_port.now());
  m_stallTimer = m_port.schedule(delay, [this] { onStall(); });
}

void
PlayerSession::onStall()
{
  m_stallTimer = 0;
  SimTime now = m_port.now();
  m_buffer.pause(now);
  if (m_nextSegment >= m_segmentCount) {
    complete();
    return;
  }
  m_state = SessionState::Rebuffering;
  m_record.rebuffers.push_back({now, std::nullopt});
}

void
PlayerSession::complete()
{
  SimTime now = m_port.now();
  m_state = SessionState::Ended;
  m_record.ended = now;
  m_port.cancel(m_stallTimer);
  m_port.cancel(m_waitTimer);
  m_stallTimer = m_waitTimer = 0;
  m_record.playedMediaS = m_buffer.played(now);
  m_record.finalBufferS = m_buffer.level(now);
  if (m_completion)
    m_completion(m_record);
}

void
PlayerSession::abort(const std::string& reason)
{
  if (m_state == SessionState::Ended)
    return;
  m_buffer.pause(m_port.now());
  m_record.aborted = true;
  m_record.abortReason = reason;
  complete();
}

SessionRecord
PlayerSession::record() const
{
  SessionRecord r = m_record;
  if (m_state != SessionState::Ended) {
    r.playedMediaS = m_buffer.played(m_port.now());
    r.finalBufferS = m_buffer.level(m_port.now());
  }
  return r;
}

} // namespace ndnstream::consumer
