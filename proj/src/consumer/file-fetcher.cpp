#include "ndnstream/consumer/file-fetcher.hpp"

namespace ndnstream::consumer {

const char*
toString(FetchErrorKind kind) noexcept
{
  switch (kind) {
  case FetchErrorKind::Timeout:
    return "FetchTimeout";
  case FetchErrorKind::ContentMissing:
    return "ContentMissing";
  case FetchErrorKind::NoRoute:
    return "NoRoute";
  case FetchErrorKind::IntegrityFailure:
    return "IntegrityFailure";
  case FetchErrorKind::InvalidRequest:
    return "InvalidRequest";
  }
  return "FetchError";
}

FileFetcher::FileFetcher(NetworkPort& port, std::string gateway, const KeyMaterial* verifyKey,
                         FetchOptions options, Name base, Completion completion)
  : m_port(port)
  , m_gateway(std::move(gateway))
  , m_key(verifyKey)
  , m_options(options)
  , m_base(std::move(base))
  , m_completion(std::move(completion))
{
  if (m_options.window == 0)
    throw Error("fetch window must be at least 1");
  if (!(m_options.rtoMs > 0))
    throw Error("retransmission timeout must be positive");
}

FileFetcher::~FileFetcher()
{
  for (auto& [chunk, p] : m_pending)
    m_port.cancel(p.timer);
}

void
FileFetcher::start()
{
  m_started = m_port.now();
  send(0, false);
}

void
FileFetcher::send(uint64_t chunk, bool retransmission)
{
  SimTime now = m_port.now();
  auto& p = m_pending[chunk];
  if (!retransmission) {
    p.timing.chunk = chunk;
    p.timing.firstSent = now;
    p.discovery = !m_discovered;
    p.name = p.discovery ? m_base : VersionedChunkName(m_base, m_version, chunk).toName();
  }
  else {
    ++p.timing.retxCount;
  }
  p.timing.lastSent = now;

  uint32_t nonce = m_port.nextNonce();
  Interest interest = p.discovery ? Interest::forDiscovery(m_base, nonce)
                                  : Interest::forChunk(VersionedChunkName(m_base, m_version, chunk), nonce);
  p.timer = m_port.schedule(fromMillis(m_options.rtoMs), [this, chunk] { onTimeout(chunk); });

  auto inFlight = static_cast<uint32_t>(m_pending.size());
  m_inFlightTrace.push_back(inFlight);
  m_maxInFlight = std::max(m_maxInFlight, inFlight);
  m_port.expressInterest(m_gateway, interest);
}

void
FileFetcher::onTimeout(uint64_t chunk)
{
  if (m_done)
    return;
  auto it = m_pending.find(chunk);
  if (it == m_pending.end())
    return;
  if (it->second.timing.retxCount >= m_options.maxRetx) {
    finish(FetchError(FetchErrorKind::Timeout,
                      it->second.name.toUri() + " unanswered after " +
                      std::to_string(m_options.maxRetx) + " retransmissions"));
    return;
  }
  send(chunk, true);
}

bool
FileFetcher::onData(const Data& data, DeliveryInfo info)
{
  if (m_done || data.name.base != m_base)
    return false;

  uint64_t chunk = data.name.chunk;
  // the discovery Interest occupies slot 0 until answered by any chunk
  uint64_t slot = m_discovered ? chunk : 0;
  if (m_discovered && (data.name.version != m_version || chunk > m_finalChunk))
    return false;

  auto it = m_pending.find(slot);
  if (it == m_pending.end())
    return true; // duplicate of a chunk already received

  if (m_key != nullptr && !verifyData(data, *m_key)) {
    finish(FetchError(FetchErrorKind::IntegrityFailure, data.fullName().toUri() + " fails verification"));
    return true;
  }
  if (!m_discovered) {
    if (data.finalChunk < chunk) {
      finish(FetchError(FetchErrorKind::IntegrityFailure,
                        "discovery answered with " + data.fullName().toUri() + " beyond its final chunk"));
      return true;
    }
    m_discovered = true;
    m_version = data.name.version;
    m_finalChunk = data.finalChunk;
    m_nextToSend = 0;
  }

  auto timing = it->second.timing;
  timing.chunk = chunk;
  timing.received = m_port.now();
  timing.fromCacheHint = info.fromCache;
  m_port.cancel(it->second.timer);
  m_pending.erase(it);
  m_received.emplace(chunk, std::make_pair(data.content, timing));

  if (m_received.size() == m_finalChunk + 1) {
    finish(FetchResult{});
    return true;
  }
  fillWindow();
  return true;
}

bool
FileFetcher::onNack(const Nack& nack)
{
  if (m_done)
    return false;
  for (const auto& [chunk, p] : m_pending) {
    if (p.name != nack.interestName)
      continue;
    auto kind = nack.reason == NackReason::NoContent ? FetchErrorKind::ContentMissing
                                                     : FetchErrorKind::NoRoute;
    finish(FetchError(kind, nack.interestName.toUri()));
    return true;
  }
  return false;
}

void
FileFetcher::fillWindow()
{
  while (m_pending.size() < m_options.window && m_nextToSend <= m_finalChunk) {
    uint64_t chunk = m_nextToSend++;
    if (m_received.count(chunk) == 0)
      send(chunk, false);
  }
}

void
FileFetcher::finish(FetchOutcome outcome)
{
  m_done = true;
  for (auto& [chunk, p] : m_pending)
    m_port.cancel(p.timer);
  m_pending.clear();

  if (auto* result = std::get_if<FetchResult>(&outcome)) {
    result->base = m_base;
    result->version = m_version;
    result->started = m_started;
    result->finished = m_port.now();
    result->maxInFlight = m_maxInFlight;
    size_t total = 0;
    for (const auto& [chunk, entry] : m_received)
      total += entry.first.size();
    result->payload.reserve(total);
    for (const auto& [chunk, entry] : m_received) {
      auto bytes = entry.first.bytes();
      result->payload.insert(result->payload.end(), bytes.begin(), bytes.end());
      result->timings.push_back(entry.second);
    }
  }
  m_received.clear();

  auto completion = std::move(m_completion);
  if (completion)
    completion(std::move(outcome));
}

} // namespace ndnstream::consumer
