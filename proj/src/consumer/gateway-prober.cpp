#include "ndnstream/consumer/gateway-prober.hpp"

namespace ndnstream::consumer {

size_t
chooseFastest(const std::vector<ProbeResult>& results)
{
  std::optional<size_t> best;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].responseMs)
      continue;
    if (!best || *results[i].responseMs < *results[*best].responseMs)
      best = i;
  }
  if (!best)
    throw AllProbesFailed("no candidate gateway answered its probe");
  return *best;
}

GatewayProber::GatewayProber(NetworkPort& port, std::vector<std::string> candidates,
                             Name probeName, double timeoutMs, Completion completion)
  : m_port(port)
  , m_probeName(std::move(probeName))
  , m_timeoutMs(timeoutMs)
  , m_completion(std::move(completion))
{
  if (candidates.empty())
    throw Error("gateway probing needs at least one candidate");
  for (auto& c : candidates)
    m_probes.push_back(Probe{ProbeResult{std::move(c), std::nullopt}});
}

GatewayProber::~GatewayProber()
{
  for (auto& p : m_probes) {
    if (!p.settled)
      m_port.cancel(p.timer);
  }
}

void
GatewayProber::start()
{
  m_outstanding = m_probes.size();
  for (size_t i = 0; i < m_probes.size(); ++i) {
    auto& p = m_probes[i];
    p.sentAt = m_port.now();
    p.timer = m_port.schedule(fromMillis(m_timeoutMs), [this, i] { settle(m_probes[i], std::nullopt); });
    m_port.expressInterest(p.result.gateway, Interest::forDiscovery(m_probeName, m_port.nextNonce()));
  }
}

GatewayProber::Probe*
GatewayProber::findProbe(const std::string& gateway)
{
  for (auto& p : m_probes) {
    if (p.result.gateway == gateway && !p.settled)
      return &p;
  }
  return nullptr;
}

bool
GatewayProber::onData(const std::string& gateway, const Data& data)
{
  if (m_done || !m_probeName.isPrefixOf(data.fullName()))
    return false;
  auto* probe = findProbe(gateway);
  if (probe == nullptr)
    return false;
  m_port.cancel(probe->timer);
  settle(*probe, toMillis(m_port.now() - probe->sentAt));
  return true;
}

bool
GatewayProber::onNack(const std::string& gateway, const Nack& nack)
{
  if (m_done || nack.interestName != m_probeName)
    return false;
  auto* probe = findProbe(gateway);
  if (probe == nullptr)
    return false;
  m_port.cancel(probe->timer);
  settle(*probe, std::nullopt);
  return true;
}

void
GatewayProber::settle(Probe& probe, std::optional<double> responseMs)
{
  if (probe.settled)
    return;
  probe.settled = true;
  probe.result.responseMs = responseMs;
  if (--m_outstanding > 0)
    return;

  m_done = true;
  std::vector<ProbeResult> results;
  for (const auto& p : m_probes)
    results.push_back(p.result);
  auto completion = std::move(m_completion);
  if (completion)
    completion(std::move(results));
}

} // namespace ndnstream::consumer
