#ifndef NDNSTREAM_CONSUMER_GATEWAY_PROBER_HPP
#define NDNSTREAM_CONSUMER_GATEWAY_PROBER_HPP

#include "ndnstream/consumer/network-port.hpp"

#include <optional>
#include <vector>

namespace ndnstream::consumer {

NDNSTREAM_DECLARE_ERROR(AllProbesFailed);

struct ProbeResult
{
  std::string gateway;
  /// Interest-to-Data delay; empty if the probe timed out or was refused.
  std::optional<double> responseMs;

  friend bool
  operator==(const ProbeResult&, const ProbeResult&) = default;
};

/// Index of the fastest responder; ties go to the earlier candidate.
/// \throw AllProbesFailed if no probe was answered
size_t
chooseFastest(const std::vector<ProbeResult>& results);

/**
 * \brief Sends one probe Interest through every candidate gateway at once and
 * reports the measured response times when all have answered or timed out.
 */
class GatewayProber
{
public:
  using Completion = std::function<void(std::vector<ProbeResult>)>;

  GatewayProber(NetworkPort& port, std::vector<std::string> candidates, Name probeName,
                double timeoutMs, Completion completion);

  ~GatewayProber();

  GatewayProber(const GatewayProber&) = delete;
  GatewayProber& operator=(const GatewayProber&) = delete;

  void
  start();

  bool
  onData(const std::string& gateway, const Data& data);

  bool
  onNack(const std::string& gateway, const Nack& nack);

  bool
  done() const noexcept
  {
    return m_done;
  }

private:
  struct Probe
  {
    ProbeResult result;
    SimTime sentAt = 0;
    TimerId timer = 0;
    bool settled = false;
  };

  Probe*
  findProbe(const std::string& gateway);

  void
  settle(Probe& probe, std::optional<double> responseMs);

private:
  NetworkPort& m_port;
  Name m_probeName;
  double m_timeoutMs;
  Completion m_completion;
  std::vector<Probe> m_probes;
  size_t m_outstanding = 0;
  bool m_done = false;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_GATEWAY_PROBER_HPP
