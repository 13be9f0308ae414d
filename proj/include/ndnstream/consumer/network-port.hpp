#ifndef NDNSTREAM_CONSUMER_NETWORK_PORT_HPP
#define NDNSTREAM_CONSUMER_NETWORK_PORT_HPP

#include "ndnstream/core/packet.hpp"
#include "ndnstream/core/time.hpp"

#include <functional>
#include <string>

namespace ndnstream::consumer {

using TimerId = uint64_t;

/// Simulation-side facts about a delivered Data packet; never visible on the wire.
struct DeliveryInfo
{
  /// Served from some node's Content Store without reaching the producer.
  bool fromCache = false;
};

/**
 * \brief What a consumer sees of its host: a clock, timers, nonces and
 * the faces towards its candidate gateways.
 */
class NetworkPort
{
public:
  virtual
  ~NetworkPort() = default;

  virtual SimTime
  now() const = 0;

  virtual void
  expressInterest(const std::string& gateway, const Interest& interest) = 0;

  virtual TimerId
  schedule(double delayS, std::function<void()> callback) = 0;

  virtual void
  cancel(TimerId timer) = 0;

  virtual uint32_t
  nextNonce() = 0;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_NETWORK_PORT_HPP
