#ifndef NDNSTREAM_CONSUMER_FILE_FETCHER_HPP
#define NDNSTREAM_CONSUMER_FILE_FETCHER_HPP

#include "ndnstream/consumer/network-port.hpp"
#include "ndnstream/core/integrity.hpp"

#include <map>
#include <variant>

namespace ndnstream::consumer {

struct FetchOptions
{
  /// Maximum chunks with an outstanding Interest.
  uint32_t window = 8;
  double rtoMs = 1000.0;
  uint32_t maxRetx = 3;
};

struct ChunkTiming
{
  uint64_t chunk = 0;
  SimTime firstSent = 0;
  SimTime lastSent = 0;
  SimTime received = 0;
  uint32_t retxCount = 0;
  bool fromCacheHint = false;

  /// Latest Interest transmission to earliest Data arrival.
  double
  rttMs() const noexcept
  {
    return toMillis(received - lastSent);
  }

  friend bool
  operator==(const ChunkTiming&, const ChunkTiming&) = default;
};

enum class FetchErrorKind {
  Timeout,
  ContentMissing,
  NoRoute,
  IntegrityFailure,
  InvalidRequest,
};

const char*
toString(FetchErrorKind kind) noexcept;

class FetchError : public Error
{
public:
  FetchError(FetchErrorKind kind, const std::string& what)
    : Error(std::string(toString(kind)) + ": " + what)
    , m_kind(kind)
  {
  }

  FetchErrorKind
  kind() const noexcept
  {
    return m_kind;
  }

private:
  FetchErrorKind m_kind;
};

struct FetchResult
{
  Name base;
  uint64_t version = 0;
  Bytes payload;
  std::vector<ChunkTiming> timings;
  SimTime started = 0;
  SimTime finished = 0;
  uint32_t maxInFlight = 0;
};

using FetchOutcome = std::variant<FetchResult, FetchError>;

/**
 * \brief Retrieves one file by name discovery then pipelined chunk Interests.
 *
 * The first Interest carries the unversioned name with can_be_prefix; its Data
 * reveals the version and final chunk and is kept as payload. A producer
 * answers with chunk 0; a cache may answer with any chunk it still holds.
 * The remaining chunks are requested with at most \c window outstanding.
 * Each outstanding chunk has its own retransmission timer.
 */
class FileFetcher
{
public:
  using Completion = std::function<void(FetchOutcome)>;

  FileFetcher(NetworkPort& port, std::string gateway, const KeyMaterial* verifyKey,
              FetchOptions options, Name base, Completion completion);

  ~FileFetcher();

  FileFetcher(const FileFetcher&) = delete;
  FileFetcher& operator=(const FileFetcher&) = delete;

  void
  start();

  /// Returns false if \p data does not belong to this fetch.
  bool
  onData(const Data& data, DeliveryInfo info);

  bool
  onNack(const Nack& nack);

  bool
  done() const noexcept
  {
    return m_done;
  }

  const Name&
  base() const noexcept
  {
    return m_base;
  }

  /// Outstanding chunk count after every send, for instrumentation.
  const std::vector<uint32_t>&
  inFlightTrace() const noexcept
  {
    return m_inFlightTrace;
  }

private:
  struct Pending
  {
    ChunkTiming timing;
    TimerId timer = 0;
    Name name;
    bool discovery = false;
  };

  void
  send(uint64_t chunk, bool retransmission);

  void
  onTimeout(uint64_t chunk);

  void
  fillWindow();

  void
  finish(FetchOutcome outcome);

private:
  NetworkPort& m_port;
  std::string m_gateway;
  const KeyMaterial* m_key;
  FetchOptions m_options;
  Name m_base;
  Completion m_completion;

  bool m_discovered = false;
  bool m_done = false;
  uint64_t m_version = 0;
  uint64_t m_finalChunk = 0;
  uint64_t m_nextToSend = 1;
  SimTime m_started = 0;
  std::map<uint64_t, Pending> m_pending;
  std::map<uint64_t, std::pair<Content, ChunkTiming>> m_received;
  std::vector<uint32_t> m_inFlightTrace;
  uint32_t m_maxInFlight = 0;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_FILE_FETCHER_HPP
