#ifndef NDNSTREAM_CONSUMER_PLAYER_SESSION_HPP
#define NDNSTREAM_CONSUMER_PLAYER_SESSION_HPP

#include "ndnstream/consumer/abr-controller.hpp"
#include "ndnstream/consumer/bandwidth-estimator.hpp"
#include "ndnstream/consumer/file-fetcher.hpp"
#include "ndnstream/consumer/gateway-prober.hpp"
#include "ndnstream/consumer/playback-buffer.hpp"
#include "ndnstream/producer/playlist.hpp"

#include <memory>

namespace ndnstream::consumer {

struct SessionConfig
{
  /// Name prefix that resource paths are resolved under.
  Name prefix;
  std::string videoId;
  std::vector<std::string> gateways;
  /// Probe target; the video's master playlist when empty.
  Name probeName;
  FetchOptions fetch;
  EstimatorConfig estimator;
  double safetyFactor = DEFAULT_SAFETY_FACTOR;
  double startupThresholdS = 2.0;
  double bufferCapacityS = 30.0;
};

enum class SessionState {
  Idle,
  Startup,
  Playing,
  Rebuffering,
  Ended,
};

const char*
toString(SessionState state) noexcept;

struct FileRecord
{
  Name base;
  uint64_t version = 0;
  uint64_t bytes = 0;
  SimTime started = 0;
  SimTime finished = 0;
  std::vector<ChunkTiming> timings;
  /// A media segment rather than a playlist.
  bool segment = false;
};

struct SegmentRecord
{
  size_t index = 0;
  std::string label;
  SimTime requested = 0;
  SimTime finished = 0;
  uint64_t bytes = 0;
  /// Estimate after this download was sampled.
  double estimateBps = 0;
};

struct QualityChange
{
  SimTime at = 0;
  std::string label;
};

struct EstimatorSample
{
  SimTime at = 0;
  double estimateBps = 0;
};

struct RebufferEvent
{
  SimTime start = 0;
  std::optional<SimTime> end;
};

/// Everything a session observed, complete or not.
struct SessionRecord
{
  std::string gateway;
  std::vector<ProbeResult> probes;
  SimTime started = 0;
  std::optional<SimTime> ended;
  std::optional<double> startupDelayS;
  std::vector<RebufferEvent> rebuffers;
  std::vector<QualityChange> qualityTimeline;
  std::vector<EstimatorSample> estimatorTrace;
  std::vector<FileRecord> files;
  std::vector<SegmentRecord> segments;
  double downloadedMediaS = 0;
  double playedMediaS = 0;
  double finalBufferS = 0;
  bool aborted = false;
  std::string abortReason;
};

/**
 * \brief A native player: picks a gateway, reads the playlists and downloads
 * segments one at a time while the buffer drains in simulated time.
 *
 * Downloads pause while the next segment would overflow the buffer. Playback
 * starts, and resumes after a stall, once the startup threshold is buffered.
 */
class PlayerSession
{
public:
  using Completion = std::function<void(const SessionRecord&)>;

  PlayerSession(NetworkPort& port, SessionConfig config, const KeyMaterial* verifyKey,
                Completion completion = nullptr);

  ~PlayerSession();

  PlayerSession(const PlayerSession&) = delete;
  PlayerSession& operator=(const PlayerSession&) = delete;

  void
  start();

  void
  onData(const std::string& gateway, const Data& data, DeliveryInfo info);

  void
  onNack(const std::string& gateway, const Nack& nack);

  /// \throw FetchError with kind InvalidRequest for an empty path
  Name
  resourceName(std::string_view path) const;

  /// Fetches "<prefix>/<path>" through the chosen gateway.
  void
  resourceRequest(std::string_view path, FileFetcher::Completion completion);

  SessionState
  state() const noexcept
  {
    return m_state;
  }

  /// Snapshot with playback counters settled to the current time.
  SessionRecord
  record() const;

  const SessionConfig&
  config() const noexcept
  {
    return m_config;
  }

private:
  void
  attach(std::string gateway);

  void
  onMasterPlaylist(FetchResult result);

  void
  ensureMediaPlaylist(size_t tier, std::function<void()> next);

  void
  requestNextSegment();

  void
  onSegment(size_t tier, SimTime requested, FetchResult result);

  void
  updatePlayback();

  void
  armStallTimer();

  void
  onStall();

  void
  complete();

  void
  abort(const std::string& reason);

private:
  NetworkPort& m_port;
  SessionConfig m_config;
  const KeyMaterial* m_key;
  Completion m_completion;

  SessionState m_state = SessionState::Idle;
  SessionRecord m_record;

  std::unique_ptr<GatewayProber> m_prober;
  std::unique_ptr<FileFetcher> m_fetcher;
  std::unique_ptr<GatewayProber> m_retiredProber;
  std::unique_ptr<FileFetcher> m_retiredFetcher;

  std::vector<producer::VariantStream> m_variants;
  std::vector<std::optional<std::vector<producer::MediaSegment>>> m_mediaPlaylists;
  std::optional<AbrController> m_abr;
  BandwidthEstimator m_estimator;
  PlaybackBuffer m_buffer;
  size_t m_segmentCount = 0;
  size_t m_nextSegment = 0;
  TimerId m_stallTimer = 0;
  TimerId m_waitTimer = 0;
};

} // namespace ndnstream::consumer

#endif // NDNSTREAM_CONSUMER_PLAYER_SESSION_HPP
