#ifndef NDNSTREAM_METRICS_REPORT_HPP
#define NDNSTREAM_METRICS_REPORT_HPP

#include "ndnstream/sim/simulation.hpp"

namespace ndnstream::metrics {

NDNSTREAM_DECLARE_ERROR(ReportFormatError);

struct FileMetrics
{
  std::string name;
  uint64_t version = 0;
  bool segment = false;
  uint64_t bytes = 0;
  uint64_t chunks = 0;
  /// Chunks answered without reaching the producer.
  uint64_t cacheChunks = 0;
  uint64_t retransmissions = 0;
  double startedS = 0;
  double finishedS = 0;
  double avgRttMs = 0;
  double jitterMs = 0;

  friend bool
  operator==(const FileMetrics&, const FileMetrics&) = default;
};

struct ProbeMetrics
{
  std::string gateway;
  std::optional<double> responseMs;

  friend bool
  operator==(const ProbeMetrics&, const ProbeMetrics&) = default;
};

struct QualityPoint
{
  double atS = 0;
  std::string label;

  friend bool
  operator==(const QualityPoint&, const QualityPoint&) = default;
};

struct EstimatePoint
{
  double atS = 0;
  double estimateBps = 0;

  friend bool
  operator==(const EstimatePoint&, const EstimatePoint&) = default;
};

struct SegmentMetrics
{
  uint64_t index = 0;
  std::string label;
  double requestedS = 0;
  double finishedS = 0;
  uint64_t bytes = 0;
  double estimateBps = 0;

  friend bool
  operator==(const SegmentMetrics&, const SegmentMetrics&) = default;
};

struct RebufferInterval
{
  double startS = 0;
  std::optional<double> endS;

  friend bool
  operator==(const RebufferInterval&, const RebufferInterval&) = default;
};

struct SessionMetrics
{
  std::string consumer;
  std::string video;
  std::string gateway;
  std::vector<ProbeMetrics> probes;
  bool completed = false;
  bool aborted = false;
  std::string abortReason;
  double startedS = 0;
  std::optional<double> endedS;
  std::optional<double> startupDelayS;
  uint64_t rebufferCount = 0;
  double rebufferTotalS = 0;
  std::vector<RebufferInterval> rebuffers;
  std::vector<QualityPoint> qualityTimeline;
  uint64_t qualitySwitches = 0;
  std::vector<EstimatePoint> estimatorTrace;
  std::vector<SegmentMetrics> segments;
  std::vector<FileMetrics> files;
  /// Aggregates over segment files: per-file values first, then across files.
  std::optional<double> meanFileRttMs;
  std::optional<double> medianFileRttMs;
  std::optional<double> meanFileJitterMs;
  double downloadedMediaS = 0;
  double playedMediaS = 0;
  double finalBufferS = 0;

  friend bool
  operator==(const SessionMetrics&, const SessionMetrics&) = default;
};

struct CacheMetrics
{
  std::string node;
  uint64_t hits = 0;
  uint64_t misses = 0;
  std::optional<double> hitRatio;
  uint64_t prewarmedChunks = 0;
  uint64_t prefetchInterests = 0;
  uint64_t interestsIn = 0;
  uint64_t interestsOut = 0;
  uint64_t dataIn = 0;
  uint64_t dataOut = 0;

  friend bool
  operator==(const CacheMetrics&, const CacheMetrics&) = default;
};

struct ServerMetrics
{
  std::string node;
  uint64_t interests = 0;
  uint64_t dataSent = 0;
  uint64_t nacksSent = 0;
  std::optional<double> meanResponseMs;
  std::optional<double> maxResponseMs;
  double fractionWithin5Ms = 1.0;

  friend bool
  operator==(const ServerMetrics&, const ServerMetrics&) = default;
};

struct LinkMetrics
{
  std::string from;
  std::string to;
  uint64_t packetsSent = 0;
  uint64_t packetsDropped = 0;
  uint64_t packetsDelivered = 0;
  uint64_t bytesSent = 0;

  friend bool
  operator==(const LinkMetrics&, const LinkMetrics&) = default;
};

struct MetricsReport
{
  std::string scenarioId;
  uint64_t seed = 0;
  std::string jitterMode = "mad";
  double endTimeS = 0;
  bool truncated = false;
  std::vector<SessionMetrics> sessions;
  std::vector<CacheMetrics> caches;
  std::vector<ServerMetrics> servers;
  std::vector<LinkMetrics> links;
  /// Distribution of per-file average RTTs over the segment files of all sessions.
  CdfSeries rttCdf;

  friend bool
  operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Derives every report metric; reals are rounded to 6 significant digits.
MetricsReport
buildReport(const sim::SimulationResult& result, JitterMode jitter = JitterMode::MeanAbsoluteDifference);

/// Deterministic JSON: fixed key order, 2-space indent, trailing newline.
std::string
serializeReport(const MetricsReport& report);

/// Inverse of serializeReport. \throw ReportFormatError
MetricsReport
parseReport(std::string_view json);

} // namespace ndnstream::metrics

#endif // NDNSTREAM_METRICS_REPORT_HPP
