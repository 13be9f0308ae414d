#include "ndnstream/metrics/export.hpp"

#include <fmt/core.h>

#include <fstream>

namespace ndnstream::metrics {
namespace {

std::string
num(double v)
{
  return fmt::format("{:.6g}", v);
}

void
writeFile(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoFailure("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out)
    throw IoFailure("cannot write '" + path.string() + "'");
}

} // namespace

std::string
qualityTimelineCsv(const MetricsReport& report)
{
  std::string out = "consumer,at_s,label\n";
  for (const auto& s : report.sessions) {
    for (const auto& q : s.qualityTimeline)
      out += fmt::format("{},{},{}\n", s.consumer, num(q.atS), q.label);
  }
  return out;
}

std::string
estimatorTraceCsv(const MetricsReport& report)
{
  std::string out = "consumer,at_s,estimate_bps\n";
  for (const auto& s : report.sessions) {
    for (const auto& e : s.estimatorTrace)
      out += fmt::format("{},{},{}\n", s.consumer, num(e.atS), num(e.estimateBps));
  }
  return out;
}

std::string
rttPerFileCsv(const MetricsReport& report)
{
  std::string out = "consumer,file,segment,chunks,cache_chunks,retransmissions,avg_rtt_ms,jitter_ms\n";
  for (const auto& s : report.sessions) {
    for (const auto& f : s.files) {
      out += fmt::format("{},{},{},{},{},{},{},{}\n", s.consumer, f.name, f.segment ? 1 : 0, f.chunks,
                         f.cacheChunks, f.retransmissions, num(f.avgRttMs), num(f.jitterMs));
    }
  }
  return out;
}

std::string
rttCdfCsv(const MetricsReport& report)
{
  std::string out = "avg_rtt_ms,fraction\n";
  for (const auto& p : report.rttCdf)
    out += fmt::format("{},{}\n", num(p.value), num(p.fraction));
  return out;
}

std::vector<std::filesystem::path>
exportReport(const MetricsReport& report, const std::filesystem::path& directory)
{
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec)
    throw IoFailure("cannot create '" + directory.string() + "': " + ec.message());

  std::vector<std::pair<std::string, std::string>> files{
    {"report.json", serializeReport(report)},
    {"quality_timeline.csv", qualityTimelineCsv(report)},
    {"estimator_trace.csv", estimatorTraceCsv(report)},
    {"rtt_per_file.csv", rttPerFileCsv(report)},
    {"rtt_cdf.csv", rttCdfCsv(report)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    auto path = directory / name;
    writeFile(path, content);
    written.push_back(path);
  }
  return written;
}

} // namespace ndnstream::metrics
