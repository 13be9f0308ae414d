#ifndef NDNSTREAM_METRICS_EXPORT_HPP
#define NDNSTREAM_METRICS_EXPORT_HPP

#include "ndnstream/metrics/report.hpp"

#include <filesystem>

namespace ndnstream::metrics {

NDNSTREAM_DECLARE_ERROR(IoFailure);

/// CSV renderings; column layouts are listed in docs/report-format.md.
std::string
qualityTimelineCsv(const MetricsReport& report);

std::string
estimatorTraceCsv(const MetricsReport& report);

std::string
rttPerFileCsv(const MetricsReport& report);

std::string
rttCdfCsv(const MetricsReport& report);

/**
 * Writes report.json and the four CSV files into \p directory, creating it
 * if needed. Returns the written paths in a fixed order.
 * \throw IoFailure
 */
std::vector<std::filesystem::path>
exportReport(const MetricsReport& report, const std::filesystem::path& directory);

} // namespace ndnstream::metrics

#endif // NDNSTREAM_METRICS_EXPORT_HPP
