#ifndef NDNSTREAM_SIM_EXPERIMENTS_HPP
#define NDNSTREAM_SIM_EXPERIMENTS_HPP

#include "ndnstream/sim/scenario.hpp"

namespace ndnstream::sim::experiments {

NDNSTREAM_DECLARE_ERROR(UnknownExperiment);

/// Names accepted by make(), in display order.
const std::vector<std::string>&
names();

/// \throw UnknownExperiment
Scenario
make(std::string_view name);

/// Bandwidths of the throttled server egress, one per dwell period.
std::vector<double>
staircaseRatesBps();

inline constexpr double STAIRCASE_DWELL_S = 60.0;

/// consumer - gateway - server chain; server egress steps down then back up.
Scenario
abrStaircase();

/// consumer - gateway - server chain with no cache at the gateway.
Scenario
noCache();

/// As noCache(), with most of the 720p representation preloaded at the gateway.
Scenario
withCache();

/// As withCache(), with the gateway prefetching ahead of solicited chunks.
Scenario
prefetch(uint32_t depth = 16);

/**
 * Two consumers behind one gateway play the same video a few ms apart.
 * The baseline disables both caching and Interest aggregation.
 */
Scenario
multicast(bool baseline = false);

/// Single-tier video behind one 2 Mbps bottleneck, for startup-delay checks.
Scenario
startup();

/// 10 ms + 30 ms chain with fast links, for per-chunk RTT checks.
Scenario
rttCalibration();

} // namespace ndnstream::sim::experiments

#endif // NDNSTREAM_SIM_EXPERIMENTS_HPP
