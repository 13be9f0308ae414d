#ifndef NDNSTREAM_SIM_SCENARIO_FILE_HPP
#define NDNSTREAM_SIM_SCENARIO_FILE_HPP

#include "ndnstream/sim/scenario.hpp"

#include <filesystem>

namespace ndnstream::sim {

/**
 * Parses the YAML scenario format described in docs/scenario-format.md.
 * Unknown keys, wrong types and out-of-range values are rejected with a
 * message naming the offending key path.
 * \throw InvalidScenario
 */
Scenario
parseScenario(std::string_view text);

/// \throw InvalidScenario, including when the file cannot be read
Scenario
loadScenarioFile(const std::filesystem::path& file);

/**
 * Checks cross references and value ranges that do not involve the link
 * graph: sessions, prewarm directives, throttles and videos.
 * \throw InvalidScenario
 */
void
validateScenario(const Scenario& scenario);

} // namespace ndnstream::sim

#endif // NDNSTREAM_SIM_SCENARIO_FILE_HPP
