#ifndef NDNSTREAM_CLI_HPP
#define NDNSTREAM_CLI_HPP

#include <iosfwd>

namespace ndnstream {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_CONFIG_ERROR = 1;
inline constexpr int EXIT_RUNTIME_ERROR = 2;

/**
 * Entry point of the ndnstream tool:
 *
 *   run <scenario-file> [--seed N] [--out DIR]
 *   experiments <abr-staircase|no-cache|with-cache|prefetch|multicast> [--seed N] [--out DIR]
 *   validate <scenario-file>
 *
 * Returns 0 on success, 1 on a configuration error, 2 on a runtime error.
 */
int
cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ndnstream

#endif // NDNSTREAM_CLI_HPP
