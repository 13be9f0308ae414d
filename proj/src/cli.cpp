#include "ndnstream/cli.hpp"

#include "ndnstream/metrics/export.hpp"
#include "ndnstream/sim/experiments.hpp"
#include "ndnstream/sim/scenario-file.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <iostream>

namespace ndnstream {
namespace {

struct ConfigError : Error
{
  using Error::Error;
};

std::string
orDash(const std::optional<double>& v, const char* unit)
{
  return v ? fmt::format("{:.6g}{}", *v, unit) : std::string("-");
}

void
printSummary(const metrics::MetricsReport& report, std::ostream& out)
{
  fmt::print(out, "scenario {} (seed {}), simulated {:.6g} s{}\n", report.scenarioId, report.seed,
             report.endTimeS, report.truncated ? ", stopped at horizon" : "");
  for (const auto& s : report.sessions) {
    fmt::print(out, "  session {} via {}: {}, startup {}, {} rebuffers ({:.6g} s), {} quality switches, "
               "median file RTT {}, mean jitter {}\n",
               s.consumer, s.gateway, s.aborted ? "aborted: " + s.abortReason : (s.completed ? "completed" : "incomplete"),
               orDash(s.startupDelayS, " s"), s.rebufferCount, s.rebufferTotalS, s.qualitySwitches,
               orDash(s.medianFileRttMs, " ms"), orDash(s.meanFileJitterMs, " ms"));
  }
  for (const auto& c : report.caches)
    fmt::print(out, "  cache {}: {} hits, {} misses, hit ratio {}\n", c.node, c.hits, c.misses, orDash(c.hitRatio, ""));
  for (const auto& s : report.servers)
    fmt::print(out, "  server {}: {} Interests, {} Data, {} Nacks\n", s.node, s.interests, s.dataSent, s.nacksSent);
}

int
execute(sim::Scenario scenario, const std::optional<uint64_t>& seed, const std::string& outDir,
        std::ostream& out)
{
  if (seed)
    scenario.seed = *seed;
  std::optional<sim::Simulation> simulation;
  try {
    simulation.emplace(scenario);
  }
  catch (const sim::InvalidScenario& e) {
    throw ConfigError(e.what());
  }
  catch (const sim::InvalidTopology& e) {
    throw ConfigError(e.what());
  }
  catch (const sim::CapacityExceeded& e) {
    throw ConfigError(e.what());
  }
  auto result = simulation->run();
  auto report = metrics::buildReport(result, scenario.jitter);
  auto written = metrics::exportReport(report, outDir);
  printSummary(report, out);
  for (const auto& path : written)
    fmt::print(out, "wrote {}\n", path.string());
  return EXIT_OK;
}

sim::Scenario
loadChecked(const std::string& file)
{
  try {
    auto scenario = sim::loadScenarioFile(file);
    sim::Topology::build(scenario);
    return scenario;
  }
  catch (const sim::InvalidScenario& e) {
    throw ConfigError(e.what());
  }
  catch (const sim::InvalidTopology& e) {
    throw ConfigError(e.what());
  }
}

} // namespace

int
cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Adaptive video streaming over a simulated NDN network", "ndnstream"};
  app.require_subcommand(1);

  std::string scenarioFile;
  std::string experimentName;
  std::optional<uint64_t> seed;
  std::string outDir;

  auto* run = app.add_subcommand("run", "Run a scenario file and export its report");
  run->add_option("scenario-file", scenarioFile, "YAML scenario")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--out", outDir, "Output directory (default out/<scenario id>)");

  auto* exp = app.add_subcommand("experiments", "Run a canned experiment and export its report");
  exp->add_option("name", experimentName, "Experiment name")
    ->required()
    ->check(CLI::IsMember(sim::experiments::names()));
  exp->add_option("--seed", seed, "Override the scenario seed");
  exp->add_option("--out", outDir, "Output directory (default out/<name>)");

  auto* validate = app.add_subcommand("validate", "Check a scenario file without running it");
  validate->add_option("scenario-file", scenarioFile, "YAML scenario")->required();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return EXIT_CONFIG_ERROR;
  }

  try {
    if (*validate) {
      auto scenario = loadChecked(scenarioFile);
      fmt::print(out, "{}: scenario '{}' is valid ({} nodes, {} links, {} sessions)\n", scenarioFile,
                 scenario.id, scenario.nodes.size(), scenario.links.size(), scenario.sessions.size());
      return EXIT_OK;
    }
    if (*run) {
      auto scenario = loadChecked(scenarioFile);
      return execute(scenario, seed, outDir.empty() ? "out/" + scenario.id : outDir, out);
    }
    auto scenario = sim::experiments::make(experimentName);
    return execute(scenario, seed, outDir.empty() ? "out/" + experimentName : outDir, out);
  }
  catch (const ConfigError& e) {
    fmt::print(err, "configuration error: {}\n", e.what());
    return EXIT_CONFIG_ERROR;
  }
  catch (const std::exception& e) {
    fmt::print(err, "runtime error: {}\n", e.what());
    return EXIT_RUNTIME_ERROR;
  }
}

} // namespace ndnstream
