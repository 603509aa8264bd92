#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hlrc/codes.hpp"
#include "hlrc/construct.hpp"
#include "hlrc/locality.hpp"

namespace hlrc {

/// A storage cluster with one node per code coordinate holding the encoding
/// of a seeded random message.
struct ClusterState {
  PuncturedSimplexSpec spec;
  LinearCode code;
  std::size_t distance = 0;
  /// chains[e-1]: the repair sets of node e, innermost first.
  std::vector<std::vector<TypedSet>> chains;
  std::vector<Element> message;
  std::vector<Element> data;  // data[e-1] is node e's symbol
  std::uint64_t seed = 0;
};

ClusterState build_cluster(int q, int m, int s, std::uint64_t seed);

/// kappa of the level used for a repair; the whole code reports kappa = m.
struct SymbolRepair {
  std::size_t symbol = 0;
  int kappa = 0;
  bool global = false;
  CoordSet repair_set;
  std::size_t erased_inside = 0;
  std::size_t contacted = 0;
  bool recovered = false;
};

struct RepairTrace {
  std::vector<SymbolRepair> repairs;
  bool success = true;
  std::size_t max_contacted = 0;
  double mean_contacted = 0.0;
  std::map<int, std::size_t> levels;  // kappa -> number of repairs
};

/// Repairs every erased node from the original survivors. Each node uses the
/// innermost set of its chain holding at most delta-1 erasures, solving for
/// its column over the survivors of that set; if no set qualifies it falls
/// back to the whole code. A repair fails only when the erased column is
/// outside the span of the surviving columns.
RepairTrace inject_and_repair(const ClusterState& state, const CoordSet& erasures);

struct ExperimentConfig {
  int q = 2;
  int m = 4;
  int s = 2;
  std::size_t trials = 100;
  std::size_t min_failures = 1;
  std::size_t max_failures = 1;
  std::uint64_t seed = 1;
};

struct FailureStats {
  std::size_t failures = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::map<std::size_t, std::size_t> contacted;  // contacted count -> repairs
  std::map<int, std::size_t> levels;             // kappa -> repairs
  std::size_t max_contacted = 0;
};

struct ExperimentStats {
  ExperimentConfig config;
  std::vector<FailureStats> by_failures;
};

/// Deterministic given the config. Throws InvalidArgs for trials = 0 or a
/// failure range outside [0, n].
ExperimentStats run_experiment(const ExperimentConfig& config);

}  // namespace hlrc
