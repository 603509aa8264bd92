#include "hlrc/repair_sim.hpp"

#include <algorithm>

#include "hlrc/error.hpp"
#include "hlrc/rng.hpp"

namespace hlrc {

ClusterState build_cluster(int q, int m, int s, std::uint64_t seed) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  LocalityAnalyzer analyzer(spec);
  ClusterState state{spec, analyzer.code(), spec.distance(), {}, {}, {}, seed};

  const std::size_t n = state.code.length();
  for (std::size_t e = 1; e <= n; ++e) state.chains.push_back(analyzer.hierarchy_chain(e));

  SplitMix64 rng(seed);
  const auto& field = state.code.field();
  state.message.resize(state.code.dimension());
  for (auto& x : state.message) x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(q)));
  state.data.assign(n, 0);
  for (std::size_t e = 1; e <= n; ++e) {
    const auto col = state.code.column(e);
    Element acc = 0;
    for (std::size_t r = 0; r < col.size(); ++r) acc = field.add(acc, field.mul(state.message[r], col[r]));
    state.data[e - 1] = acc;
  }
  return state;
}

namespace {

// Recovers node e from the survivors of `set`; nullopt if its column is not
// in their span.
std::optional<Element> recover(const ClusterState& state, std::size_t e, const CoordSet& survivors) {
  const auto& field = state.code.field();
  std::vector<std::span<const Element>> columns;
  std::vector<std::size_t> nodes;
  for (std::size_t x = survivors.first(); x != 0; x = survivors.next(x)) {
    columns.push_back(state.code.column(x));
    nodes.push_back(x);
  }
  const auto coeffs = solve_combination(field, columns, state.code.column(e));
  if (!coeffs) return std::nullopt;
  Element value = 0;
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    value = field.add(value, field.mul((*coeffs)[t], state.data[nodes[t] - 1]));
  }
  return value;
}

}  // namespace

RepairTrace inject_and_repair(const ClusterState& state, const CoordSet& erasures) {
  const std::size_t n = state.code.length();
  if (erasures.universe() != n) {
    throw Error(ErrorCode::IndexOutOfRange, "erasure set over the wrong length");
  }
  RepairTrace trace;
  std::size_t contacted_total = 0;
  for (std::size_t e = erasures.first(); e != 0; e = erasures.next(e)) {
    SymbolRepair repair;
    repair.symbol = e;
    bool done = false;
    for (const auto& link : state.chains[e - 1]) {
      const std::size_t inside = (link.set & erasures).size();
      if (inside + 1 > link.type.params.d) continue;
      const CoordSet survivors = link.set - erasures;
      const auto value = recover(state, e, survivors);
      if (!value) continue;
      repair.kappa = link.type.kappa;
      repair.repair_set = link.set;
      repair.erased_inside = inside;
      repair.contacted = survivors.size();
      repair.recovered = *value == state.data[e - 1];
      done = true;
      break;
    }
    if (!done) {
      const CoordSet all = state.code.coords();
      const CoordSet survivors = all - erasures;
      const auto value = recover(state, e, survivors);
      repair.kappa = state.spec.m;
      repair.global = true;
      repair.repair_set = all;
      repair.erased_inside = erasures.size();
      repair.contacted = survivors.size();
      repair.recovered = value && *value == state.data[e - 1];
    }
    trace.success = trace.success && repair.recovered;
    trace.max_contacted = std::max(trace.max_contacted, repair.contacted);
    contacted_total += repair.contacted;
    ++trace.levels[repair.kappa];
    trace.repairs.push_back(std::move(repair));
  }
  if (!trace.repairs.empty()) {
    trace.mean_contacted =
        static_cast<double>(contacted_total) / static_cast<double>(trace.repairs.size());
  }
  return trace;
}

ExperimentStats run_experiment(const ExperimentConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::InvalidArgs, "trials must be at least 1");
  const ClusterState state = build_cluster(config.q, config.m, config.s, config.seed);
  const std::size_t n = state.code.length();
  if (config.min_failures > config.max_failures || config.max_failures > n) {
    throw Error(ErrorCode::InvalidArgs, "failure range must satisfy min <= max <= n");
  }

  ExperimentStats stats;
  stats.config = config;
  SplitMix64 rng(config.seed ^ 0xA5A5A5A5A5A5A5A5ULL);
  for (std::size_t f = config.min_failures; f <= config.max_failures; ++f) {
    FailureStats fs;
    fs.failures = f;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const CoordSet erased(n, rng.sample(n, f));
      const RepairTrace trace = inject_and_repair(state, erased);
      ++fs.trials;
      fs.successes += trace.success ? 1 : 0;
      for (const auto& r : trace.repairs) {
        ++fs.contacted[r.contacted];
        ++fs.levels[r.kappa];
      }
      fs.max_contacted = std::max(fs.max_contacted, trace.max_contacted);
    }
    stats.by_failures.push_back(std::move(fs));
  }
  return stats;
}

}  // namespace hlrc
