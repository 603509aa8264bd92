#include "hlrc/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hlrc/bounds.hpp"
#include "hlrc/error.hpp"
#include "hlrc/locality.hpp"
#include "hlrc/matroid.hpp"
#include "hlrc/repair_sim.hpp"

namespace hlrc {

namespace {

using Json = nlohmann::ordered_json;

Json enumerator_json(const WeightEnumerator& w) {
  Json out = Json::object();
  for (const auto& [weight, count] : w.counts) out[std::to_string(weight)] = count;
  return out;
}

Json type_json(const RestrictionType& t) {
  return Json{{"kappa", t.kappa}, {"i", t.i}, {"params", to_string(t.params)}};
}

Json record_json(const BoundRecord& r) {
  Json out{{"name", r.name}, {"inputs", r.inputs}, {"value", r.value}};
  out["binding_lambda"] = r.binding_lambda ? Json(*r.binding_lambda) : Json(nullptr);
  out["verdict"] = r.verdict;
  out["ok"] = r.ok;
  return out;
}

Json sweep_json(const SweepResult& r) {
  return Json{{"value", r.value}, {"binding_lambda", r.lambda}, {"all_binding_lambdas", r.binding}};
}

class Checks {
 public:
  void add(const std::string& name, bool ok, const std::string& detail = {}) {
    Json c{{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    list_.push_back(std::move(c));
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  const Json& json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

}  // namespace

AnalyzeResult analyze(const PuncturedSimplexSpec& spec) {
  spec.validate();
  Checks checks;
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "analyze";
  report["spec"] = Json{{"q", spec.q}, {"m", spec.m}, {"s", spec.s}, {"construction", to_string(spec)}};

  LocalityAnalyzer analyzer(spec);
  const LinearCode& code = analyzer.code();
  const WeightEnumerator brute = weight_enumerator_bruteforce(code);
  const CodeParams params{code.length(), code.dimension(), brute.min_distance()};
  report["parameters"] = Json{{"n", params.n}, {"k", params.k}, {"d", params.d},
                              {"closed_form", to_string(spec.params())}};
  checks.add("parameters match closed form", params == spec.params(), to_string(params));

  const WeightEnumerator formula = weight_enumerator_formula(spec.q, spec.m, spec.s);
  report["weight_enumerator"] = Json{{"formula", enumerator_json(formula)},
                                     {"bruteforce", enumerator_json(brute)},
                                     {"match", formula == brute}};
  checks.add("weight enumerator formula equals brute force", formula == brute);

  const auto uq = static_cast<std::uint64_t>(spec.q);
  const auto classes = analyzer.classify_hyperplanes();
  Json hyper = Json::array();
  std::size_t total = 0;
  std::size_t same_deletion = 0;
  for (const auto& cls : classes) {
    hyper.push_back(Json{{"type", "S(" + std::to_string(cls.type.kappa) + ")-S(" +
                                      std::to_string(cls.type.i) + ")"},
                         {"params", to_string(cls.type.params)},
                         {"count", cls.hyperplanes.size()}});
    total += cls.hyperplanes.size();
    if (cls.type.i == spec.s) same_deletion = cls.hyperplanes.size();
  }
  report["hyperplanes"] = hyper;
  const std::size_t expected_total =
      (int_pow(uq, spec.m) - 1) / (uq - 1) - (spec.s == spec.m - 1 ? 1 : 0);
  const std::size_t expected_same =
      spec.s <= spec.m - 2 ? static_cast<std::size_t>(gaussian_binomial(spec.m - spec.s,
                                                                        spec.m - spec.s - 1, spec.q))
                           : 0;
  checks.add("hyperplane count", total == expected_total,
             std::to_string(total) + " of " + std::to_string(expected_total));
  checks.add("hyperplanes of type S(m-1)-S(s)", same_deletion == expected_same,
             std::to_string(same_deletion) + " of " + std::to_string(expected_same));
  if (code.length() <= kMaxMaterializedGround && code.dimension() <= kMaxMaterializedRank) {
    const auto supports = hyperplanes_via_supports(code);
    const auto lattice_hyper = flats(Matroid(code)).hyperplanes();
    checks.add("hyperplanes from supports equal rank-(k-1) flats", supports == lattice_hyper);
  }

  if (spec.m < 3) {
    report["locality"] = "not applicable (m < 3)";
    report["hierarchy"] = "not applicable (m < 3)";
  } else {
    const LocalityProfile profile = locality_profile(analyzer);
    Json types = Json::array();
    for (const auto& t : profile.types) types.push_back(type_json(t));
    Json locs = Json::array();
    for (const auto& l : profile.localities) {
      Json j = type_json(l.type);
      j["r_size"] = l.r_size;
      j["r_dim"] = l.r_dim;
      j["delta"] = l.delta;
      locs.push_back(std::move(j));
    }
    bool coverage = true;
    std::string coverage_detail;
    for (const auto& t : profile.types) {
      for (std::size_t e = 1; e <= code.length() && coverage; ++e) {
        try {
          const CoordSet f = analyzer.find_local_set(e, t.kappa, t.i);
          const LinearCode restricted = restrict_code(code, f);
          if (!f.contains(e) || !is_closed(code, f) || parameters(restricted) != t.params) {
            coverage = false;
            coverage_detail = "symbol " + std::to_string(e) + ", " + to_string(t);
          }
        } catch (const Error& ex) {
          coverage = false;
          coverage_detail = ex.what();
        }
      }
    }
    checks.add("every symbol admits every restriction type", coverage, coverage_detail);
    report["locality"] = Json{{"repair_sets", "closed sets only"},
                              {"types", types},
                              {"localities", locs}};

    const Hierarchy& hierarchy = analyzer.hierarchy();
    Json levels = Json::array();
    for (const auto& level : hierarchy.levels) {
      Json j = type_json(level.type);
      j["r"] = level.type.kappa;
      j["delta"] = level.type.params.d;
      j["sets"] = level.sets.size();
      levels.push_back(std::move(j));
    }
    Json chain = Json::array();
    for (const auto& link : profile.chain) {
      Json j = type_json(link.type);
      j["set"] = link.set.to_string();
      chain.push_back(std::move(j));
    }
    const HlrcVerdict verdict = verify_hlrc(code, hierarchy.families(), hierarchy.params());
    const std::size_t expected_levels =
        static_cast<std::size_t>(spec.m) - ((spec.q == 2 && spec.s == spec.m - 1) ? 3 : 2);
    report["hierarchy"] = Json{{"locality", to_string(profile.hierarchy_params)},
                               {"levels", levels},
                               {"chain_of_symbol_1", chain},
                               {"verified", verdict.ok},
                               {"witness", verdict.witness}};
    checks.add("hierarchy verifies as an H-LRC", verdict.ok, verdict.witness);
    checks.add("hierarchy level count", hierarchy.levels.size() == expected_levels,
               std::to_string(hierarchy.levels.size()) + " of " + std::to_string(expected_levels));

    const BoundReport bounds = optimality_report(spec.q, spec.m, spec.s);
    Json records = Json::array();
    for (const auto& r : bounds.records) records.push_back(record_json(r));
    report["bounds"] = records;
    checks.add("optimality verdicts", bounds.optimal());
  }

  report["checks"] = checks.json();
  report["status"] = checks.ok() ? "ok" : "invariant violation";
  return {std::move(report), checks.ok()};
}

const TableEntry* CodeTable::find(int m, int s) const {
  for (const auto& e : entries) {
    if (e.m == m && e.s == s) return &e;
  }
  return nullptr;
}

CodeTable build_table(int q, int m_max, int s_max) {
  if (m_max < 2 || s_max < 0) throw Error(ErrorCode::InvalidArgs, "table needs m_max >= 2, s_max >= 0");
  CodeTable table{q, m_max, s_max, {}};
  for (int m = 2; m <= m_max; ++m) {
    for (int s = 0; s <= std::min(s_max, m - 1); ++s) {
      const PuncturedSimplexSpec spec{q, m, s};
      spec.validate();
      TableEntry entry;
      entry.m = m;
      entry.s = s;
      entry.params = parameters(punctured_simplex(spec));
      entry.listed = entry.params.d >= 2;
      entry.reed_muller = spec.is_reed_muller();
      if (entry.listed && m >= 3) {
        LocalityAnalyzer analyzer(spec);
        for (const auto& cls : analyzer.classify_hyperplanes()) {
          const TableEntry* from = table.find(m - 1, cls.type.i);
          if (from != nullptr && from->listed) entry.locality_from.emplace_back(m - 1, cls.type.i);
        }
      }
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

std::string table_markdown(const CodeTable& table) {
  std::ostringstream os;
  os << "| m |";
  for (int s = 0; s <= table.s_max; ++s) os << " S(m)-S(" << s << ") |";
  os << "\n|---|";
  for (int s = 0; s <= table.s_max; ++s) os << "---|";
  os << '\n';
  for (int m = 2; m <= table.m_max; ++m) {
    os << "| " << m << " |";
    for (int s = 0; s <= table.s_max; ++s) {
      const TableEntry* e = table.find(m, s);
      if (e == nullptr || !e->listed) {
        os << " - |";
        continue;
      }
      os << ' ' << to_string(e->params);
      if (e->reed_muller) os << " RM(1," << m - 1 << ")";
      os << " |";
    }
    os << '\n';
  }
  os << "\nLocality edges (dimension m-1 restriction -> code):\n";
  for (const auto& e : table.entries) {
    for (const auto& [fm, fs] : e.locality_from) {
      os << "- " << to_string(table.find(fm, fs)->params) << " -> " << to_string(e.params) << '\n';
    }
  }
  return os.str();
}

std::string table_csv(const CodeTable& table) {
  std::ostringstream os;
  os << "m,s,n,k,d,listed,reed_muller,locality_from\n";
  for (const auto& e : table.entries) {
    os << e.m << ',' << e.s << ',' << e.params.n << ',' << e.params.k << ',' << e.params.d << ','
       << (e.listed ? 1 : 0) << ',' << (e.reed_muller ? 1 : 0) << ',';
    for (std::size_t i = 0; i < e.locality_from.size(); ++i) {
      if (i > 0) os << ';';
      os << to_string(table.find(e.locality_from[i].first, e.locality_from[i].second)->params);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::pair<std::size_t, std::size_t>> parse_locality(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, "locality at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto number = [&]() -> std::size_t {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw fail("expected a non-negative integer");
    }
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (v > 1000000) throw fail("integer too large");
      ++pos;
    }
    skip_space();
    return v;
  };
  skip_space();
  if (pos == text.size()) return out;
  while (true) {
    const std::size_t r = number();
    if (pos >= text.size() || text[pos] != ',') throw fail("expected ','");
    ++pos;
    const std::size_t d = number();
    out.emplace_back(r, d);
    if (pos == text.size()) break;
    if (text[pos] != ';') throw fail("expected ';' or end of input");
    ++pos;
  }
  return out;
}

namespace {

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HLRC_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

struct SpecOptions {
  int q = 2;
  int m = 0;
  int s = 0;
};

void add_spec_options(CLI::App* cmd, SpecOptions& o) {
  cmd->add_option("--q", o.q, "field order (2,3,4,5,7,8,9)")->required();
  cmd->add_option("--m", o.m, "ambient simplex dimension")->required();
  cmd->add_option("--s", o.s, "dimension of the deleted simplex")->required();
}

int cmd_construct(const SpecOptions& o, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const PuncturedSimplexSpec spec{o.q, o.m, o.s};
  spec.validate();
  const LinearCode code = punctured_simplex(spec);
  const std::string params = to_string(parameters(code));
  if (out_path.empty()) {
    write_matrix(out, code);
    err << params << '\n';
    return kExitOk;
  }
  const auto path = resolve_output(out_path);
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path.string() << " for writing\n";
    return kExitUsage;
  }
  write_matrix(file, code);
  out << params << '\n';
  return kExitOk;
}

int cmd_bounds(int q, std::size_t n, std::size_t d, const std::string& locality,
               std::optional<std::size_t> k, const std::string& lrc, std::ostream& out) {
  if (d < 1) throw Error(ErrorCode::InvalidArgs, "d must be at least 1");
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "bounds";
  report["inputs"] = Json{{"q", q}, {"n", n}, {"d", d}, {"locality", locality}};
  const std::size_t kopt = k_opt(q, n, d);
  report["k_opt"] = kopt;

  std::optional<std::size_t> best = kopt;
  const auto parsed = parse_locality(locality);
  if (!parsed.empty()) {
    std::vector<LocalityLevel> levels;
    for (const auto& [r, delta] : parsed) levels.push_back({r, delta});
    const auto params = HierLocalityParams::make(levels);
    Json cmg = Json::array();
    for (const auto& l : levels) {
      if (l.delta < 2) continue;
      Json j = sweep_json(cmg_bound(q, n, d, l.r, l.delta));
      j["kappa"] = l.r;
      j["delta"] = l.delta;
      cmg.push_back(std::move(j));
    }
    report["cmg"] = cmg;
    const SweepResult cm = cm_hlrc_bound(q, n, d, params);
    report["cm_hlrc"] = sweep_json(cm);
    best = cm.value;
    const std::size_t kk = k.value_or(cm.value);
    if (kk >= 1 && kk <= n) {
      report["singleton_hlrc"] = Json{{"k", kk}, {"d_bound", singleton_hlrc(n, kk, params)}};
    } else {
      report["singleton_hlrc"] = "not applicable (k outside [1, n])";
    }
  }
  if (!lrc.empty()) {
    const auto pair = parse_locality(lrc);
    if (pair.size() != 1) throw Error(ErrorCode::ParseError, "--lrc expects a single `r,delta` pair");
    report["abhmt"] = Json{{"r", pair[0].first},
                           {"delta", pair[0].second},
                           {"value", abhmt_bound(q, n, d, pair[0].first, pair[0].second)}};
  }
  const std::size_t kk = k.value_or(best.value_or(kopt));
  if (kk >= 1) {
    report["griesmer"] = Json{{"k", kk}, {"value", griesmer(q, kk, d)}, {"fits_length", griesmer(q, kk, d) <= n}};
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const SpecOptions& o, std::size_t failures, std::size_t max_failures,
                 std::size_t trials, std::uint64_t seed, std::ostream& out) {
  ExperimentConfig config{o.q, o.m, o.s, trials, failures, std::max(failures, max_failures), seed};
  const ExperimentStats stats = run_experiment(config);
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "simulate";
  report["spec"] = Json{{"q", o.q}, {"m", o.m}, {"s", o.s}};
  report["trials"] = trials;
  report["seed"] = seed;
  report["policy"] = "innermost repair set first, escalating to the whole code";
  Json rows = Json::array();
  for (const auto& fs : stats.by_failures) {
    Json contacted = Json::object();
    for (const auto& [c, count] : fs.contacted) contacted[std::to_string(c)] = count;
    Json levels = Json::object();
    for (const auto& [kappa, count] : fs.levels) levels["kappa=" + std::to_string(kappa)] = count;
    rows.push_back(Json{{"failures", fs.failures},
                        {"trials", fs.trials},
                        {"successes", fs.successes},
                        {"max_contacted", fs.max_contacted},
                        {"contacted_histogram", contacted},
                        {"level_histogram", levels}});
  }
  report["results"] = rows;
  out << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Punctured simplex codes: construction, hierarchical locality, bounds and repair"};
  app.name("hlrc");
  app.require_subcommand(1);

  SpecOptions construct_opts;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "write the generator matrix of S(m)-S(s)");
  add_spec_options(construct, construct_opts);
  construct->add_option("--out", out_path, "output file (relative paths honor HLRC_OUTPUT_DIR)");

  SpecOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "full locality and bound report");
  add_spec_options(analyze_cmd, analyze_opts);

  int table_q = 2, m_max = 6, s_max = 4;
  bool csv = false;
  auto* table = app.add_subcommand("table", "parameter table with locality edges");
  table->add_option("--q", table_q, "field order");
  table->add_option("--m-max", m_max, "largest m");
  table->add_option("--s-max", s_max, "largest s");
  table->add_flag("--csv", csv, "emit CSV instead of markdown");

  int bounds_q = 2;
  std::size_t bounds_n = 0, bounds_d = 0;
  std::string locality, lrc;
  std::optional<std::size_t> bounds_k;
  auto* bounds = app.add_subcommand("bounds", "evaluate dimension and distance bounds");
  bounds->add_option("--q", bounds_q, "field order")->required();
  bounds->add_option("--n", bounds_n, "code length")->required();
  bounds->add_option("--d", bounds_d, "minimum distance")->required();
  bounds->add_option("--locality", locality, "hierarchy levels r1,d1;r2,d2;... outermost first");
  bounds->add_option("--k", bounds_k, "dimension for the distance bounds");
  bounds->add_option("--lrc", lrc, "single locality r,delta in the size convention");

  SpecOptions sim_opts;
  std::size_t failures = 1, max_failures = 0, trials = 100;
  std::uint64_t seed = 1;
  auto* simulate = app.add_subcommand("simulate", "inject failures and repair");
  add_spec_options(simulate, sim_opts);
  simulate->add_option("--failures", failures, "number of failed nodes");
  simulate->add_option("--max-failures", max_failures, "sweep failures up to this count");
  simulate->add_option("--trials", trials, "trials per failure count");
  simulate->add_option("--seed", seed, "seed of the failure and data generator");

  std::vector<std::string> argv_storage{"hlrc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_opts, out_path, out, err);
    if (*analyze_cmd) {
      const AnalyzeResult r = analyze({analyze_opts.q, analyze_opts.m, analyze_opts.s});
      out << r.report.dump(2) << '\n';
      if (!r.ok) err << "error: invariant violation, see \"checks\"\n";
      return r.ok ? kExitOk : kExitInvariant;
    }
    if (*table) {
      const CodeTable t = build_table(table_q, m_max, s_max);
      out << (csv ? table_csv(t) : table_markdown(t));
      return kExitOk;
    }
    if (*bounds) return cmd_bounds(bounds_q, bounds_n, bounds_d, locality, bounds_k, lrc, out);
    if (*simulate) return cmd_simulate(sim_opts, failures, max_failures, trials, seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool violation = e.code() == ErrorCode::UnclassifiedHyperplane ||
                           e.code() == ErrorCode::TypeNotRealizable;
    return violation ? kExitInvariant : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hlrc
