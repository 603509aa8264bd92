#include "hlrc/bounds.hpp"

#include <algorithm>
#include <map>

#include "hlrc/error.hpp"
#include "hlrc/matroid.hpp"

namespace hlrc {

namespace {

// G_q(k, d) with G_q(0, d) = 0.
std::uint64_t griesmer_sum(int q, std::size_t k, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += (d + power - 1) / power;
    if (power < d) power *= static_cast<std::uint64_t>(q);
  }
  return total;
}

void check_order(int q) { (void)make_field(q); }

template <typename Term>
SweepResult sweep(std::size_t n, Term term) {
  SweepResult best;
  for (std::size_t lambda = 0; lambda <= n; ++lambda) {
    const std::size_t value = term(lambda);
    if (lambda == 0 || value < best.value) {
      best.value = value;
      best.lambda = lambda;
      best.binding.assign(1, lambda);
    } else if (value == best.value) {
      best.binding.push_back(lambda);
    }
  }
  return best;
}

}  // namespace

std::uint64_t griesmer(int q, std::size_t k, std::size_t d) {
  check_order(q);
  if (k < 1 || d < 1) throw Error(ErrorCode::InvalidArgs, "griesmer needs k >= 1 and d >= 1");
  return griesmer_sum(q, k, d);
}

std::size_t k_opt(int q, std::size_t n, std::size_t d) {
  check_order(q);
  if (d < 1) throw Error(ErrorCode::InvalidArgs, "k_opt needs d >= 1");
  std::size_t k = 0;
  // G(k, d) >= d + k - 1, so the loop stops by k = n - d + 2.
  while (griesmer_sum(q, k + 1, d) <= n) ++k;
  return k;
}

std::size_t abhmt_bound(int q, std::size_t n, std::size_t d, std::size_t r, std::size_t delta) {
  check_order(q);
  if (r < 1 || delta < 2) throw Error(ErrorCode::InvalidArgs, "abhmt_bound needs r >= 1, delta >= 2");
  if (d < 1 || d > n + 1) throw Error(ErrorCode::InvalidArgs, "abhmt_bound needs 1 <= d <= n+1");
  const std::size_t local_length = r + delta - 1;
  const std::size_t log_b = std::min(local_length - delta + 1, k_opt(q, local_length, delta));
  const std::size_t blocks = (n - d + 1 + local_length - 1) / local_length;
  return (blocks + 1) * log_b;
}

std::size_t cmg_mu(int q, std::size_t kappa, std::size_t delta, std::size_t lambda) {
  if (kappa < 1) throw Error(ErrorCode::InvalidArgs, "cmg_mu needs kappa >= 1");
  const std::size_t a = lambda / kappa;
  const std::size_t b = lambda % kappa;
  return (a + 1) * griesmer_sum(q, kappa, delta) - griesmer_sum(q, kappa - b, delta);
}

SweepResult cmg_bound(int q, std::size_t n, std::size_t d, std::size_t kappa, std::size_t delta) {
  check_order(q);
  if (kappa < 1 || delta < 2 || d < 1) {
    throw Error(ErrorCode::InvalidArgs, "cmg_bound needs kappa >= 1, delta >= 2, d >= 1");
  }
  return sweep(n, [&](std::size_t lambda) {
    const std::size_t mu = cmg_mu(q, kappa, delta, lambda);
    return lambda + (mu <= n ? k_opt(q, n - mu, d) : 0);
  });
}

HierLocalityParams HierLocalityParams::make(std::vector<LocalityLevel> levels) {
  if (levels.empty()) throw Error(ErrorCode::InvalidArgs, "at least one locality level is required");
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const auto& l = levels[j];
    const std::string where = "level " + std::to_string(j + 1);
    if (l.r == 0 || l.delta == 0) throw Error(ErrorCode::InvalidArgs, where + ": r and delta must be >= 1");
    if (j == 0) continue;
    if (l.r > levels[j - 1].r) {
      throw Error(ErrorCode::InvalidArgs, where + ": r must not exceed the previous level's r");
    }
    if (l.delta >= levels[j - 1].delta) {
      throw Error(ErrorCode::InvalidArgs,
                  where + ": delta must be strictly smaller than the previous level's delta");
    }
  }
  return HierLocalityParams(std::move(levels));
}

std::size_t hlrc_nu(const HierLocalityParams& params, std::size_t lambda) {
  const std::size_t h = params.h();
  std::size_t nu = lambda + (lambda / params.r(h)) * (params.delta(h) - 1);
  for (std::size_t l = 1; l < h; ++l) {
    nu += (lambda / params.r(l)) * (params.delta(l) - params.delta(l + 1));
  }
  return nu;
}

long long singleton_hlrc(std::size_t n, std::size_t k, const HierLocalityParams& params) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgs, "singleton_hlrc needs 1 <= k <= n");
  const auto extra = static_cast<long long>(hlrc_nu(params, k - 1)) - static_cast<long long>(k - 1);
  return static_cast<long long>(n) - static_cast<long long>(k) + 1 - extra;
}

SweepResult cm_hlrc_bound(int q, std::size_t n, std::size_t d, const HierLocalityParams& params) {
  check_order(q);
  if (d < 1) throw Error(ErrorCode::InvalidArgs, "cm_hlrc_bound needs d >= 1");
  return sweep(n, [&](std::size_t lambda) {
    const std::size_t nu = hlrc_nu(params, lambda);
    return lambda + (nu <= n ? k_opt(q, n - nu, d) : 0);
  });
}

SetFamilies SetFamilies::make(const LinearCode& code, std::vector<std::vector<CoordSet>> levels,
                              HierLocalityParams params) {
  if (levels.size() != params.h()) {
    throw Error(ErrorCode::InvalidFamilies, std::to_string(levels.size()) + " families for " +
                                                std::to_string(params.h()) + " levels");
  }
  std::map<CoordSet, std::size_t> distances;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (const auto& l : levels[j]) {
      const std::string where = "level-" + std::to_string(j + 1) + " set " + l.to_string();
      if (l.universe() != code.length() || l.empty()) {
        throw Error(ErrorCode::InvalidFamilies, where + " is empty or over the wrong length");
      }
      if (entropy(code, l) > params.r(j + 1)) {
        throw Error(ErrorCode::InvalidFamilies, where + " exceeds r");
      }
      auto it = distances.find(l);
      if (it == distances.end()) it = distances.emplace(l, min_distance(restrict_code(code, l))).first;
      if (it->second < params.delta(j + 1)) {
        throw Error(ErrorCode::InvalidFamilies, where + " has distance below delta");
      }
    }
  }
  return SetFamilies(std::move(levels), std::move(params), code.length());
}

SetFamilies default_families(const LinearCode& code, const HierLocalityParams& params) {
  const FlatLattice lattice = flats(Matroid(code));
  std::vector<std::pair<CoordSet, std::size_t>> candidates;  // nonempty flats with distance
  for (const auto& f : lattice.flats()) {
    if (f.set.empty()) continue;
    candidates.emplace_back(f.set, min_distance(restrict_code(code, f.set)));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<CoordSet>> levels(params.h());
  for (std::size_t j = 1; j <= params.h(); ++j) {
    for (const auto& [set, d] : candidates) {
      if (entropy(code, set) <= params.r(j) && d >= params.delta(j)) levels[j - 1].push_back(set);
    }
  }
  return SetFamilies::make(code, std::move(levels), params);
}

SetFamilies hierarchy_families(const LinearCode& code, const Hierarchy& hierarchy) {
  return SetFamilies::make(code, hierarchy.families(), HierLocalityParams::make(hierarchy.params()));
}

IcResult construct_Ic(const LinearCode& code, const SetFamilies& families, std::size_t lambda) {
  if (families.length() != code.length()) {
    throw Error(ErrorCode::InvalidFamilies, "families were built for a different length");
  }
  if (lambda > code.dimension()) {
    throw Error(ErrorCode::InvalidArgs, "lambda must not exceed k");
  }
  const auto& params = families.params();
  const auto& fam = families.levels();
  const std::size_t h = params.h();
  const std::size_t n = code.length();

  IcResult result;
  result.lambda = lambda;
  result.counters.assign(h + 1, 0);  // slot 0 unused
  result.mode = h == 2 ? "algorithm-1" : "algorithm-2";

  CoordSet current(n);
  std::size_t current_h = 0;
  // Level-l set inside `outer` that is not yet absorbed into `current`.
  auto pick_inside = [&](std::size_t l, const CoordSet& outer) -> const CoordSet* {
    for (const auto& cand : fam[l - 1]) {
      if (cand.is_subset_of(outer) && !cand.is_subset_of(current)) return &cand;
    }
    return nullptr;
  };

  std::vector<CoordSet> chain(h + 1, CoordSet(n));  // chain[l] is the current level-l set
  for (std::size_t j = 1; j <= h; ++j) {
    while (true) {
      const CoordSet* start = nullptr;
      for (const auto& cand : fam[j - 1]) {
        if (!cand.is_subset_of(current) && entropy(code, current | cand) <= lambda) {
          start = &cand;
          break;
        }
      }
      if (start == nullptr) break;

      chain[j - 1] = *start;
      chain[j] = *start;
      std::size_t l = j;
      while (closure(code, current | *start) != current) {
        if (const CoordSet* inner = pick_inside(l, chain[l - 1])) {
          chain[l] = *inner;
          if (l == h) {
            ++result.counters[h];
            const CoordSet grown = closure(code, current | chain[h]);
            const std::size_t grown_h = entropy(code, grown);
            IcStep step;
            step.a = grown_h - current_h;
            step.s = step.a + params.delta(h) - 1;
            step.added = chain[h];
            result.trace.push_back(std::move(step));
            current = grown;
            current_h = grown_h;
          } else {
            ++l;
          }
        } else {
          if (l == j || !chain[l - 1].is_subset_of(current) || result.trace.empty()) {
            throw Error(ErrorCode::InvalidFamilies,
                        "level-" + std::to_string(l - 1) + " set " + chain[l - 1].to_string() +
                            " is not covered by level-" + std::to_string(l) + " sets inside it");
          }
          --l;
          ++result.counters[l];
          result.trace.back().s += params.delta(l) - params.delta(l + 1);
        }
      }
      for (std::size_t x = j; x < h; ++x) ++result.counters[x];
      result.trace.back().s += params.delta(j) - params.delta(h);
    }
  }

  // Pad with coordinates outside the span so that H reaches lambda exactly.
  Span span(code.field(), code.dimension());
  for (std::size_t e = current.first(); e != 0; e = current.next(e)) span.insert(code.column(e));
  for (std::size_t e = 1; e <= n && span.rank() < lambda; ++e) {
    if (current.contains(e)) continue;
    if (span.insert(code.column(e))) {
      current.insert(e);
      ++result.padding;
    }
  }
  if (span.rank() < lambda) {
    throw Error(ErrorCode::InfeasiblePadding, "cannot raise H(I) to lambda");
  }

  result.counters.erase(result.counters.begin());
  result.ic = std::move(current);
  result.entropy = entropy(code, result.ic);
  result.size = result.ic.size();
  result.size_lower_bound = hlrc_nu(params, lambda);
  return result;
}

bool BoundReport::optimal() const {
  return std::all_of(records.begin(), records.end(), [](const BoundRecord& r) { return r.ok; });
}

BoundReport optimality_report(int q, int m, int s) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  if (m < 3) throw Error(ErrorCode::InvalidArgs, "optimality report needs m >= 3");
  const std::size_t n = spec.length();
  const std::size_t k = spec.dimension();
  const std::size_t d = spec.distance();
  const LocalityAnalyzer analyzer(spec);

  BoundReport report;
  report.spec = spec;
  report.params = spec.params();
  report.hierarchy = analyzer.hierarchy_params();

  const auto g = griesmer(q, k, d);
  report.records.push_back({"griesmer", "k=" + std::to_string(k) + ",d=" + std::to_string(d),
                            static_cast<long long>(g), std::nullopt,
                            g == n ? "tight" : "not tight", g == n});

  for (int kappa = m - 1; kappa >= 2; --kappa) {
    for (int i : restriction_type_range(m, s, kappa)) {
      const RestrictionType t = restriction_type(q, kappa, i);
      if (t.params.d < 2) continue;
      const std::size_t delta = t.params.d;
      const std::size_t r_size = t.params.n - delta + 1;
      const SweepResult cmg = cmg_bound(q, n, d, static_cast<std::size_t>(kappa), delta);
      report.records.push_back({"cmg", "kappa=" + std::to_string(kappa) + ",delta=" + std::to_string(delta),
                                static_cast<long long>(cmg.value), cmg.lambda,
                                cmg.value == k ? "optimal" : "not optimal", cmg.value == k});
      const std::size_t ab = abhmt_bound(q, n, d, r_size, delta);
      report.records.push_back({"abhmt", "r=" + std::to_string(r_size) + ",delta=" + std::to_string(delta),
                                static_cast<long long>(ab), std::nullopt,
                                ab >= k ? (ab == k ? "optimal" : "not tight") : "violated", ab >= k});
    }
  }

  if (report.hierarchy.empty()) {
    report.records.push_back({"cm_hlrc", "no hierarchy", 0, std::nullopt, "not applicable", true});
    return report;
  }
  const auto params = HierLocalityParams::make(report.hierarchy);
  const std::string levels = to_string(report.hierarchy);
  const SweepResult cm = cm_hlrc_bound(q, n, d, params);
  report.records.push_back({"cm_hlrc", levels, static_cast<long long>(cm.value), cm.lambda,
                            cm.value == k ? "optimal" : "not optimal", cm.value == k});
  const long long sb = singleton_hlrc(n, k, params);
  const auto dd = static_cast<long long>(d);
  std::string verdict = sb == dd ? "Singleton-achieving"
                        : sb > dd ? "not Singleton-achieving, alphabet-optimal"
                                  : "violated";
  if (sb > dd && cm.value != k) verdict = "not Singleton-achieving";
  report.records.push_back({"singleton_hlrc", levels, sb, std::nullopt, verdict, sb >= dd});
  return report;
}

}  // namespace hlrc
