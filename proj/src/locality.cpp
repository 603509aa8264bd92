#include "hlrc/locality.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hlrc/error.hpp"
#include "hlrc/matroid.hpp"

namespace hlrc {

std::string to_string(const RestrictionType& t) {
  return "S(" + std::to_string(t.kappa) + ")-S(" + std::to_string(t.i) + ") " + to_string(t.params);
}

std::string to_string(const std::vector<LocalityLevel>& levels) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (j > 0) os << ',';
    os << '(' << levels[j].r << ',' << levels[j].delta << ')';
  }
  os << ']';
  return os.str();
}

RestrictionType restriction_type(int q, int kappa, int i) {
  if (kappa < 1 || i < 0 || i > kappa - 1) {
    throw Error(ErrorCode::InvalidArgs, "restriction type needs 0 <= i <= kappa-1");
  }
  const PuncturedSimplexSpec spec{q, kappa, i};
  return {kappa, i, spec.params()};
}

std::vector<int> restriction_type_range(int m, int s, int kappa) {
  if (m < 3 || kappa < 2 || kappa > m - 1 || s < 0 || s > m - 1) {
    throw Error(ErrorCode::InvalidArgs, "restriction_type_range needs m >= 3, 2 <= kappa <= m-1, "
                                        "0 <= s <= m-1");
  }
  std::vector<int> out;
  for (int i = std::max(0, s - m + kappa); i <= std::min(s, kappa - 1); ++i) out.push_back(i);
  return out;
}

WeightEnumerator weight_enumerator_formula(int q, int m, int s) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  const auto uq = static_cast<std::uint64_t>(q);
  WeightEnumerator w;
  w.length = spec.length();
  w.counts[0] = 1;
  if (s == 0) {
    w.counts[int_pow(uq, m - 1)] = int_pow(uq, m) - 1;
    return w;
  }
  w.counts[int_pow(uq, m - 1) - int_pow(uq, s - 1)] = int_pow(uq, m) - int_pow(uq, m - s);
  w.counts[int_pow(uq, m - 1)] = int_pow(uq, m - s) - 1;
  return w;
}

const TypeClassifier::Reference& TypeClassifier::reference(int kappa, int i) {
  auto& slot = references_[{kappa, i}];
  if (!slot) {
    LinearCode code = i == 0 ? simplex(q_, kappa) : punctured_simplex(q_, kappa, i);
    WeightEnumerator enumerator = weight_enumerator_bruteforce(code);
    slot = std::make_unique<Reference>(Reference{std::move(code), std::move(enumerator)});
  }
  return *slot;
}

std::optional<int> TypeClassifier::classify(const LinearCode& code) {
  if (code.field().order() != q_) return std::nullopt;
  const int kappa = static_cast<int>(code.dimension());
  std::optional<WeightEnumerator> enumerator;
  for (int i = 0; i < kappa; ++i) {
    if (restriction_type(q_, kappa, i).params.n != code.length()) continue;
    const Reference& ref = reference(kappa, i);
    if (!enumerator) enumerator = weight_enumerator_bruteforce(code);
    if (enumerator->min_distance() != ref.enumerator.min_distance()) continue;
    if (*enumerator != ref.enumerator) continue;
    if (code.length() <= 12 && !monomially_equivalent(code, ref.code)) continue;
    return i;
  }
  return std::nullopt;
}

std::vector<std::vector<CoordSet>> Hierarchy::families() const {
  std::vector<std::vector<CoordSet>> out;
  for (const auto& level : levels) out.push_back(level.sets);
  return out;
}

std::vector<LocalityLevel> Hierarchy::params() const {
  std::vector<LocalityLevel> out;
  for (const auto& level : levels) {
    out.push_back({static_cast<std::size_t>(level.type.kappa), level.type.params.d});
  }
  return out;
}

LocalityAnalyzer::LocalityAnalyzer(const PuncturedSimplexSpec& spec)
    : code_(punctured_simplex(spec)), spec_(spec), classifier_(spec.q) {}

LocalityAnalyzer::LocalityAnalyzer(LinearCode code, const PuncturedSimplexSpec& spec)
    : code_(std::move(code)), spec_(spec), classifier_(spec.q) {
  spec_.validate();
  if (code_.field().order() != spec_.q || code_.length() != spec_.length() ||
      code_.dimension() != spec_.dimension() ||
      weight_enumerator_bruteforce(code_) != weight_enumerator_formula(spec_.q, spec_.m, spec_.s)) {
    throw Error(ErrorCode::InvalidArgs, "code does not match " + to_string(spec_));
  }
}

const std::vector<TypedSet>& LocalityAnalyzer::typed_hyperplanes(const CoordSet& w,
                                                                 const RestrictionType& type) {
  if (auto it = hyperplane_cache_.find(w); it != hyperplane_cache_.end()) return it->second;
  if (type.kappa < 2) throw Error(ErrorCode::InvalidArgs, "hyperplanes need dimension >= 2");

  const auto members = w.members();
  const LinearCode restricted = restrict_code(code_, w);
  std::vector<TypedSet> out;
  for (const auto& local : hyperplanes_via_supports(restricted)) {
    CoordSet h(code_.length());
    for (std::size_t x = local.first(); x != 0; x = local.next(x)) h.insert(members[x - 1]);
    const auto i = classifier_.classify(restrict_code(code_, h));
    if (!i) {
      throw Error(ErrorCode::UnclassifiedHyperplane,
                  h.to_string() + " inside " + w.to_string() + " matches no S(" +
                      std::to_string(type.kappa - 1) + ")-S(i)");
    }
    out.push_back({std::move(h), restriction_type(spec_.q, type.kappa - 1, *i)});
  }
  return hyperplane_cache_.emplace(w, std::move(out)).first->second;
}

std::vector<HyperplaneClass> LocalityAnalyzer::classify_hyperplanes() {
  const RestrictionType root{spec_.m, spec_.s, spec_.params()};
  std::map<int, HyperplaneClass> by_i;
  for (const auto& t : typed_hyperplanes(code_.coords(), root)) {
    auto& cls = by_i[t.type.i];
    cls.type = t.type;
    cls.hyperplanes.push_back(t.set);
  }
  std::vector<HyperplaneClass> out;
  for (auto& [i, cls] : by_i) out.push_back(std::move(cls));
  return out;
}

CoordSet LocalityAnalyzer::find_local_set(std::size_t e, int kappa, int i) {
  if (e == 0 || e > code_.length()) {
    throw Error(ErrorCode::InvalidArgs, "symbol " + std::to_string(e) + " outside [1, n]");
  }
  const auto range = restriction_type_range(spec_.m, spec_.s, kappa);
  if (std::find(range.begin(), range.end(), i) == range.end()) {
    throw Error(ErrorCode::TypeNotRealizable, "i = " + std::to_string(i) +
                                                  " is outside the admissible range for kappa = " +
                                                  std::to_string(kappa));
  }
  CoordSet w = code_.coords();
  RestrictionType type{spec_.m, spec_.s, spec_.params()};
  while (type.kappa > kappa) {
    const int steps_left = type.kappa - 1 - kappa;
    const TypedSet* chosen = nullptr;
    for (const auto& t : typed_hyperplanes(w, type)) {
      if (!t.set.contains(e)) continue;
      if (t.type.i < i || t.type.i - i > steps_left) continue;
      chosen = &t;
      break;
    }
    if (chosen == nullptr) {
      throw Error(ErrorCode::TypeNotRealizable,
                  "no hyperplane of " + w.to_string() + " containing " + std::to_string(e) +
                      " leads to S(" + std::to_string(kappa) + ")-S(" + std::to_string(i) + ")");
    }
    type = chosen->type;
    w = chosen->set;
  }
  return w;
}

RestrictionType LocalityAnalyzer::chain_type(int kappa) const {
  return restriction_type(spec_.q, kappa, std::max(0, spec_.s - spec_.m + kappa));
}

std::vector<int> LocalityAnalyzer::chain_dimensions() const {
  const int innermost = (spec_.q == 2 && spec_.s == spec_.m - 1) ? 3 : 2;
  std::vector<int> out;
  for (int kappa = spec_.m - 1; kappa >= innermost; --kappa) out.push_back(kappa);
  return out;
}

std::vector<LocalityLevel> LocalityAnalyzer::hierarchy_params() const {
  std::vector<LocalityLevel> out;
  for (int kappa : chain_dimensions()) {
    out.push_back({static_cast<std::size_t>(kappa), chain_type(kappa).params.d});
  }
  return out;
}

const CoordSet& LocalityAnalyzer::chain_child(const CoordSet& parent, int parent_kappa,
                                              std::size_t e) {
  const RestrictionType parent_type = parent_kappa == spec_.m
                                          ? RestrictionType{spec_.m, spec_.s, spec_.params()}
                                          : chain_type(parent_kappa);
  const RestrictionType target = chain_type(parent_kappa - 1);
  for (const auto& t : typed_hyperplanes(parent, parent_type)) {
    if (t.type.i == target.i && t.set.contains(e)) return t.set;
  }
  throw Error(ErrorCode::TypeNotRealizable, "no " + to_string(target) + " hyperplane of " +
                                                parent.to_string() + " contains " +
                                                std::to_string(e));
}

const Hierarchy& LocalityAnalyzer::hierarchy() {
  if (hierarchy_) return *hierarchy_;
  Hierarchy h;
  std::vector<CoordSet> parents{code_.coords()};
  int parent_kappa = spec_.m;
  for (int kappa : chain_dimensions()) {
    std::set<CoordSet> sets;
    for (const auto& parent : parents) {
      for (std::size_t a = parent.first(); a != 0; a = parent.next(a)) {
        sets.insert(chain_child(parent, parent_kappa, a));
      }
    }
    parents.assign(sets.begin(), sets.end());
    h.levels.push_back({chain_type(kappa), parents});
    parent_kappa = kappa;
  }
  hierarchy_ = std::move(h);
  return *hierarchy_;
}

std::vector<TypedSet> LocalityAnalyzer::hierarchy_chain(std::size_t e) {
  if (e == 0 || e > code_.length()) {
    throw Error(ErrorCode::InvalidArgs, "symbol " + std::to_string(e) + " outside [1, n]");
  }
  std::vector<TypedSet> chain;
  CoordSet current = code_.coords();
  int parent_kappa = spec_.m;
  for (int kappa : chain_dimensions()) {
    current = chain_child(current, parent_kappa, e);
    chain.push_back({current, chain_type(kappa)});
    parent_kappa = kappa;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

LocalityProfile locality_profile(LocalityAnalyzer& analyzer) {
  const auto& spec = analyzer.spec();
  if (spec.m < 3) throw Error(ErrorCode::InvalidArgs, "locality profile needs m >= 3");
  LocalityProfile p;
  p.spec = spec;
  for (int kappa = spec.m - 1; kappa >= 2; --kappa) {
    for (int i : restriction_type_range(spec.m, spec.s, kappa)) {
      const RestrictionType t = restriction_type(spec.q, kappa, i);
      p.types.push_back(t);
      if (t.params.d >= 2) {
        p.localities.push_back({t, t.params.n - t.params.d + 1, t.params.k, t.params.d});
      }
    }
  }
  p.hierarchy_params = analyzer.hierarchy_params();
  p.chain = analyzer.hierarchy_chain(1);
  return p;
}

LocalityProfile locality_profile(int q, int m, int s) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  if (m < 3) throw Error(ErrorCode::InvalidArgs, "locality profile needs m >= 3");
  LocalityAnalyzer analyzer(spec);
  return locality_profile(analyzer);
}

HlrcVerdict verify_hlrc(const LinearCode& code, const std::vector<std::vector<CoordSet>>& levels,
                        const std::vector<LocalityLevel>& params) {
  if (levels.size() != params.size()) {
    return {false, std::to_string(levels.size()) + " set families for " +
                       std::to_string(params.size()) + " locality levels"};
  }
  if (levels.empty()) return {true, {}};

  std::map<CoordSet, std::size_t> distances;
  auto distance = [&](const CoordSet& l) {
    auto it = distances.find(l);
    if (it == distances.end()) it = distances.emplace(l, min_distance(restrict_code(code, l))).first;
    return it->second;
  };

  for (std::size_t e = 1; e <= code.length(); ++e) {
    const bool covered = std::any_of(levels[0].begin(), levels[0].end(), [&](const CoordSet& l) {
      return l.universe() == code.length() && l.contains(e);
    });
    if (!covered) return {false, "symbol " + std::to_string(e) + " has no level-1 set"};
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const std::string level = "level-" + std::to_string(j + 1) + " set ";
    for (const auto& l : levels[j]) {
      if (l.universe() != code.length() || l.empty()) {
        return {false, level + l.to_string() + " is empty or over the wrong length"};
      }
      const std::size_t h = entropy(code, l);
      if (h > params[j].r) {
        return {false, level + l.to_string() + " has H = " + std::to_string(h) + " > r = " +
                           std::to_string(params[j].r)};
      }
      const std::size_t d = distance(l);
      if (d < params[j].delta) {
        return {false, level + l.to_string() + " has distance " + std::to_string(d) +
                           " < delta = " + std::to_string(params[j].delta)};
      }
      if (j + 1 == levels.size()) continue;
      for (std::size_t a = l.first(); a != 0; a = l.next(a)) {
        const bool inner = std::any_of(levels[j + 1].begin(), levels[j + 1].end(),
                                       [&](const CoordSet& x) {
                                         return x.universe() == l.universe() && x.contains(a) &&
                                                x.is_subset_of(l);
                                       });
        if (!inner) {
          return {false, "symbol " + std::to_string(a) + " of " + level + l.to_string() +
                             " lies in no level-" + std::to_string(j + 2) + " set inside it"};
        }
      }
    }
  }
  return {true, {}};
}

BijectionCheck check_hyperplane_bijection(int q, int m, int s) {
  const LinearCode full = simplex(q, m);
  const LinearCode punctured = punctured_simplex(q, m, s);
  const CoordSet y = deleted_set(q, m, s);

  // Coordinates of the punctured code are the surviving simplex columns in order.
  std::vector<std::size_t> reindex(full.length() + 1, 0);
  std::size_t next = 1;
  for (std::size_t e = 1; e <= full.length(); ++e) {
    if (!y.contains(e)) reindex[e] = next++;
  }

  const auto source = hyperplanes_via_supports(full);
  const auto target = hyperplanes_via_supports(punctured);
  const std::set<CoordSet> target_set(target.begin(), target.end());

  BijectionCheck check;
  check.target_count = target.size();
  std::set<CoordSet> image;
  bool well_defined = true;
  for (const auto& h : source) {
    if (h == y) continue;
    ++check.source_count;
    CoordSet mapped(punctured.length());
    for (std::size_t e = h.first(); e != 0; e = h.next(e)) {
      if (reindex[e] != 0) mapped.insert(reindex[e]);
    }
    well_defined = well_defined && target_set.count(mapped) == 1;
    image.insert(std::move(mapped));
  }
  check.injective = well_defined && image.size() == check.source_count;
  check.surjective = well_defined && image == target_set;
  return check;
}

}  // namespace hlrc
