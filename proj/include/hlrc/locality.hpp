#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlrc/codes.hpp"
#include "hlrc/construct.hpp"

namespace hlrc {

/// A restriction isomorphic to S(kappa) - S(i).
struct RestrictionType {
  int kappa = 0;
  int i = 0;
  CodeParams params;

  friend bool operator==(const RestrictionType&, const RestrictionType&) = default;
};

std::string to_string(const RestrictionType& t);

/// Closed-form parameters of S_q(kappa) - S_q(i).
RestrictionType restriction_type(int q, int kappa, int i);

/// Admissible i for closed restrictions of dimension kappa in S(m) - S(s):
/// max(0, s-m+kappa) <= i <= min(s, kappa-1). Throws InvalidArgs unless
/// m >= 3, 2 <= kappa <= m-1 and 0 <= s <= m-1.
std::vector<int> restriction_type_range(int m, int s, int kappa);

/// Closed-form weight enumerator of S_q(m) - S_q(s).
WeightEnumerator weight_enumerator_formula(int q, int m, int s);

/// Matches a code against the reference S_q(k) - S_q(i), k its dimension, on
/// length, dimension, minimum distance and full weight enumerator; codes of
/// length <= 12 must additionally be equivalent to the reference up to
/// coordinate permutation and, over fields larger than GF(2), column scaling.
/// Returns the matching i. References are built once per instance.
class TypeClassifier {
 public:
  explicit TypeClassifier(int q) : q_(q) {}
  std::optional<int> classify(const LinearCode& code);

 private:
  struct Reference {
    LinearCode code;
    WeightEnumerator enumerator;
  };
  const Reference& reference(int kappa, int i);

  int q_;
  std::map<std::pair<int, int>, std::unique_ptr<Reference>> references_;
};

struct TypedSet {
  CoordSet set;
  RestrictionType type;
};

struct HyperplaneClass {
  RestrictionType type;
  std::vector<CoordSet> hyperplanes;
};

/// Level j of a hierarchy: every set of the family has the restriction type
/// given (for hierarchy_chain families) and satisfies the level constraints.
struct LocalityLevel {
  std::size_t r = 0;      // bound on H(L)
  std::size_t delta = 0;  // bound on the distance of C|_L

  friend bool operator==(const LocalityLevel&, const LocalityLevel&) = default;
};

std::string to_string(const std::vector<LocalityLevel>& levels);

struct HierarchyLevel {
  RestrictionType type;
  std::vector<CoordSet> sets;
};

/// Levels ordered outermost first. Each set of level j+1 lies inside a set of
/// level j and the level-(j+1) sets inside any level-j set cover it.
struct Hierarchy {
  std::vector<HierarchyLevel> levels;

  std::vector<std::vector<CoordSet>> families() const;
  std::vector<LocalityLevel> params() const;
};

/// Analysis of one code known to be equivalent to S_q(m) - S_q(s). Hyperplanes
/// of each restriction are computed once and cached by set.
class LocalityAnalyzer {
 public:
  explicit LocalityAnalyzer(const PuncturedSimplexSpec& spec);
  /// `code` must be permutation equivalent to the construction for `spec`;
  /// its parameters and weight enumerator are checked (InvalidArgs otherwise).
  LocalityAnalyzer(LinearCode code, const PuncturedSimplexSpec& spec);

  const LinearCode& code() const noexcept { return code_; }
  const PuncturedSimplexSpec& spec() const noexcept { return spec_; }

  /// Hyperplanes of C|_W with their types, W a closed set of the given type.
  /// Throws UnclassifiedHyperplane if a hyperplane matches no type.
  const std::vector<TypedSet>& typed_hyperplanes(const CoordSet& w, const RestrictionType& type);
  /// Hyperplanes of the whole code grouped by type (ascending i).
  std::vector<HyperplaneClass> classify_hyperplanes();

  /// A closed set containing e whose restriction is S(kappa) - S(i), found by
  /// descending one hyperplane at a time and taking the lexicographically
  /// smallest hyperplane from which the target type stays reachable.
  /// Throws InvalidArgs for kappa outside [2, m-1] or e outside [n], and
  /// TypeNotRealizable if no such set is found.
  CoordSet find_local_set(std::size_t e, int kappa, int i);

  /// Type of the level-kappa set of the hierarchy: S(kappa) - S(max(0, s-m+kappa)).
  RestrictionType chain_type(int kappa) const;
  /// Dimensions kappa used by the hierarchy, outermost (m-1) first. Binary
  /// codes with s = m-1 stop at kappa = 3 since their kappa = 2 sets have distance 1.
  std::vector<int> chain_dimensions() const;
  /// Locality parameters [(kappa, delta_kappa)] of the hierarchy, outermost first.
  std::vector<LocalityLevel> hierarchy_params() const;

  const Hierarchy& hierarchy();
  /// F_kappa for every kappa in chain_dimensions(), innermost first; each
  /// F_kappa is the smallest chain-type hyperplane of F_{kappa+1} holding e.
  std::vector<TypedSet> hierarchy_chain(std::size_t e);

 private:
  const CoordSet& chain_child(const CoordSet& parent, int parent_kappa, std::size_t e);

  LinearCode code_;
  PuncturedSimplexSpec spec_;
  TypeClassifier classifier_;
  std::map<CoordSet, std::vector<TypedSet>> hyperplane_cache_;
  std::optional<Hierarchy> hierarchy_;
};

/// Both conventions for one locality: r_size = |L| - delta + 1, r_dim = kappa.
struct Locality {
  RestrictionType type;
  std::size_t r_size = 0;
  std::size_t r_dim = 0;
  std::size_t delta = 0;
};

/// Closed-set restriction types and localities of S_q(m) - S_q(s).
struct LocalityProfile {
  PuncturedSimplexSpec spec;
  std::vector<RestrictionType> types;  // every admissible (kappa, i), kappa descending
  std::vector<Locality> localities;    // the types with distance >= 2
  std::vector<LocalityLevel> hierarchy_params;
  std::vector<TypedSet> chain;  // hierarchy chain of coordinate 1
};

/// Throws InvalidArgs unless m >= 3.
LocalityProfile locality_profile(int q, int m, int s);
LocalityProfile locality_profile(LocalityAnalyzer& analyzer);

struct HlrcVerdict {
  bool ok = false;
  std::string witness;  // first violation, empty when ok
};

/// Checks the h-level definition against level families: every coordinate is
/// in some level-1 set; every level-j set L has H(L) <= r_j and distance of
/// C|_L >= delta_j; the level-(j+1) sets inside L cover L.
HlrcVerdict verify_hlrc(const LinearCode& code, const std::vector<std::vector<CoordSet>>& levels,
                        const std::vector<LocalityLevel>& params);

/// Result of comparing hyperplanes of M(S_q(m)) other than Y with those of
/// M(S_q(m) - S_q(s)) under H -> H - Y.
struct BijectionCheck {
  std::size_t source_count = 0;
  std::size_t target_count = 0;
  bool injective = false;
  bool surjective = false;
  bool ok() const { return injective && surjective; }
};

BijectionCheck check_hyperplane_bijection(int q, int m, int s);

}  // namespace hlrc
