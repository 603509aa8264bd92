#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlrc/codes.hpp"
#include "hlrc/construct.hpp"
#include "hlrc/locality.hpp"

namespace hlrc {

/// G_q(k, d) = sum_{i<k} ceil(d / q^i). Throws InvalidArgs unless k, d >= 1.
std::uint64_t griesmer(int q, std::size_t k, std::size_t d);

/// Largest k >= 0 with G_q(k, d) <= n. An upper bound on the true largest
/// dimension of a length-n code with distance d. Throws InvalidArgs for d = 0.
std::size_t k_opt(int q, std::size_t n, std::size_t d);

/// LRC bound with locality (r, delta) in the size convention:
/// (ceil((n-d+1)/(r+delta-1)) + 1) * log_q B(r+delta-1, delta) where
/// log_q B(n', d') = min(n'-d'+1, k_opt(q, n', d')). Requires r >= 1,
/// delta >= 2 and d <= n+1.
std::size_t abhmt_bound(int q, std::size_t n, std::size_t d, std::size_t r, std::size_t delta);

/// Minimum of a lambda sweep over [0, n]; ties go to the smallest lambda.
struct SweepResult {
  std::size_t value = 0;
  std::size_t lambda = 0;
  std::vector<std::size_t> binding;  // every lambda attaining the minimum
};

/// mu = (a+1) G_q(kappa, delta) - G_q(kappa-b, delta) for lambda = a*kappa + b.
std::size_t cmg_mu(int q, std::size_t kappa, std::size_t delta, std::size_t lambda);
/// min over lambda of lambda + k_opt(q, n - mu, d), with k_opt = 0 when mu > n.
/// Requires kappa >= 1, delta >= 2.
SweepResult cmg_bound(int q, std::size_t n, std::size_t d, std::size_t kappa, std::size_t delta);

/// Hierarchical locality [(r_1, delta_1), ..., (r_h, delta_h)], outermost
/// first, with r non-increasing and delta strictly decreasing.
class HierLocalityParams {
 public:
  /// Throws InvalidArgs on an empty list, r_j = 0, delta_j = 0, or a
  /// monotonicity violation.
  static HierLocalityParams make(std::vector<LocalityLevel> levels);

  std::size_t h() const noexcept { return levels_.size(); }
  const std::vector<LocalityLevel>& levels() const noexcept { return levels_; }
  /// 1-based level accessors.
  std::size_t r(std::size_t j) const { return levels_.at(j - 1).r; }
  std::size_t delta(std::size_t j) const { return levels_.at(j - 1).delta; }

 private:
  explicit HierLocalityParams(std::vector<LocalityLevel> levels) : levels_(std::move(levels)) {}
  std::vector<LocalityLevel> levels_;
};

/// The size lower bound at entropy lambda:
/// lambda + floor(lambda/r_h)(delta_h - 1) + sum_{l<h} floor(lambda/r_l)(delta_l - delta_{l+1}).
std::size_t hlrc_nu(const HierLocalityParams& params, std::size_t lambda);

/// Singleton-type distance bound n - k + 1 - (nu(k-1) - (k-1)). May be negative.
/// Requires 1 <= k <= n.
long long singleton_hlrc(std::size_t n, std::size_t k, const HierLocalityParams& params);

/// min over lambda in [0, n] of lambda + k_opt(q, n - nu(lambda), d).
SweepResult cm_hlrc_bound(int q, std::size_t n, std::size_t d, const HierLocalityParams& params);

/// Level families for the set-growing algorithm, validated against a code:
/// every level-j set has H <= r_j and restricted distance >= delta_j.
class SetFamilies {
 public:
  /// Throws InvalidFamilies on a violated constraint, a count mismatch with
  /// the parameters, or a set over the wrong length.
  static SetFamilies make(const LinearCode& code, std::vector<std::vector<CoordSet>> levels,
                          HierLocalityParams params);

  const std::vector<std::vector<CoordSet>>& levels() const noexcept { return levels_; }
  const HierLocalityParams& params() const noexcept { return params_; }
  std::size_t length() const noexcept { return n_; }

 private:
  SetFamilies(std::vector<std::vector<CoordSet>> levels, HierLocalityParams params, std::size_t n)
      : levels_(std::move(levels)), params_(std::move(params)), n_(n) {}
  std::vector<std::vector<CoordSet>> levels_;
  HierLocalityParams params_;
  std::size_t n_;
};

/// All closed sets with H <= r_j and restricted distance >= delta_j, per level,
/// in lexicographic order. Materializes the flat lattice (caps apply).
SetFamilies default_families(const LinearCode& code, const HierLocalityParams& params);

/// The levels of a hierarchy as families, with the hierarchy's own parameters.
SetFamilies hierarchy_families(const LinearCode& code, const Hierarchy& hierarchy);

/// One completed level-h addition: incremental entropy a and the size
/// credit s after all corrections applied while it was the latest addition.
struct IcStep {
  std::size_t a = 0;
  std::size_t s = 0;
  CoordSet added;
};

struct IcResult {
  CoordSet ic;
  std::size_t lambda = 0;
  std::size_t entropy = 0;
  std::size_t size = 0;
  std::size_t size_lower_bound = 0;  // hlrc_nu(params, lambda)
  std::vector<std::size_t> counters;  // i_1 .. i_h
  std::vector<IcStep> trace;
  std::size_t padding = 0;  // coordinates added after the loop to reach H = lambda
  std::string mode;         // "algorithm-1" for h = 2, "algorithm-2" otherwise
};

/// Grows a set I by whole level sets, innermost first inside each outer set,
/// while H stays within lambda; then pads I with coordinates that each raise
/// H by one until H(I) = lambda. Qualifying sets are taken in family order.
/// Throws InvalidArgs unless lambda <= k, InvalidFamilies if an outer set is
/// not covered by inner sets, InfeasiblePadding if padding cannot reach lambda.
IcResult construct_Ic(const LinearCode& code, const SetFamilies& families, std::size_t lambda);

struct BoundRecord {
  std::string name;
  std::string inputs;
  long long value = 0;
  std::optional<std::size_t> binding_lambda;
  std::string verdict;
  bool ok = true;
};

struct BoundReport {
  PuncturedSimplexSpec spec;
  CodeParams params;
  std::vector<LocalityLevel> hierarchy;
  std::vector<BoundRecord> records;

  bool optimal() const;
};

/// Evaluates every bound for S_q(m) - S_q(s) against k = m using the closed
/// form parameters: Griesmer tightness, the LRC bounds for each locality and
/// the hierarchical bounds for the hierarchy parameters. Requires m >= 3.
BoundReport optimality_report(int q, int m, int s);

}  // namespace hlrc
