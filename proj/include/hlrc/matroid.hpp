#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlrc/codes.hpp"

namespace hlrc {

/// Flat materialization is refused above these sizes.
inline constexpr std::size_t kMaxMaterializedGround = 64;
inline constexpr std::size_t kMaxMaterializedRank = 7;

/// The representable matroid of a code, restricted to a ground set E.
/// Coordinates keep their index in the underlying code, so after deletion
/// every CoordSet still lives in the universe [n] of the original code.
class Matroid {
 public:
  explicit Matroid(LinearCode code);

  const LinearCode& code() const noexcept { return *code_; }
  const CoordSet& ground() const noexcept { return ground_; }

  /// rho(X). Throws InvalidArgs unless X is a subset of the ground set.
  std::size_t rank(const CoordSet& x) const;
  std::size_t rank() const { return rank(ground_); }
  /// Closure inside the ground set.
  CoordSet closure(const CoordSet& x) const;
  bool is_flat(const CoordSet& x) const { return closure(x) == x; }

  /// M \ Y. Throws InvalidArgs unless Y is a subset of the ground set.
  Matroid deleted(const CoordSet& y) const;

 private:
  Matroid(std::shared_ptr<const LinearCode> code, CoordSet ground)
      : code_(std::move(code)), ground_(std::move(ground)) {}
  void check_subset(const CoordSet& x) const;

  std::shared_ptr<const LinearCode> code_;
  CoordSet ground_;
};

inline Matroid matroid_from_code(const LinearCode& code) { return Matroid(code); }
inline Matroid delete_elements(const Matroid& m, const CoordSet& y) { return m.deleted(y); }

struct Flat {
  CoordSet set;
  std::size_t rank = 0;
};

/// All flats of a matroid ordered by (rank, member list), with the covering
/// relation between them.
class FlatLattice {
 public:
  FlatLattice(std::vector<Flat> flats, std::size_t rank);

  const std::vector<Flat>& flats() const noexcept { return flats_; }
  std::size_t size() const noexcept { return flats_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  /// Pairs (a, b) of flat indices with flats()[a] covered by flats()[b].
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept {
    return covers_;
  }

  std::vector<std::size_t> count_by_rank() const;
  std::optional<std::size_t> find(const CoordSet& x) const;
  bool contains(const CoordSet& x) const { return find(x).has_value(); }
  bool is_covered_by(const CoordSet& lower, const CoordSet& upper) const;
  /// Flats of rank rank()-1.
  std::vector<CoordSet> hyperplanes() const;
  std::vector<CoordSet> of_rank(std::size_t r) const;

  /// Meet closure and the hyperplane-intersection representation. Returns a
  /// description of the first violation, if any. Quadratic in size().
  std::optional<std::string> verify_axioms() const;

 private:
  std::vector<Flat> flats_;
  std::size_t rank_;
  std::vector<std::size_t> rank_begin_;  // index of the first flat of each rank
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Throws MaterializationCapExceeded when |E| > 64 or rank > 7.
FlatLattice flats(const Matroid& matroid);

/// Complements of the minimal nonempty codeword supports, in lexicographic
/// order. Throws EnumerationCapExceeded via codeword enumeration.
std::vector<CoordSet> hyperplanes_via_supports(const LinearCode& code);

/// F(M|Y) = { F & Y : F a flat of M }, deduplicated and sorted.
std::vector<CoordSet> restriction_flats(const Matroid& matroid, const CoordSet& y);

}  // namespace hlrc
