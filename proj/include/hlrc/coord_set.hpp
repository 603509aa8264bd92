#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hlrc {

/// A subset of the coordinates [n] = {1, ..., n}. Coordinates are 1-based
/// throughout the public API. Ordering compares the sorted member lists
/// lexicographically, which is the tie-break used by every deterministic
/// search in the library.
class CoordSet {
 public:
  CoordSet() = default;
  explicit CoordSet(std::size_t universe) : bits_(universe) {}
  CoordSet(std::size_t universe, std::initializer_list<std::size_t> members);
  CoordSet(std::size_t universe, const std::vector<std::size_t>& members);

  static CoordSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  /// Throws Error(IndexOutOfRange) unless 1 <= e <= universe().
  bool contains(std::size_t e) const;
  void insert(std::size_t e);
  void erase(std::size_t e);

  /// Sorted 1-based members.
  std::vector<std::size_t> members() const;
  /// Smallest member, or 0 when empty.
  std::size_t first() const noexcept;
  /// Next member after e, or 0 when none.
  std::size_t next(std::size_t e) const noexcept;

  bool is_subset_of(const CoordSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const CoordSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const CoordSet& other) const { return bits_.intersects(other.bits_); }

  CoordSet operator|(const CoordSet& other) const;
  CoordSet operator&(const CoordSet& other) const;
  CoordSet operator-(const CoordSet& other) const;
  CoordSet complement() const;

  friend bool operator==(const CoordSet& a, const CoordSet& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const CoordSet& a, const CoordSet& b);

  std::string to_string() const;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const CoordSet& s);

}  // namespace hlrc
