#include "hlrc/coord_set.hpp"

#include <sstream>

#include "hlrc/error.hpp"

namespace hlrc {

namespace {

void check_index(std::size_t e, std::size_t universe) {
  if (e == 0 || e > universe) {
    throw Error(ErrorCode::IndexOutOfRange,
                "coordinate " + std::to_string(e) + " outside [1, " + std::to_string(universe) + "]");
  }
}

void check_universe(const CoordSet& a, const CoordSet& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorCode::InvalidArgs, "coordinate sets over different lengths");
  }
}

}  // namespace

CoordSet::CoordSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : bits_(universe) {
  for (auto e : members) insert(e);
}

CoordSet::CoordSet(std::size_t universe, const std::vector<std::size_t>& members)
    : bits_(universe) {
  for (auto e : members) insert(e);
}

CoordSet CoordSet::full(std::size_t universe) {
  CoordSet s(universe);
  s.bits_.set();
  return s;
}

bool CoordSet::contains(std::size_t e) const {
  check_index(e, universe());
  return bits_.test(e - 1);
}

void CoordSet::insert(std::size_t e) {
  check_index(e, universe());
  bits_.set(e - 1);
}

void CoordSet::erase(std::size_t e) {
  check_index(e, universe());
  bits_.reset(e - 1);
}

std::vector<std::size_t> CoordSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
    out.push_back(i + 1);
  }
  return out;
}

std::size_t CoordSet::first() const noexcept {
  const auto i = bits_.find_first();
  return i == decltype(bits_)::npos ? 0 : i + 1;
}

std::size_t CoordSet::next(std::size_t e) const noexcept {
  const auto i = bits_.find_next(e - 1);
  return i == decltype(bits_)::npos ? 0 : i + 1;
}

CoordSet CoordSet::operator|(const CoordSet& other) const {
  check_universe(*this, other);
  CoordSet out = *this;
  out.bits_ |= other.bits_;
  return out;
}

CoordSet CoordSet::operator&(const CoordSet& other) const {
  check_universe(*this, other);
  CoordSet out = *this;
  out.bits_ &= other.bits_;
  return out;
}

CoordSet CoordSet::operator-(const CoordSet& other) const {
  check_universe(*this, other);
  CoordSet out = *this;
  out.bits_ -= other.bits_;
  return out;
}

CoordSet CoordSet::complement() const {
  CoordSet out = *this;
  out.bits_.flip();
  return out;
}

std::strong_ordering operator<=>(const CoordSet& a, const CoordSet& b) {
  std::size_t x = a.first();
  std::size_t y = b.first();
  while (x != 0 && y != 0) {
    if (x != y) return x <=> y;
    x = a.next(x);
    y = b.next(y);
  }
  if (x == 0 && y == 0) return a.universe() <=> b.universe();
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string CoordSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for (auto e : members()) {
    if (!first_member) os << ',';
    os << e;
    first_member = false;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoordSet& s) { return os << s.to_string(); }

}  // namespace hlrc
