#include "hlrc/matroid.hpp"

#include <algorithm>
#include <set>

#include "hlrc/error.hpp"
#include "hlrc/matrix.hpp"

namespace hlrc {

Matroid::Matroid(LinearCode code)
    : code_(std::make_shared<const LinearCode>(std::move(code))), ground_(code_->coords()) {}

void Matroid::check_subset(const CoordSet& x) const {
  if (x.universe() != ground_.universe() || !x.is_subset_of(ground_)) {
    throw Error(ErrorCode::InvalidArgs, x.to_string() + " is not a subset of the ground set");
  }
}

std::size_t Matroid::rank(const CoordSet& x) const {
  check_subset(x);
  return entropy(*code_, x);
}

CoordSet Matroid::closure(const CoordSet& x) const {
  check_subset(x);
  return hlrc::closure(*code_, x) & ground_;
}

Matroid Matroid::deleted(const CoordSet& y) const {
  check_subset(y);
  return Matroid(code_, ground_ - y);
}

FlatLattice::FlatLattice(std::vector<Flat> flats, std::size_t rank)
    : flats_(std::move(flats)), rank_(rank) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.set < b.set;
  });
  rank_begin_.assign(rank_ + 2, flats_.size());
  for (std::size_t i = flats_.size(); i-- > 0;) rank_begin_[flats_[i].rank] = i;
  for (std::size_t r = rank_ + 1; r-- > 0;) rank_begin_[r] = std::min(rank_begin_[r], rank_begin_[r + 1]);

  // In a matroid, nested flats whose ranks differ by one have nothing between them.
  for (std::size_t r = 0; r < rank_; ++r) {
    for (std::size_t a = rank_begin_[r]; a < rank_begin_[r + 1]; ++a) {
      for (std::size_t b = rank_begin_[r + 1]; b < rank_begin_[r + 2]; ++b) {
        if (flats_[a].set.is_subset_of(flats_[b].set)) covers_.emplace_back(a, b);
      }
    }
  }
}

std::vector<std::size_t> FlatLattice::count_by_rank() const {
  std::vector<std::size_t> out(rank_ + 1, 0);
  for (const auto& f : flats_) ++out[f.rank];
  return out;
}

std::optional<std::size_t> FlatLattice::find(const CoordSet& x) const {
  for (std::size_t r = 0; r <= rank_; ++r) {
    const auto first = flats_.begin() + static_cast<std::ptrdiff_t>(rank_begin_[r]);
    const auto last = flats_.begin() + static_cast<std::ptrdiff_t>(rank_begin_[r + 1]);
    const auto it = std::lower_bound(first, last, x,
                                     [](const Flat& f, const CoordSet& v) { return f.set < v; });
    if (it != last && it->set == x) return static_cast<std::size_t>(it - flats_.begin());
  }
  return std::nullopt;
}

bool FlatLattice::is_covered_by(const CoordSet& lower, const CoordSet& upper) const {
  const auto a = find(lower);
  const auto b = find(upper);
  if (!a || !b) return false;
  return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(*a, *b));
}

std::vector<CoordSet> FlatLattice::of_rank(std::size_t r) const {
  std::vector<CoordSet> out;
  if (r > rank_) return out;
  for (std::size_t i = rank_begin_[r]; i < rank_begin_[r + 1]; ++i) out.push_back(flats_[i].set);
  return out;
}

std::vector<CoordSet> FlatLattice::hyperplanes() const {
  if (rank_ == 0) return {};
  return of_rank(rank_ - 1);
}

std::optional<std::string> FlatLattice::verify_axioms() const {
  for (std::size_t a = 0; a < flats_.size(); ++a) {
    for (std::size_t b = a + 1; b < flats_.size(); ++b) {
      const CoordSet meet = flats_[a].set & flats_[b].set;
      if (!contains(meet)) {
        return "meet of " + flats_[a].set.to_string() + " and " + flats_[b].set.to_string() +
               " is not a flat";
      }
    }
  }
  const auto hyper = hyperplanes();
  const CoordSet top = flats_.back().set;
  for (const auto& f : flats_) {
    CoordSet meet = top;
    for (const auto& h : hyper) {
      if (f.set.is_subset_of(h)) meet = meet & h;
    }
    if (meet != f.set) return f.set.to_string() + " is not an intersection of hyperplanes";
  }
  return std::nullopt;
}

FlatLattice flats(const Matroid& matroid) {
  const std::size_t rank = matroid.rank();
  if (matroid.ground().size() > kMaxMaterializedGround || rank > kMaxMaterializedRank) {
    throw Error(ErrorCode::MaterializationCapExceeded,
                "flat enumeration limited to |E| <= 64 and rank <= 7");
  }
  const LinearCode& code = matroid.code();
  const CoordSet& ground = matroid.ground();

  std::vector<Flat> all;
  std::set<CoordSet> level{matroid.closure(CoordSet(ground.universe()))};
  for (std::size_t r = 0; !level.empty(); ++r) {
    std::set<CoordSet> next;
    for (const auto& f : level) {
      all.push_back({f, r});
      // Every flat of rank r+1 above f is cl(f + e) for some e outside f.
      Span span(code.field(), code.dimension());
      for (std::size_t e = f.first(); e != 0; e = f.next(e)) span.insert(code.column(e));
      CoordSet remaining = ground - f;
      while (!remaining.empty()) {
        const std::size_t e = remaining.first();
        Span grown = span;
        grown.insert(code.column(e));
        CoordSet up = f;
        for (std::size_t x = remaining.first(); x != 0; x = remaining.next(x)) {
          if (grown.contains(code.column(x))) up.insert(x);
        }
        remaining = remaining - up;
        next.insert(std::move(up));
      }
    }
    level = std::move(next);
  }
  return FlatLattice(std::move(all), rank);
}

std::vector<CoordSet> hyperplanes_via_supports(const LinearCode& code) {
  std::set<CoordSet> supports;
  const std::size_t n = code.length();
  for_each_codeword(code, [&](std::span<const Element> word, std::size_t weight) {
    if (weight == 0) return;
    CoordSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (word[i] != 0) s.insert(i + 1);
    }
    supports.insert(std::move(s));
  });
  std::vector<CoordSet> out;
  for (const auto& s : supports) {
    const bool minimal = std::none_of(supports.begin(), supports.end(), [&](const CoordSet& t) {
      return t.is_proper_subset_of(s);
    });
    if (minimal) out.push_back(s.complement());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoordSet> restriction_flats(const Matroid& matroid, const CoordSet& y) {
  const FlatLattice lattice = flats(matroid);
  std::set<CoordSet> out;
  for (const auto& f : lattice.flats()) out.insert(f.set & y);
  return {out.begin(), out.end()};
}

}  // namespace hlrc
