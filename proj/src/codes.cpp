#include "hlrc/codes.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hlrc/error.hpp"

namespace hlrc {

namespace {

std::uint64_t message_count(const LinearCode& code) {
  std::uint64_t total = 1;
  const auto q = static_cast<std::uint64_t>(code.field().order());
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    total *= q;
    if (total > kEnumerationCap) {
      throw Error(ErrorCode::EnumerationCapExceeded,
                  "q^k exceeds 2^24 for a code of dimension " + std::to_string(code.dimension()));
    }
  }
  return total;
}

void check_universe(const LinearCode& code, const CoordSet& coords) {
  if (coords.universe() != code.length()) {
    throw Error(ErrorCode::IndexOutOfRange, "coordinate set over length " +
                                                std::to_string(coords.universe()) +
                                                " used with a code of length " +
                                                std::to_string(code.length()));
  }
}

std::vector<std::vector<Element>> matrix_rows(const Matrix& m, std::size_t count) {
  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 0; r < count; ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

}  // namespace

LinearCode LinearCode::from_rows(const FiniteField& field,
                                 const std::vector<std::vector<Element>>& rows,
                                 ZeroColumns zero_columns) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::InvalidArgs, "generator matrix must have at least one row and column");
  }
  Matrix g(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != g.cols) throw Error(ErrorCode::InvalidArgs, "ragged generator rows");
    for (std::size_t c = 0; c < g.cols; ++c) g.at(r, c) = rows[r][c];
  }
  return from_generator(field, g, zero_columns);
}

LinearCode LinearCode::from_generator(const FiniteField& field, const Matrix& generator,
                                      ZeroColumns zero_columns) {
  const std::size_t k = generator.rows;
  const std::size_t n = generator.cols;
  if (k == 0 || n == 0) {
    throw Error(ErrorCode::InvalidArgs, "generator matrix must have at least one row and column");
  }
  for (auto v : generator.data) {
    if (!field.contains(v)) {
      throw Error(ErrorCode::EntryOutOfRange,
                  "entry " + std::to_string(v) + " not in GF(" + std::to_string(field.order()) + ")");
    }
  }
  if (rank(field, generator) != k) {
    throw Error(ErrorCode::RankDeficient, "generator rows are linearly dependent");
  }
  std::vector<Element> columns(k * n);
  for (std::size_t c = 0; c < n; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < k; ++r) {
      columns[c * k + r] = generator.at(r, c);
      zero = zero && generator.at(r, c) == 0;
    }
    if (zero && zero_columns == ZeroColumns::Reject) {
      throw Error(ErrorCode::InvalidArgs, "column " + std::to_string(c + 1) + " is all-zero");
    }
  }
  return LinearCode(field, n, k, std::move(columns), zero_columns);
}

std::span<const Element> LinearCode::column(std::size_t i) const {
  if (i == 0 || i > n_) {
    throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(i) + " outside [1, " +
                                                std::to_string(n_) + "]");
  }
  return {columns_.data() + (i - 1) * k_, k_};
}

std::uint64_t LinearCode::column_value(std::size_t i) const {
  std::uint64_t value = 0;
  for (auto x : column(i)) value = value * static_cast<std::uint64_t>(field_.order()) + x;
  return value;
}

Matrix LinearCode::generator() const {
  Matrix g(k_, n_);
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t r = 0; r < k_; ++r) g.at(r, c) = columns_[c * k_ + r];
  return g;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.columns_ == b.columns_;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, c] : counts) sum += c;
  return sum;
}

std::size_t WeightEnumerator::min_distance() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  return 0;
}

std::string to_string(const WeightEnumerator& w) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [weight, count] : w.counts) {
    if (!first) os << ", ";
    os << weight << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const CodeParams& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

std::size_t entropy(const LinearCode& code, const CoordSet& coords) {
  check_universe(code, coords);
  Span span(code.field(), code.dimension());
  for (std::size_t e = coords.first(); e != 0; e = coords.next(e)) {
    span.insert(code.column(e));
    if (span.rank() == code.dimension()) break;
  }
  return span.rank();
}

CoordSet closure(const LinearCode& code, const CoordSet& coords) {
  check_universe(code, coords);
  Span span(code.field(), code.dimension());
  for (std::size_t e = coords.first(); e != 0; e = coords.next(e)) span.insert(code.column(e));
  if (span.rank() == code.dimension()) return code.coords();
  CoordSet out = coords;
  for (std::size_t e = 1; e <= code.length(); ++e) {
    if (!coords.contains(e) && span.contains(code.column(e))) out.insert(e);
  }
  return out;
}

LinearCode restrict_code(const LinearCode& code, const CoordSet& coords) {
  check_universe(code, coords);
  if (coords.empty()) throw Error(ErrorCode::EmptySet, "restriction to the empty set");
  const auto members = coords.members();
  Matrix sub(code.dimension(), members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto col = code.column(members[c]);
    for (std::size_t r = 0; r < code.dimension(); ++r) sub.at(r, c) = col[r];
  }
  const auto pivots = rref(code.field(), sub);
  if (pivots.empty()) {
    throw Error(ErrorCode::InvalidArgs, "restriction to zero columns has dimension 0");
  }
  return LinearCode::from_rows(code.field(), matrix_rows(sub, pivots.size()),
                               code.allows_zero_columns() ? ZeroColumns::Allow : ZeroColumns::Reject);
}

LinearCode shorten(const LinearCode& code, const CoordSet& coords) {
  check_universe(code, coords);
  if (coords.empty()) return code;
  const auto& field = code.field();
  const auto members = coords.members();

  // Messages u with u . g_i = 0 for all i in I form the null space of G_I^T.
  Matrix gt(members.size(), code.dimension());
  for (std::size_t r = 0; r < members.size(); ++r) {
    const auto col = code.column(members[r]);
    for (std::size_t c = 0; c < code.dimension(); ++c) gt.at(r, c) = col[c];
  }
  const Matrix messages = null_space(field, gt);
  if (messages.rows == 0) {
    throw Error(ErrorCode::FullEntropyShorten, "H(I) = k leaves only the zero codeword");
  }
  const auto keep = (code.coords() - coords).members();
  if (keep.empty()) throw Error(ErrorCode::EmptySet, "shortening on every coordinate");

  Matrix g(messages.rows, keep.size());
  for (std::size_t r = 0; r < messages.rows; ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) {
      const auto col = code.column(keep[c]);
      Element acc = 0;
      for (std::size_t t = 0; t < code.dimension(); ++t)
        acc = field.add(acc, field.mul(messages.at(r, t), col[t]));
      g.at(r, c) = acc;
    }
  }
  return LinearCode::from_generator(field, g, ZeroColumns::Allow);
}

void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::span<const Element>, std::size_t)>& visit) {
  const std::uint64_t total = message_count(code);
  const auto& field = code.field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  const Matrix g = code.generator();
  const auto q = static_cast<Element>(field.order());

  std::vector<Element> digits(k, 0);
  std::vector<Element> word(n, 0);
  std::size_t weight = 0;
  auto add_row = [&](std::size_t r, Element scale) {
    for (std::size_t c = 0; c < n; ++c) {
      const Element x = field.mul(scale, g.at(r, c));
      if (x == 0) continue;
      const Element before = word[c];
      const Element after = field.add(before, x);
      word[c] = after;
      if (before == 0) ++weight;
      if (after == 0) --weight;
    }
  };

  visit(word, weight);
  for (std::uint64_t step = 1; step < total; ++step) {
    // Digit r moves to the next packed element (wrapping to 0), so row r is
    // added with coefficient next - current.
    for (std::size_t r = 0; r < k; ++r) {
      const Element current = digits[r];
      const Element next = static_cast<Element>(current + 1 < q ? current + 1 : 0);
      add_row(r, field.sub(next, current));
      digits[r] = next;
      if (next != 0) break;
    }
    visit(word, weight);
  }
}

WeightEnumerator weight_enumerator_bruteforce(const LinearCode& code) {
  WeightEnumerator w;
  w.length = code.length();
  for_each_codeword(code, [&](std::span<const Element>, std::size_t weight) { ++w.counts[weight]; });
  return w;
}

std::size_t min_distance(const LinearCode& code) {
  std::size_t best = code.length() + 1;
  bool first = true;
  for_each_codeword(code, [&](std::span<const Element>, std::size_t weight) {
    if (first) {
      first = false;  // the zero codeword
      return;
    }
    best = std::min(best, weight);
  });
  return best;
}

CodeParams parameters(const LinearCode& code) {
  return {code.length(), code.dimension(), min_distance(code)};
}

namespace {

// Backtracking search for an invertible map A with A g^a_i = c_i g^b_{pi(i)},
// where every c_i = 1 unless column scaling is allowed.
class EquivalenceSearch {
 public:
  EquivalenceSearch(const LinearCode& a, const LinearCode& b, bool monomial)
      : a_(a), b_(b), field_(a.field()), monomial_(monomial) {
    Span span(field_, a.dimension());
    for (std::size_t e = 1; e <= a.length() && info_.size() < a.dimension(); ++e) {
      if (span.insert(a.column(e))) info_.push_back(e);
    }
    for (std::size_t e = 1; e <= b.length(); ++e) ++b_columns_[key(b.column(e))];
    for (std::size_t e = 1; e <= a.length(); ++e) ++a_columns_[key(a.column(e))];
    // Each column of `a` written in the information-set basis.
    std::vector<std::span<const Element>> basis;
    for (auto e : info_) basis.push_back(a.column(e));
    for (std::size_t e = 1; e <= a.length(); ++e) {
      coords_.push_back(*solve_combination(field_, basis, a.column(e)));
      std::size_t support = 0;
      for (std::size_t t = 0; t < coords_.back().size(); ++t)
        if (coords_.back()[t] != 0) support = t + 1;
      depth_needed_.push_back(support);
    }
  }

  bool run() {
    images_.clear();
    return extend();
  }

 private:
  struct Image {
    std::size_t column;
    Element scale;
  };

  // Base-q value of v, scaled to a leading 1 first when columns may be scaled.
  std::uint64_t key(std::span<const Element> v) const {
    Element scale = 1;
    if (monomial_) {
      for (auto x : v) {
        if (x != 0) {
          scale = field_.inv(x);
          break;
        }
      }
    }
    std::uint64_t value = 0;
    for (auto x : v) value = value * static_cast<std::uint64_t>(field_.order()) + field_.mul(x, scale);
    return value;
  }

  std::uint64_t image_key(std::size_t e) const {
    const auto& x = coords_[e - 1];
    std::vector<Element> v(a_.dimension(), 0);
    for (std::size_t r = 0; r < a_.dimension(); ++r) {
      Element acc = 0;
      for (std::size_t t = 0; t < images_.size(); ++t) {
        const Element c = field_.mul(x[t], images_[t].scale);
        acc = field_.add(acc, field_.mul(c, b_.column(images_[t].column)[r]));
      }
      v[r] = acc;
    }
    return key(v);
  }

  // Every column of `a` whose image is already determined must have a
  // matching column of `b`, counting multiplicity.
  bool consistent() const {
    std::map<std::uint64_t, std::size_t> needed;
    for (std::size_t e = 1; e <= a_.length(); ++e) {
      if (depth_needed_[e - 1] <= images_.size()) ++needed[image_key(e)];
    }
    for (const auto& [value, count] : needed) {
      auto it = b_columns_.find(value);
      if (it == b_columns_.end() || it->second < count) return false;
    }
    return true;
  }

  bool extend() {
    if (images_.size() == info_.size()) return confirm();
    const std::size_t source = info_[images_.size()];
    const std::size_t multiplicity = a_columns_.at(key(a_.column(source)));
    // A common scalar is irrelevant, so the first image keeps scale 1.
    const int scales = (monomial_ && !images_.empty()) ? field_.order() - 1 : 1;
    Span chosen(field_, b_.dimension());
    for (const auto& img : images_) chosen.insert(b_.column(img.column));
    for (std::size_t j = 1; j <= b_.length(); ++j) {
      if (b_columns_.at(key(b_.column(j))) != multiplicity) continue;
      if (chosen.contains(b_.column(j))) continue;
      for (int c = 1; c <= scales; ++c) {
        images_.push_back({j, static_cast<Element>(c)});
        if (consistent() && extend()) return true;
        images_.pop_back();
      }
    }
    return false;
  }

  // Matches every column image to a distinct column of `b`; A is invertible,
  // so a complete matching means the row spaces agree.
  bool confirm() const {
    std::map<std::uint64_t, std::size_t> pool = b_columns_;
    for (std::size_t e = 1; e <= a_.length(); ++e) {
      auto it = pool.find(image_key(e));
      if (it == pool.end() || it->second == 0) return false;
      --it->second;
    }
    return true;
  }

  const LinearCode& a_;
  const LinearCode& b_;
  const FiniteField& field_;
  bool monomial_;
  std::vector<std::size_t> info_;
  std::vector<std::vector<Element>> coords_;
  std::vector<std::size_t> depth_needed_;
  std::map<std::uint64_t, std::size_t> a_columns_;
  std::map<std::uint64_t, std::size_t> b_columns_;
  std::vector<Image> images_;
};

bool equivalent(const LinearCode& a, const LinearCode& b, bool monomial) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::InvalidArgs, "codes over different fields");
  }
  if (a.length() > kPermutationSearchCap || b.length() > kPermutationSearchCap) {
    throw Error(ErrorCode::SearchCapExceeded, "equivalence search is limited to n <= 14");
  }
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  return EquivalenceSearch(a, b, monomial).run();
}

}  // namespace

bool permutation_equivalent(const LinearCode& a, const LinearCode& b) {
  return equivalent(a, b, false);
}

bool monomially_equivalent(const LinearCode& a, const LinearCode& b) {
  return equivalent(a, b, a.field().order() > 2);
}

void write_matrix(std::ostream& os, const LinearCode& code) {
  os << code.field().order() << ' ' << code.dimension() << ' ' << code.length() << '\n';
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    for (std::size_t c = 1; c <= code.length(); ++c) {
      if (c > 1) os << ' ';
      os << static_cast<int>(code.column(c)[r]);
    }
    os << '\n';
  }
}

LinearCode read_matrix(std::istream& is, ZeroColumns zero_columns) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(is, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw Error(ErrorCode::ParseError, "unexpected end of input after line " + std::to_string(line_no));
  };
  auto bad = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };

  auto header = next_line();
  long long q = 0, k = 0, n = 0;
  if (!(header >> q >> k >> n) || k <= 0 || n <= 0) throw bad("expected header `q k n`");
  std::string extra;
  if (header >> extra) throw bad("trailing tokens in header");
  const FiniteField field = make_field(static_cast<int>(q));

  std::vector<std::vector<Element>> rows;
  for (long long r = 0; r < k; ++r) {
    auto in = next_line();
    std::vector<Element> row;
    long long v = 0;
    while (in >> v) {
      if (v < 0 || v >= q) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "line " + std::to_string(line_no) + ": entry " + std::to_string(v));
      }
      row.push_back(static_cast<Element>(v));
    }
    if (!in.eof()) throw bad("non-integer token");
    if (static_cast<long long>(row.size()) != n) {
      throw bad("expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return LinearCode::from_rows(field, rows, zero_columns);
}

}  // namespace hlrc
