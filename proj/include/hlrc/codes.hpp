#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hlrc/coord_set.hpp"
#include "hlrc/gf.hpp"
#include "hlrc/matrix.hpp"

namespace hlrc {

/// Codeword enumeration is refused above q^k = 2^24.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;
/// Exact permutation-equivalence search is refused above this length.
inline constexpr std::size_t kPermutationSearchCap = 14;

enum class ZeroColumns { Reject, Allow };

/// A linear [n, k] code over GF(q) given by a full-rank k x n generator
/// matrix, stored column by column (the columns g_1, ..., g_n of GF(q)^k).
/// Immutable after construction.
class LinearCode {
 public:
  /// `rows` must be a basis: throws RankDeficient if the rows are dependent,
  /// EntryOutOfRange if an entry is not in [0, q), InvalidArgs if the rows
  /// are empty or ragged or if a zero column appears under ZeroColumns::Reject.
  static LinearCode from_rows(const FiniteField& field,
                              const std::vector<std::vector<Element>>& rows,
                              ZeroColumns zero_columns = ZeroColumns::Reject);
  /// Same contract; `generator` is k x n.
  static LinearCode from_generator(const FiniteField& field, const Matrix& generator,
                                   ZeroColumns zero_columns = ZeroColumns::Reject);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  bool allows_zero_columns() const noexcept { return zero_columns_ == ZeroColumns::Allow; }

  /// Column g_i for 1 <= i <= n.
  std::span<const Element> column(std::size_t i) const;
  /// Column g_i read as a base-q integer, top row most significant.
  std::uint64_t column_value(std::size_t i) const;
  Matrix generator() const;
  CoordSet coords() const { return CoordSet::full(n_); }

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  LinearCode(FiniteField field, std::size_t n, std::size_t k, std::vector<Element> columns,
             ZeroColumns zero_columns)
      : field_(std::move(field)), n_(n), k_(k), columns_(std::move(columns)),
        zero_columns_(zero_columns) {}

  FiniteField field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Element> columns_;  // column-major, k entries per column
  ZeroColumns zero_columns_;
};

inline LinearCode code_from_matrix(const FiniteField& field,
                                   const std::vector<std::vector<Element>>& rows,
                                   ZeroColumns zero_columns = ZeroColumns::Reject) {
  return LinearCode::from_rows(field, rows, zero_columns);
}

/// Hamming weight distribution. Only nonzero counts are stored.
struct WeightEnumerator {
  std::size_t length = 0;
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t total() const;
  /// Smallest positive weight with a nonzero count; 0 for the zero code.
  std::size_t min_distance() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

std::string to_string(const WeightEnumerator& w);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::string to_string(const CodeParams& p);

/// H_C(I) = dim C|_I, the rank of the columns indexed by I.
std::size_t entropy(const LinearCode& code, const CoordSet& coords);

/// cl(I): every coordinate whose column lies in the span of the columns of I.
CoordSet closure(const LinearCode& code, const CoordSet& coords);

inline bool is_closed(const LinearCode& code, const CoordSet& coords) {
  return closure(code, coords) == coords;
}

/// C|_I with columns in ascending order of I, re-based to an H(I)-row
/// generator. Throws EmptySet for I = {}.
LinearCode restrict_code(const LinearCode& code, const CoordSet& coords);

/// C/I: codewords vanishing on I, with I removed. Parameters are
/// [n - |I|, k - H(I), d' >= d]. Throws FullEntropyShorten when H(I) = k.
LinearCode shorten(const LinearCode& code, const CoordSet& coords);

/// Visits every codeword u G in mixed-radix message order (least significant
/// message coordinate first). The callback receives the codeword and its
/// weight. Throws EnumerationCapExceeded when q^k > 2^24.
void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::span<const Element>, std::size_t)>& visit);

WeightEnumerator weight_enumerator_bruteforce(const LinearCode& code);
std::size_t min_distance(const LinearCode& code);
CodeParams parameters(const LinearCode& code);

/// Whether some coordinate permutation maps the row space of `a` onto that
/// of `b`. Backtracks over images of an information set of `a`, pruning by
/// column multiplicities, and confirms a candidate by matching every column.
/// Throws SearchCapExceeded for n > 14 and InvalidArgs for different fields.
bool permutation_equivalent(const LinearCode& a, const LinearCode& b);

/// Like permutation_equivalent but also allowing each column to be scaled by
/// a nonzero constant. Identical to it over GF(2).
bool monomially_equivalent(const LinearCode& a, const LinearCode& b);

/// Matrix text format: first line `q k n`, then k lines of n integers.
void write_matrix(std::ostream& os, const LinearCode& code);
/// Throws ParseError on malformed input and the from_rows errors otherwise.
LinearCode read_matrix(std::istream& is, ZeroColumns zero_columns = ZeroColumns::Reject);

}  // namespace hlrc
