#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlrc/codes.hpp"

namespace hlrc {

using BigInt = boost::multiprecision::cpp_int;

/// q^e in 64 bits. Throws InvalidArgs on overflow.
std::uint64_t int_pow(std::uint64_t q, unsigned e);

/// Number of k-dimensional subspaces of GF(q)^n. Throws InvalidArgs unless
/// 0 <= k <= n and q >= 2.
BigInt gaussian_binomial(long n, long k, long q);

/// Parameters of the code obtained by deleting an embedded S_q(s) from S_q(m).
struct PuncturedSimplexSpec {
  int q = 2;
  int m = 2;
  int s = 0;

  /// Throws UnsupportedOrder for q, InvalidArgs unless m >= 2 and 0 <= s <= m-1.
  void validate() const;
  std::size_t length() const;
  std::size_t dimension() const { return static_cast<std::size_t>(m); }
  std::size_t distance() const;
  CodeParams params() const { return {length(), dimension(), distance()}; }
  /// s = m-1 gives the first-order Reed-Muller code RM(1, m-1) when q = 2.
  bool is_reed_muller() const { return q == 2 && s == m - 1; }

  friend bool operator==(const PuncturedSimplexSpec&, const PuncturedSimplexSpec&) = default;
};

std::string to_string(const PuncturedSimplexSpec& spec);

/// S_q(m): one normalized representative (first nonzero entry 1) of every
/// projective point of GF(q)^m, ordered by the column's base-q value with the
/// top row most significant. Requires m >= 1 and q^m <= 2^24.
LinearCode simplex(int q, int m);

/// S_q(m) - S_q(s): simplex(q, m) without the columns whose top m-s entries
/// are zero. s = 0 returns simplex(q, m).
LinearCode punctured_simplex(int q, int m, int s);
inline LinearCode punctured_simplex(const PuncturedSimplexSpec& spec) {
  return punctured_simplex(spec.q, spec.m, spec.s);
}

/// Indices in simplex(q, m) of the deleted columns: {1, ..., (q^s-1)/(q-1)}.
CoordSet deleted_set(int q, int m, int s);

}  // namespace hlrc
