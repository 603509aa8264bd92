#include "hlrc/construct.hpp"

#include <limits>

#include "hlrc/error.hpp"

namespace hlrc {

namespace {

constexpr std::uint64_t kMaxAmbient = std::uint64_t{1} << 24;

}  // namespace

std::uint64_t int_pow(std::uint64_t q, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q != 0 && out > std::numeric_limits<std::uint64_t>::max() / q) {
      throw Error(ErrorCode::InvalidArgs, "integer power overflows 64 bits");
    }
    out *= q;
  }
  return out;
}

BigInt gaussian_binomial(long n, long k, long q) {
  if (q < 2 || k < 0 || n < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgs, "gaussian_binomial needs 0 <= k <= n and q >= 2");
  }
  BigInt num = 1;
  BigInt den = 1;
  const BigInt base = q;
  for (long i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(base, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(base, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

void PuncturedSimplexSpec::validate() const {
  (void)make_field(q);
  if (m < 2) throw Error(ErrorCode::InvalidArgs, "m must be at least 2");
  if (s < 0 || s > m - 1) {
    throw Error(ErrorCode::InvalidArgs,
                "s must satisfy 0 <= s <= m-1 (got m=" + std::to_string(m) + ", s=" +
                    std::to_string(s) + ")");
  }
  if (int_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m)) > kMaxAmbient) {
    throw Error(ErrorCode::InvalidArgs, "q^m exceeds 2^24");
  }
}

std::size_t PuncturedSimplexSpec::length() const {
  const auto uq = static_cast<std::uint64_t>(q);
  return (int_pow(uq, m) - int_pow(uq, s)) / (uq - 1);
}

std::size_t PuncturedSimplexSpec::distance() const {
  const auto uq = static_cast<std::uint64_t>(q);
  if (s == 0) return int_pow(uq, m - 1);
  return int_pow(uq, m - 1) - int_pow(uq, s - 1);
}

std::string to_string(const PuncturedSimplexSpec& spec) {
  return "S_" + std::to_string(spec.q) + "(" + std::to_string(spec.m) + ")-S_" +
         std::to_string(spec.q) + "(" + std::to_string(spec.s) + ")";
}

LinearCode simplex(int q, int m) {
  const FiniteField field = make_field(q);
  if (m < 1) throw Error(ErrorCode::InvalidArgs, "simplex code needs m >= 1");
  const auto uq = static_cast<std::uint64_t>(q);
  const std::uint64_t points = int_pow(uq, static_cast<unsigned>(m));
  if (points > kMaxAmbient) throw Error(ErrorCode::InvalidArgs, "q^m exceeds 2^24");

  Matrix g(static_cast<std::size_t>(m), static_cast<std::size_t>((points - 1) / (uq - 1)));
  std::size_t col = 0;
  std::vector<Element> digits(static_cast<std::size_t>(m));
  for (std::uint64_t v = 1; v < points; ++v) {
    std::uint64_t x = v;
    for (int r = m - 1; r >= 0; --r) {
      digits[static_cast<std::size_t>(r)] = static_cast<Element>(x % uq);
      x /= uq;
    }
    std::size_t lead = 0;
    while (digits[lead] == 0) ++lead;
    if (digits[lead] != 1) continue;
    for (std::size_t r = 0; r < digits.size(); ++r) g.at(r, col) = digits[r];
    ++col;
  }
  return LinearCode::from_generator(field, g);
}

LinearCode punctured_simplex(int q, int m, int s) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  const LinearCode full = simplex(q, m);
  if (s == 0) return full;
  const CoordSet keep = full.coords() - deleted_set(q, m, s);
  const auto members = keep.members();
  Matrix g(static_cast<std::size_t>(m), members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto col = full.column(members[c]);
    for (std::size_t r = 0; r < col.size(); ++r) g.at(r, c) = col[r];
  }
  return LinearCode::from_generator(full.field(), g);
}

CoordSet deleted_set(int q, int m, int s) {
  const PuncturedSimplexSpec spec{q, m, s};
  spec.validate();
  const auto uq = static_cast<std::uint64_t>(q);
  const std::size_t n = (int_pow(uq, m) - 1) / (uq - 1);
  const std::size_t deleted = (int_pow(uq, s) - 1) / (uq - 1);
  CoordSet out(n);
  // Columns with top m-s entries zero have value < q^s and sort first.
  for (std::size_t e = 1; e <= deleted; ++e) out.insert(e);
  return out;
}

}  // namespace hlrc
