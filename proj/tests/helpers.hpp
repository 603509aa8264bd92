#pragma once

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "hlrc/codes.hpp"
#include "hlrc/error.hpp"
#include "hlrc/rng.hpp"
#include "oracles.hpp"

#define CHECK_HLRC_ERROR(expr, expected)                              \
  do {                                                                \
    try {                                                             \
      (void)(expr);                                                   \
      FAIL_CHECK("no error from " #expr);                             \
    } catch (const hlrc::Error& hlrc_error_) {                        \
      CHECK_MESSAGE(hlrc_error_.code() == (expected), hlrc_error_.what()); \
    }                                                                 \
  } while (0)

namespace testing_support {

inline oracle::Mat to_oracle(const hlrc::LinearCode& code) {
  oracle::Mat g(code.dimension(), oracle::Vec(code.length()));
  for (std::size_t c = 1; c <= code.length(); ++c) {
    const auto col = code.column(c);
    for (std::size_t r = 0; r < code.dimension(); ++r) g[r][c - 1] = col[r];
  }
  return g;
}

inline std::vector<std::vector<hlrc::Element>> to_rows(const oracle::Mat& g) {
  std::vector<std::vector<hlrc::Element>> rows;
  for (const auto& r : g) rows.emplace_back(r.begin(), r.end());
  return rows;
}

inline std::uint64_t to_mask(const hlrc::CoordSet& s) {
  std::uint64_t mask = 0;
  for (auto e : s.members()) mask |= std::uint64_t{1} << (e - 1);
  return mask;
}

inline hlrc::CoordSet from_mask(std::uint64_t mask, std::size_t n) {
  hlrc::CoordSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) s.insert(i + 1);
  return s;
}

inline hlrc::CoordSet random_subset(hlrc::SplitMix64& rng, std::size_t n) {
  hlrc::CoordSet s(n);
  for (std::size_t e = 1; e <= n; ++e)
    if (rng.below(2) == 1) s.insert(e);
  return s;
}

// Random k x n matrix over GF(q) with full row rank, retrying until it is.
inline hlrc::LinearCode random_code(hlrc::SplitMix64& rng, const hlrc::FiniteField& f, std::size_t k,
                                    std::size_t n,
                                    hlrc::ZeroColumns zeros = hlrc::ZeroColumns::Allow) {
  while (true) {
    hlrc::Matrix g(k, n);
    for (auto& x : g.data) x = static_cast<hlrc::Element>(rng.below(static_cast<std::uint64_t>(f.order())));
    if (hlrc::rank(f, g) != k) continue;
    try {
      return hlrc::LinearCode::from_generator(f, g, zeros);
    } catch (const hlrc::Error&) {
    }
  }
}

}  // namespace testing_support
