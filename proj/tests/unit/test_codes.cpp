#include <sstream>

#include "doctest.h"

#include "helpers.hpp"
#include "hlrc/construct.hpp"

using namespace hlrc;
using namespace testing_support;

TEST_SUITE("codes") {
  TEST_CASE("rank and null space on random matrices") {
    SplitMix64 rng(11);
    for (int q : {2, 3, 4, 5, 9}) {
      const auto f = make_field(q);
      const auto o = oracle::field(q);
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(6);
        Matrix m(rows, cols);
        for (auto& x : m.data) x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(q)));
        oracle::Mat om(rows, oracle::Vec(cols));
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c) om[r][c] = m.at(r, c);
        std::vector<std::size_t> all(cols);
        for (std::size_t c = 0; c < cols; ++c) all[c] = c;
        const std::size_t expected = oracle::entropy(o, oracle::codewords(o, om), all);
        CHECK(rank(f, m) == expected);

        const Matrix ns = null_space(f, m);
        CHECK(ns.rows == cols - expected);
        for (std::size_t b = 0; b < ns.rows; ++b)
          for (std::size_t r = 0; r < rows; ++r) {
            Element acc = 0;
            for (std::size_t c = 0; c < cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), ns.at(b, c)));
            CHECK(acc == 0);
          }
      }
    }
  }

  TEST_CASE("rref pivots are reproducible") {
    const auto f = make_field(3);
    Matrix m(2, 3);
    m.data = {0, 2, 1, 1, 1, 0};
    const auto pivots = rref(f, m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m.data == std::vector<Element>{1, 0, 1, 0, 1, 2});
  }

  TEST_CASE("solve_combination") {
    const auto f = make_field(5);
    const std::vector<Element> a{1, 2, 0}, b{0, 1, 3}, target{2, 2, 4};
    const std::vector<std::span<const Element>> cols{a, b};
    const auto x = solve_combination(f, cols, target);
    REQUIRE(x.has_value());
    for (std::size_t r = 0; r < 3; ++r) CHECK(f.add(f.mul((*x)[0], a[r]), f.mul((*x)[1], b[r])) == target[r]);
    const std::vector<Element> outside{0, 0, 1};
    CHECK_FALSE(solve_combination(f, cols, outside).has_value());
  }

  TEST_CASE("CoordSet is 1-based and ordered by member list") {
    CoordSet a(5, {1, 4});
    CoordSet b(5, {2});
    CHECK(a < b);
    CHECK(a.members() == std::vector<std::size_t>{1, 4});
    CHECK(a.first() == 1);
    CHECK(a.next(1) == 4);
    CHECK(a.next(4) == 0);
    CHECK((a | b).size() == 3);
    CHECK((a & b).empty());
    CHECK((a - CoordSet(5, {4})) == CoordSet(5, {1}));
    CHECK(a.complement() == CoordSet(5, {2, 3, 5}));
    CHECK(a.to_string() == "{1,4}");
    CHECK_HLRC_ERROR(a.contains(0), ErrorCode::IndexOutOfRange);
    CHECK_HLRC_ERROR(a.contains(6), ErrorCode::IndexOutOfRange);
    CHECK_HLRC_ERROR(CoordSet(3, {4}), ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("construction errors") {
    const auto f = make_field(2);
    CHECK_HLRC_ERROR(LinearCode::from_rows(f, {}), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(LinearCode::from_rows(f, {{1, 0}, {1}}), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(LinearCode::from_rows(f, {{1, 2}}), ErrorCode::EntryOutOfRange);
    CHECK_HLRC_ERROR(LinearCode::from_rows(f, {{1, 1}, {1, 1}}), ErrorCode::RankDeficient);
    CHECK_HLRC_ERROR(LinearCode::from_rows(f, {{1, 0, 1}, {0, 0, 1}}), ErrorCode::InvalidArgs);
    const auto allowed = LinearCode::from_rows(f, {{1, 0, 1}, {0, 0, 1}}, ZeroColumns::Allow);
    CHECK(allowed.length() == 3);
    CHECK(allowed.allows_zero_columns());
    CHECK_HLRC_ERROR(allowed.column(0), ErrorCode::IndexOutOfRange);
    CHECK_HLRC_ERROR(allowed.column(4), ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("entropy matches projected codeword counts and is submodular") {
    SplitMix64 rng(5);
    for (int q : {2, 3, 4}) {
      const auto f = make_field(q);
      const auto o = oracle::field(q);
      for (int trial = 0; trial < 8; ++trial) {
        const std::size_t k = 1 + rng.below(3), n = k + rng.below(5);
        const auto code = random_code(rng, f, k, n);
        const auto words = oracle::codewords(o, to_oracle(code));
        for (int pick = 0; pick < 20; ++pick) {
          const CoordSet i = random_subset(rng, n), j = random_subset(rng, n);
          std::vector<std::size_t> zero_based;
          for (auto e : i.members()) zero_based.push_back(e - 1);
          CHECK(entropy(code, i) == oracle::entropy(o, words, zero_based));
          CHECK(entropy(code, i) <= std::min(i.size(), k));
          CHECK(entropy(code, i & j) <= entropy(code, i));
          CHECK(entropy(code, i | j) + entropy(code, i & j) <= entropy(code, i) + entropy(code, j));

          const CoordSet ci = closure(code, i);
          CHECK(i.is_subset_of(ci));
          CHECK(closure(code, ci) == ci);
          CHECK(entropy(code, ci) == entropy(code, i));
          CHECK(closure(code, i & j).is_subset_of(ci));
        }
      }
    }
  }

  TEST_CASE("restriction keeps entropy of subsets") {
    SplitMix64 rng(8);
    const auto code = punctured_simplex(3, 3, 1);
    for (int trial = 0; trial < 40; ++trial) {
      CoordSet i = random_subset(rng, code.length());
      if (i.empty()) continue;
      const auto restricted = restrict_code(code, i);
      CHECK(restricted.dimension() == entropy(code, i));
      CHECK(restricted.length() == i.size());
      const auto members = i.members();
      CoordSet local(i.size());
      CoordSet global(code.length());
      for (std::size_t t = 0; t < members.size(); ++t)
        if (rng.below(2) == 1) {
          local.insert(t + 1);
          global.insert(members[t]);
        }
      CHECK(entropy(restricted, local) == entropy(code, global));
    }
    CHECK_HLRC_ERROR(restrict_code(code, CoordSet(code.length())), ErrorCode::EmptySet);
  }

  TEST_CASE("weight enumerators match direct enumeration for every order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto o = oracle::field(q);
      for (int m = 2; m <= 3; ++m)
        for (int s = 0; s < m; ++s) {
          const auto code = punctured_simplex(q, m, s);
          const auto w = weight_enumerator_bruteforce(code);
          CHECK(w.counts.at(0) == 1);
          CHECK(w.total() == oracle::ipow(q, m));
          CHECK(w.counts == oracle::weight_distribution(o, to_oracle(code)));
          CHECK(min_distance(code) == oracle::min_distance(o, to_oracle(code)));
        }
    }
  }

  TEST_CASE("shortening keeps distance and drops entropy") {
    SplitMix64 rng(21);
    for (int q : {2, 3}) {
      const auto code = punctured_simplex(q, 4, 1);
      const std::size_t d = min_distance(code);
      for (int trial = 0; trial < 20; ++trial) {
        const CoordSet i = random_subset(rng, code.length());
        const std::size_t h = entropy(code, i);
        if (h == code.dimension()) {
          CHECK_HLRC_ERROR(shorten(code, i), ErrorCode::FullEntropyShorten);
          continue;
        }
        const auto s = shorten(code, i);
        CHECK(s.length() == code.length() - i.size());
        CHECK(s.dimension() == code.dimension() - h);
        CHECK(min_distance(s) >= d);
      }
    }
  }

  TEST_CASE("enumeration cap") {
    const auto f = make_field(2);
    std::vector<std::vector<Element>> rows(25, std::vector<Element>(25, 0));
    for (std::size_t i = 0; i < 25; ++i) rows[i][i] = 1;
    const auto code = LinearCode::from_rows(f, rows);
    CHECK_HLRC_ERROR(weight_enumerator_bruteforce(code), ErrorCode::EnumerationCapExceeded);
  }

  TEST_CASE("permutation and monomial equivalence against exhaustive search") {
    SplitMix64 rng(99);
    for (int q : {2, 3, 4}) {
      const auto f = make_field(q);
      const auto o = oracle::field(q);
      const std::size_t n_max = q == 4 ? 4 : 5;
      for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 3 + rng.below(n_max - 2);
        const std::size_t k = 1 + rng.below(2);
        const auto a = random_code(rng, f, k, n);
        // Half the time compare against a column-permuted, column-scaled copy.
        LinearCode b = random_code(rng, f, k, n);
        if (trial % 2 == 0) {
          const auto perm = rng.sample(n, n);
          Matrix g(k, n);
          for (std::size_t c = 0; c < n; ++c) {
            const auto scale = static_cast<Element>(1 + rng.below(static_cast<std::uint64_t>(q - 1)));
            for (std::size_t r = 0; r < k; ++r) g.at(r, perm[c] - 1) = f.mul(scale, a.column(c + 1)[r]);
          }
          b = LinearCode::from_generator(f, g, ZeroColumns::Allow);
        }
        const auto oa = to_oracle(a), ob = to_oracle(b);
        CHECK(permutation_equivalent(a, b) == oracle::equivalent_bruteforce(o, oa, ob, false));
        CHECK(monomially_equivalent(a, b) == oracle::equivalent_bruteforce(o, oa, ob, true));
      }
    }
  }

  TEST_CASE("equivalence search limits") {
    CHECK_HLRC_ERROR(permutation_equivalent(simplex(2, 4), simplex(2, 4)), ErrorCode::SearchCapExceeded);
    CHECK_HLRC_ERROR(permutation_equivalent(simplex(2, 2), simplex(3, 2)), ErrorCode::InvalidArgs);
    CHECK(permutation_equivalent(punctured_simplex(2, 4, 2), punctured_simplex(2, 4, 2)));
    CHECK_FALSE(permutation_equivalent(punctured_simplex(2, 3, 1), punctured_simplex(2, 3, 2)));
  }

  TEST_CASE("matrix text round trip and parse errors") {
    const auto code = punctured_simplex(3, 3, 1);
    std::stringstream ss;
    write_matrix(ss, code);
    CHECK(ss.str().rfind("3 3 12\n", 0) == 0);
    const auto back = read_matrix(ss);
    CHECK(back == code);

    std::istringstream empty("");
    CHECK_HLRC_ERROR(read_matrix(empty), ErrorCode::ParseError);
    std::istringstream short_row("2 2 3\n1 0 1\n0 1\n");
    CHECK_HLRC_ERROR(read_matrix(short_row), ErrorCode::ParseError);
    std::istringstream junk("2 1 2\n1 x\n");
    CHECK_HLRC_ERROR(read_matrix(junk), ErrorCode::ParseError);
    std::istringstream bad_q("6 1 1\n1\n");
    CHECK_HLRC_ERROR(read_matrix(bad_q), ErrorCode::UnsupportedOrder);
    std::istringstream bad_entry("2 1 2\n1 3\n");
    CHECK_HLRC_ERROR(read_matrix(bad_entry), ErrorCode::EntryOutOfRange);
  }
}
