#include <set>

#include "doctest.h"

#include "helpers.hpp"
#include "hlrc/construct.hpp"
#include "hlrc/locality.hpp"
#include "hlrc/matroid.hpp"

using namespace hlrc;
using namespace testing_support;

TEST_SUITE("locality") {
  TEST_CASE("restriction type ranges") {
    CHECK(restriction_type_range(4, 2, 3) == std::vector<int>{1, 2});
    CHECK(restriction_type_range(4, 2, 2) == std::vector<int>{0, 1});
    CHECK(restriction_type_range(5, 0, 2) == std::vector<int>{0});
    CHECK(restriction_type_range(5, 4, 2) == std::vector<int>{1});
    CHECK_HLRC_ERROR(restriction_type_range(2, 0, 1), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(restriction_type_range(4, 1, 4), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(restriction_type_range(4, 1, 1), ErrorCode::InvalidArgs);
    CHECK(to_string(restriction_type(2, 3, 1)) == "S(3)-S(1) [6,3,3]");
  }

  TEST_CASE("weight enumerator formula") {
    // S_3(3) - S_3(1): 27 - 9 = 18 codewords of weight 9 - 1 and 8 of weight 9.
    const std::map<std::size_t, std::uint64_t> frozen{{0, 1}, {8, 18}, {9, 8}};
    CHECK(oracle::weight_distribution(oracle::field(3), to_oracle(punctured_simplex(3, 3, 1))) == frozen);
    CHECK(weight_enumerator_formula(3, 3, 1).counts == frozen);
    CHECK(to_string(weight_enumerator_formula(2, 4, 2)) == "{0:1, 6:12, 8:3}");
    for (int q : {4, 5, 7, 8, 9})
      for (int s = 0; s < 3; ++s)
        CHECK(weight_enumerator_formula(q, 3, s) == weight_enumerator_bruteforce(punctured_simplex(q, 3, s)));
  }

  TEST_CASE("hyperplane classes of the [12,4,6] code") {
    LocalityAnalyzer analyzer(PuncturedSimplexSpec{2, 4, 2});
    const auto classes = analyzer.classify_hyperplanes();
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].type.params == CodeParams{6, 3, 3});
    CHECK(classes[0].hyperplanes.size() == 12);
    CHECK(classes[1].type.params == CodeParams{4, 3, 2});
    CHECK(classes[1].hyperplanes.size() == 3);
  }

  TEST_CASE("hyperplane classes with a single type") {
    LocalityAnalyzer rm(PuncturedSimplexSpec{2, 4, 3});
    const auto rm_classes = rm.classify_hyperplanes();
    REQUIRE(rm_classes.size() == 1);
    CHECK(rm_classes[0].type.params == CodeParams{4, 3, 2});
    CHECK(rm_classes[0].hyperplanes.size() == 14);

    LocalityAnalyzer simplex(PuncturedSimplexSpec{2, 3, 0});
    const auto simplex_classes = simplex.classify_hyperplanes();
    REQUIRE(simplex_classes.size() == 1);
    CHECK(simplex_classes[0].type.params == CodeParams{3, 2, 2});
    CHECK(simplex_classes[0].hyperplanes.size() == 7);
  }

  TEST_CASE("hyperplane counts follow the deleted flat") {
    for (int q : {2, 3, 4, 5})
      for (int m = 3; m <= (q <= 3 ? 4 : 3); ++m)
        for (int s = 0; s < m; ++s) {
          LocalityAnalyzer analyzer(PuncturedSimplexSpec{q, m, s});
          std::size_t total = 0;
          for (const auto& cls : analyzer.classify_hyperplanes()) {
            total += cls.hyperplanes.size();
            if (cls.type.i == s && s <= m - 2) {
              CHECK(BigInt(cls.hyperplanes.size()) == gaussian_binomial(m - s, m - s - 1, q));
            }
          }
          CHECK(total == (int_pow(q, m) - 1) / (q - 1) - (s == m - 1 ? 1 : 0));
        }
  }

  TEST_CASE("hyperplane bijection for a larger field") {
    CHECK(check_hyperplane_bijection(4, 3, 1).ok());
    CHECK(check_hyperplane_bijection(5, 3, 2).ok());
  }

  TEST_CASE("every closed set has exactly one admissible type (q = 3)") {
    for (int m = 3; m <= 4; ++m)
      for (int s = 0; s < m; ++s) {
        const auto code = punctured_simplex(3, m, s);
        TypeClassifier classifier(3);
        const auto lattice = flats(Matroid(code));
        for (const auto& flat : lattice.flats()) {
          const int kappa = static_cast<int>(flat.rank);
          if (kappa < 2 || kappa > m - 1) continue;
          const auto restricted = restrict_code(code, flat.set);
          const auto range = restriction_type_range(m, s, kappa);
          const auto w = weight_enumerator_bruteforce(restricted);
          int matches = 0;
          for (int i = 0; i < kappa; ++i)
            if (weight_enumerator_bruteforce(punctured_simplex(3, kappa, i)) == w) ++matches;
          CHECK(matches == 1);
          const auto i = classifier.classify(restricted);
          REQUIRE(i.has_value());
          CHECK(std::find(range.begin(), range.end(), *i) != range.end());
        }
      }
  }

  TEST_CASE("classifier uses column scaling over GF(4)") {
    // Scaling one column keeps the code monomially equivalent to S_4(2).
    const auto f = make_field(4);
    const auto base = simplex(4, 2);
    Matrix g = base.generator();
    g.at(0, 2) = f.mul(2, g.at(0, 2));
    g.at(1, 2) = f.mul(2, g.at(1, 2));
    const auto scaled = LinearCode::from_generator(f, g);
    TypeClassifier classifier(4);
    CHECK(classifier.classify(scaled) == 0);
    CHECK(monomially_equivalent(scaled, base));
  }

  TEST_CASE("find_local_set covers every symbol and admissible type") {
    for (const auto& spec : {PuncturedSimplexSpec{2, 4, 2}, PuncturedSimplexSpec{3, 4, 1},
                             PuncturedSimplexSpec{4, 3, 1}, PuncturedSimplexSpec{2, 5, 3}}) {
      LocalityAnalyzer analyzer(spec);
      const auto& code = analyzer.code();
      for (int kappa = 2; kappa <= spec.m - 1; ++kappa)
        for (int i : restriction_type_range(spec.m, spec.s, kappa))
          for (std::size_t e = 1; e <= code.length(); ++e) {
            const auto set = analyzer.find_local_set(e, kappa, i);
            CHECK(set.contains(e));
            CHECK(is_closed(code, set));
            CHECK(entropy(code, set) == static_cast<std::size_t>(kappa));
            CHECK(parameters(restrict_code(code, set)) == restriction_type(spec.q, kappa, i).params);
          }
    }
  }

  TEST_CASE("find_local_set errors") {
    LocalityAnalyzer analyzer(PuncturedSimplexSpec{2, 4, 2});
    CHECK_HLRC_ERROR(analyzer.find_local_set(0, 3, 1), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(analyzer.find_local_set(13, 3, 1), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(analyzer.find_local_set(1, 4, 1), ErrorCode::InvalidArgs);
    CHECK_HLRC_ERROR(analyzer.find_local_set(1, 3, 0), ErrorCode::TypeNotRealizable);
    CHECK_HLRC_ERROR(analyzer.find_local_set(1, 2, 2), ErrorCode::TypeNotRealizable);
  }

  TEST_CASE("analyzer rejects a mismatched code") {
    CHECK_HLRC_ERROR(LocalityAnalyzer(punctured_simplex(2, 4, 1), PuncturedSimplexSpec{2, 4, 2}),
                     ErrorCode::InvalidArgs);
    LocalityAnalyzer ok(punctured_simplex(2, 4, 2), PuncturedSimplexSpec{2, 4, 2});
    CHECK(ok.code().length() == 12);
  }

  TEST_CASE("profile and chain of the [12,4,6] code") {
    const auto profile = locality_profile(2, 4, 2);
    REQUIRE(profile.types.size() == 4);
    CHECK(profile.types[0].params == CodeParams{6, 3, 3});
    CHECK(profile.types[1].params == CodeParams{4, 3, 2});
    CHECK(profile.types[2].params == CodeParams{3, 2, 2});
    CHECK(profile.types[3].params == CodeParams{2, 2, 1});
    REQUIRE(profile.localities.size() == 3);
    CHECK(profile.localities[0].r_size == 4);
    CHECK(profile.localities[0].delta == 3);
    CHECK(profile.localities[1].r_size == 3);
    CHECK(profile.localities[1].delta == 2);
    CHECK(profile.localities[2].r_size == 2);
    CHECK(profile.localities[2].r_dim == 2);
    CHECK(to_string(profile.hierarchy_params) == "[(3,3),(2,2)]");

    // Golden chain for symbol 1 under the canonical column order.
    REQUIRE(profile.chain.size() == 2);
    CHECK(profile.chain[0].set == CoordSet(12, {1, 5, 9}));
    CHECK(profile.chain[1].set == CoordSet(12, {1, 2, 5, 6, 9, 10}));
    const auto words = oracle::codewords(oracle::field(2), to_oracle(punctured_simplex(2, 4, 2)));
    CHECK(oracle::entropy(oracle::field(2), words, {0, 4, 8}) == 2);
    CHECK(oracle::entropy(oracle::field(2), words, {0, 1, 4, 5, 8, 9}) == 3);
    CHECK_HLRC_ERROR(locality_profile(2, 2, 0), ErrorCode::InvalidArgs);
  }

  TEST_CASE("hierarchy levels nest and verify") {
    for (const auto& spec : {PuncturedSimplexSpec{2, 4, 2}, PuncturedSimplexSpec{2, 5, 1},
                             PuncturedSimplexSpec{3, 4, 2}, PuncturedSimplexSpec{2, 5, 4},
                             PuncturedSimplexSpec{4, 3, 0}}) {
      LocalityAnalyzer analyzer(spec);
      const auto& hierarchy = analyzer.hierarchy();
      const auto dims = analyzer.chain_dimensions();
      REQUIRE(hierarchy.levels.size() == dims.size());
      for (std::size_t j = 0; j < dims.size(); ++j) {
        CHECK(hierarchy.levels[j].type == analyzer.chain_type(dims[j]));
        for (const auto& set : hierarchy.levels[j].sets)
          CHECK(parameters(restrict_code(analyzer.code(), set)) == hierarchy.levels[j].type.params);
      }
      CHECK(hierarchy.params() == analyzer.hierarchy_params());
      CHECK(verify_hlrc(analyzer.code(), hierarchy.families(), hierarchy.params()).ok);

      for (std::size_t e = 1; e <= analyzer.code().length(); e += 3) {
        const auto chain = analyzer.hierarchy_chain(e);
        REQUIRE(chain.size() == dims.size());
        for (std::size_t t = 0; t < chain.size(); ++t) {
          CHECK(chain[t].set.contains(e));
          CHECK(chain[t].type.kappa == dims[dims.size() - 1 - t]);
          if (t > 0) CHECK(chain[t - 1].set.is_proper_subset_of(chain[t].set));
        }
      }
    }
  }

  TEST_CASE("level counts") {
    for (int q : {2, 3})
      for (int m = 3; m <= 5; ++m)
        for (int s = 0; s < m; ++s) {
          LocalityAnalyzer analyzer(PuncturedSimplexSpec{q, m, s});
          const std::size_t expected = (q == 2 && s == m - 1) ? m - 3 : m - 2;
          CHECK(analyzer.chain_dimensions().size() == expected);
        }
  }

  TEST_CASE("verify_hlrc reports violations") {
    LocalityAnalyzer analyzer(PuncturedSimplexSpec{2, 4, 2});
    const auto families = analyzer.hierarchy().families();
    const auto& code = analyzer.code();

    auto strict = analyzer.hierarchy_params();
    strict[1].delta = 3;
    auto verdict = verify_hlrc(code, families, strict);
    CHECK_FALSE(verdict.ok);
    CHECK_FALSE(verdict.witness.empty());

    auto small_r = analyzer.hierarchy_params();
    small_r[0].r = 2;
    CHECK_FALSE(verify_hlrc(code, families, small_r).ok);

    auto partial = families;
    partial[0].resize(1);
    CHECK_FALSE(verify_hlrc(code, partial, analyzer.hierarchy_params()).ok);

    auto thin = families;
    thin[1].erase(thin[1].begin());
    CHECK_FALSE(verify_hlrc(code, thin, analyzer.hierarchy_params()).ok);
  }
}
