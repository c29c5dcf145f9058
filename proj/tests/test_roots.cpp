#include <gtest/gtest.h>

#include "hecke/roots.hpp"

using namespace hecke;

namespace {

Tableau two_row(const std::string& text) { return Tableau::parse(text); }

TEST(PRegular, Definition) {
  EXPECT_TRUE(is_p_regular(Partition{3, 2}, 3));
  EXPECT_FALSE(is_p_regular(Partition{2, 2, 2}, 3));
  EXPECT_TRUE(is_p_regular(Partition{4, 1}, 3));
  EXPECT_TRUE(is_p_regular(Partition{2, 2}, 3));
}

TEST(Analyze, TableRows) {
  struct Row {
    Partition lambda;
    int p;
    std::optional<Partition> mu;
  };
  const std::vector<Row> rows{
      {{5, 4}, 3, Partition{6, 3}}, {{6, 4}, 3, std::nullopt}, {{7, 4}, 3, Partition{9, 2}},
      {{8, 3}, 3, std::nullopt},    {{8, 2}, 5, std::nullopt}, {{9, 3}, 5, Partition{12}},
  };
  for (const auto& row : rows) {
    const auto rep = analyze(row.lambda, row.p);
    EXPECT_EQ(rep.reducible, row.mu.has_value()) << row.lambda.to_string();
    EXPECT_EQ(rep.mu, row.mu) << row.lambda.to_string();
  }
}

TEST(Analyze, KValues) {
  EXPECT_EQ(analyze(Partition{7, 4}, 3).k, 2);
  EXPECT_EQ(analyze(Partition{5, 4}, 3).k, 1);
  EXPECT_EQ(analyze(Partition{9, 3}, 5).k, 2);
}

TEST(Analyze, Errors) {
  EXPECT_THROW(analyze(Partition{3, 2}, 2), std::domain_error);
  EXPECT_THROW(analyze(Partition{3, 2, 1}, 3), std::domain_error);
}

TEST(Analyze, SubmoduleLabelIsRegularAndDominates) {
  for (int n = 2; n <= 16; ++n)
    for (int l2 = 0; 2 * l2 <= n; ++l2)
      for (int p : {3, 5, 7}) {
        const Partition lambda{n - l2, l2};
        const auto rep = analyze(lambda, p);
        if (!rep.reducible) continue;
        EXPECT_TRUE(is_p_regular(*rep.mu, p));
        EXPECT_GT(rep.mu->row_length(0), lambda.row_length(0));
        EXPECT_EQ(rep.mu->size(), n);
        EXPECT_EQ(*rep.dim_D_mu + rep.dim_D_lambda, rep.dim_S) << lambda.to_string() << " p=" << p;
      }
}

TEST(StripMultiplier, WindowHasAtMostOneMultiple) {
  for (int l1 = 1; l1 <= 20; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2)
      for (int p : {3, 4, 5, 7}) {
        const int lo = l1 - l2 + 2, hi = std::min(l1 + 1, l1 - l2 + p);
        int count = 0;
        for (int k = 1; k * p <= hi; ++k) count += k * p >= lo;
        const auto k = strip_multiplier(Partition{l1, l2}, p);
        EXPECT_EQ(count, k ? 1 : 0);
        if (k) EXPECT_TRUE(lo <= *k * p && *k * p <= hi);
      }
}

TEST(StripCriterion, Examples) {
  EXPECT_TRUE(strip_criterion_equivalence(Partition{5, 4}, 3));
  const auto s54 = reducing_strip(Partition{5, 4}, 3);
  ASSERT_TRUE(s54);
  EXPECT_EQ(s54->length(), 3);
  EXPECT_EQ(s54->second_row_boxes(), 1);

  EXPECT_TRUE(strip_criterion_equivalence(Partition{7, 4}, 3));
  const auto s74 = reducing_strip(Partition{7, 4}, 3);
  ASSERT_TRUE(s74);
  EXPECT_EQ(s74->length(), 6);
  EXPECT_EQ(s74->second_row_boxes(), 2);

  EXPECT_TRUE(strip_criterion_equivalence(Partition{6, 4}, 3));
  EXPECT_FALSE(reducing_strip(Partition{6, 4}, 3));
}

TEST(StripCriterion, AgreesEverywhere) {
  for (int n = 1; n <= 24; ++n)
    for (int l2 = 0; 2 * l2 <= n; ++l2)
      for (int p : {3, 4, 5, 6, 7, 11}) EXPECT_TRUE(strip_criterion_equivalence(Partition{n - l2, l2}, p));
}

TEST(DimensionD, Examples) {
  EXPECT_EQ(dimension_D(Partition{6, 5}, 3), 1u);
  EXPECT_EQ(dimension_D(Partition{3, 2}, 3), 1u);
  EXPECT_EQ(dimension_D(Partition{6, 4}, 3), hook_count(Partition{6, 4}));
  EXPECT_EQ(hook_count(Partition{6, 4}), 90u);
}

TEST(StripStandard, Positions) {
  const TwoRowTableauView t(two_row("1,2,3,4,6,8,10/5,7,9,11"));
  EXPECT_TRUE(is_s_strip_standard(t, 6, 1));
  EXPECT_TRUE(is_s_strip_standard(t, 6, 4));
  EXPECT_THROW(is_s_strip_standard(t, 6, 5), std::out_of_range);
  const TwoRowTableauView u(two_row("1,2,3,4,5,8,10/6,7,9,11"));
  EXPECT_FALSE(is_s_strip_standard(u, 6, 1));
}

TEST(PRootStandard, ListedExamples) {
  for (const char* good : {"1,2,3,4,6,8,10/5,7,9,11", "1,3,4,5,6,7,11/2,8,9,10", "1,2,3,4,5,9,10/6,7,8,11"})
    EXPECT_TRUE(is_p_root_standard(two_row(good), 3)) << good;
  for (const char* bad : {"1,3,5,6,7,8,9/2,4,10,11", "1,3,4,5,6,7,10/2,8,9,11", "1,2,3,4,5,8,10/6,7,9,11"})
    EXPECT_FALSE(is_p_root_standard(two_row(bad), 3)) << bad;
}

TEST(PRootStandard, Errors) {
  EXPECT_THROW(is_p_root_standard(Tableau::parse("1,3/2,4/5"), 3), std::domain_error);
  EXPECT_FALSE(is_p_root_standard(Tableau::parse("2,3,5/1,4"), 3));
}

TEST(PRootStandard, Counts) {
  EXPECT_EQ(enumerate_p_root_standard(Partition{6, 5}, 3).size(), 1u);
  EXPECT_EQ(enumerate_p_root_standard(Partition{6, 4}, 3).size(), 90u);
  EXPECT_EQ(enumerate_p_root_standard(Partition{3, 2}, 3).size(), 1u);
}

TEST(PRootStandard, CountEqualsDimension) {
  for (int n = 1; n <= 12; ++n)
    for (int l2 = 0; 2 * l2 <= n; ++l2)
      for (int p : {3, 5, 7}) {
        const Partition lambda{n - l2, l2};
        EXPECT_EQ(enumerate_p_root_standard(lambda, p).size(), dimension_D(lambda, p))
            << lambda.to_string() << " p=" << p;
      }
}

TEST(Oracle, ThreeTwoAtCubeRoot) {
  const RootModule module(Partition{3, 2}, CyclotomicRing(3));
  const auto gens = find_submodule_generators(module, Partition{4, 1});
  ASSERT_EQ(gens.size(), 1u);
  const auto& v = gens[0].coords;
  const auto a = v(*module.index_of(Tableau::parse("1,3,5/2,4")), 0);
  const auto b = v(*module.index_of(Tableau::parse("1,3,4/2,5")), 0);
  ASSERT_FALSE(a.is_zero());
  EXPECT_EQ(a, b);
  for (int k = 0; k < module.dimension(); ++k) {
    const auto& t = module.basis()[k];
    if (t.to_string() != "1,3,5/2,4" && t.to_string() != "1,3,4/2,5") EXPECT_TRUE(v(k, 0).is_zero());
  }
  EXPECT_EQ(submodule_dimension(module, gens), 4);
}

TEST(Oracle, HandBuiltVectorIsKilled) {
  const RootModule module(Partition{3, 2}, CyclotomicRing(3));
  const auto v = module.apply(ColumnElement{4}.element(), module.superstandard_vector());
  for (const auto& x : annihilator_elements(Partition{4, 1})) EXPECT_TRUE(module.apply(x, v).coords.is_zero());
  // The same vector is not killed generically: 1 + q + q^2 is nonzero there.
  const SpechtModule<GenericRing> generic(Partition{3, 2}, GenericRing{});
  const auto w = generic.apply(ColumnElement{4}.element(), generic.superstandard_vector());
  EXPECT_FALSE(generic.apply(garnir_element(Partition{4, 1}, 3).element(), w).coords.is_zero());
}

TEST(Oracle, Errors) {
  EXPECT_THROW(find_submodule_generators(Partition{3, 2}, Partition{3, 1}, 3), std::invalid_argument);
  EXPECT_THROW(find_submodule_generators(Partition{3, 3}, Partition{2, 2, 2}, 3), std::invalid_argument);
  EXPECT_THROW(find_submodule_generators(Partition{3, 2}, Partition{4, 1}, 2), std::domain_error);
}

TEST(Oracle, AgreesWithCriterionForSmallShapes) {
  for (int n = 2; n <= 6; ++n)
    for (int l2 = 1; 2 * l2 <= n; ++l2) {
      const Partition lambda{n - l2, l2};
      const auto rep = analyze(lambda, 3);
      if (!rep.reducible) continue;
      const auto gens = find_submodule_generators(lambda, *rep.mu, 3);
      EXPECT_EQ(gens.size(), 1u) << lambda.to_string();
      EXPECT_EQ(submodule_dimension(lambda, gens, 3), static_cast<int>(*rep.dim_D_mu)) << lambda.to_string();
    }
}

}  // namespace
