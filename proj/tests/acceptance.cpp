// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "hecke/hecke.hpp"
#include "test_support.hpp"

using namespace hecke;

namespace {

using L = LaurentScalar;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

/// Wall-clock budgets in seconds, pinned per criterion.
constexpr double kBudgetFast = 1.0;
constexpr double kBudgetHooks = 10.0;
constexpr double kBudgetOracleExample = 5.0;
constexpr double kBudgetRelations = 60.0;
constexpr double kBudgetSweep = 600.0;

Outcome ac01_generator_matrix() {
  const auto m = generator_matrix(Partition{3, 2}, 1, GenericRing{});
  const std::vector<std::vector<std::string>> expected{
      {"-1", "-q^2", "0", "0", "q^4"},
      {"0", "q", "0", "0", "0"},
      {"0", "0", "-1", "-q^2", "-q^3"},
      {"0", "0", "0", "q", "0"},
      {"0", "0", "0", "0", "q"},
  };
  return {m.to_strings() == expected, "5x5 h_1 on S^(3,2)"};
}

Outcome ac02_garnir_relation() {
  const auto z = Tableau::parse("1,2,3,10,4,12/6,8,5/9,11,7/13");
  const auto rel = garnir_relation(z, GarnirPair{1, 1}, GenericRing{});
  const std::vector<std::pair<std::string, L>> expected{
      {"1,2,3,10,4,12/6,8,5/9,11,7/13", L(1)},         {"1,2,3,10,4,12/6,5,8/9,11,7/13", -L::q(1)},
      {"1,2,5,10,4,12/6,3,8/9,11,7/13", L::q(2)},      {"1,2,3,10,4,12/6,5,11/9,8,7/13", L::q(2)},
      {"1,2,5,10,4,12/6,3,11/9,8,7/13", -L::q(3)},     {"1,2,8,10,4,12/6,3,11/9,5,7/13", L::q(4)},
  };
  bool ok = rel.terms().size() == expected.size();
  for (const auto& [text, coeff] : expected) {
    const auto got = rel.coefficient(Tableau::parse(text));
    ok = ok && got && *got == coeff;
  }
  const SpechtModule<GenericRing> module(z.shape(), GenericRing{});
  ok = ok && module.straighten_sparse(rel).empty();
  return {ok, "six reshuffles with 1, -q, q^2, q^2, -q^3, q^4; relation straightens to 0"};
}

Outcome ac03_garnir_elements() {
  const Partition shape{6, 3, 3, 1};
  const bool ok = garnir_element(shape, 6).to_string() == "q^4-q^3h_7+q^2h_6h_7+q^2h_8h_7-qh_6h_8h_7+h_7h_6h_8h_7" &&
                  garnir_element(shape, 8).to_string() == "q^3-q^2h_10+qh_9h_10-h_8h_9h_10" &&
                  garnir_element(shape, 11).to_string() == "q-h_11";
  return {ok, "G_6, G_8, G_11 of (6,3,3,1), scaled by q^(max length)"};
}

Outcome ac04_relations() {
  int shapes = 0, checks = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      ++shapes;
      const SpechtModule<GenericRing> module(shape, GenericRing{});
      // Matrix identities, independently of the per-vector checks in the library.
      const auto q = L::q();
      const int d = module.dimension();
      const auto id = Matrix<L>::identity(d, L(0), L(1));
      for (int i = 1; i < n; ++i) {
        const auto& hi = module.generator_matrix(i);
        ++checks;
        if (!(mat_mul(hi, hi) == (q - 1) * hi + q * id)) return {false, "quadratic fails for " + shape.to_string()};
        for (int j = i + 1; j < n; ++j) {
          const auto& hj = module.generator_matrix(j);
          ++checks;
          if (j == i + 1) {
            if (!(mat_mul(mat_mul(hi, hj), hi) == mat_mul(mat_mul(hj, hi), hj)))
              return {false, "braid fails for " + shape.to_string()};
          } else if (!(mat_mul(hi, hj) == mat_mul(hj, hi))) {
            return {false, "commutation fails for " + shape.to_string()};
          }
        }
      }
      if (!verify_annihilators(shape, GenericRing{})) return {false, "annihilators fail for " + shape.to_string()};
    }
  return {true, std::to_string(shapes) + " shapes, " + std::to_string(checks) + " matrix identities, annihilators"};
}

Outcome ac05_table() {
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
    if (rep.reducible != row.mu.has_value() || rep.mu != row.mu)
      return {false, "mismatch at " + row.lambda.to_string() + " p=" + std::to_string(row.p)};
  }
  return {true, "six rows"};
}

Outcome ac06_dimension() {
  const std::vector<std::pair<Partition, std::uint64_t>> hooks{{{6, 5}, 132}, {{9, 2}, 44}, {{7, 4}, 165}, {{10, 1}, 10}};
  for (const auto& [shape, value] : hooks) {
    const auto h = hook_count(shape);
    if (h != value || oracles::brute_force_standard_count(shape) != h)
      return {false, "hook count mismatch at " + shape.to_string()};
  }
  const auto d = dimension_D(Partition{6, 5}, 3);
  return {d == 1, "132 + 44 - 165 - 10 = " + std::to_string(d)};
}

Outcome ac07_oracle_example() {
  const RootModule module(Partition{3, 2}, CyclotomicRing(3));
  const auto gens = find_submodule_generators(module, Partition{4, 1});
  if (gens.size() != 1) return {false, "kernel dimension " + std::to_string(gens.size())};
  const auto& v = gens[0].coords;
  const CyclotomicScalar one(3, Rational(1));
  for (int k = 0; k < module.dimension(); ++k) {
    const auto t = module.basis()[k].to_string();
    const bool on = t == "1,3,5/2,4" || t == "1,3,4/2,5";
    if (on ? !(v(k, 0) == one) : !v(k, 0).is_zero()) return {false, "unexpected coordinate at " + t};
  }
  const int sub = submodule_dimension(module, gens);
  const auto quotient = module.dimension() - sub;
  const bool ok = sub == 4 && quotient == 1 && dimension_D(Partition{3, 2}, 3) == 1;
  return {ok, "kernel 1, submodule " + std::to_string(sub) + ", quotient " + std::to_string(quotient)};
}

Outcome ac08_p_root_examples() {
  for (const char* good : {"1,2,3,4,6,8,10/5,7,9,11", "1,3,4,5,6,7,11/2,8,9,10", "1,2,3,4,5,9,10/6,7,8,11"})
    if (!is_p_root_standard(Tableau::parse(good), 3)) return {false, std::string(good) + " rejected"};
  for (const char* bad : {"1,3,5,6,7,8,9/2,4,10,11", "1,3,4,5,6,7,10/2,8,9,11", "1,2,3,4,5,8,10/6,7,9,11"})
    if (is_p_root_standard(Tableau::parse(bad), 3)) return {false, std::string(bad) + " accepted"};
  return {true, "three accepted, three rejected for (7,4), p=3"};
}

Outcome ac09_count_equals_dimension() {
  int cases = 0;
  for (int n = 1; n <= 10; ++n)
    for (int l2 = 0; 2 * l2 <= n; ++l2)
      for (int p : {3, 5, 7}) {
        const Partition lambda{n - l2, l2};
        ++cases;
        const auto count = enumerate_p_root_standard(lambda, p).size();
        if (count != dimension_D(lambda, p))
          return {false, lambda.to_string() + " p=" + std::to_string(p) + ": count " + std::to_string(count)};
      }
  return {true, std::to_string(cases) + " (lambda, p) pairs"};
}

Outcome ac10_oracle_sweep() {
  int cases = 0;
  for (int n = 1; n <= 8; ++n)
    for (int l2 = 0; 2 * l2 <= n; ++l2)
      for (int p : {3, 5}) {
        const Partition lambda{n - l2, l2};
        const auto rep = analyze(lambda, p);
        const RootModule module(lambda, CyclotomicRing(p));
        ++cases;
        const std::string where = lambda.to_string() + " p=" + std::to_string(p);
        if (rep.reducible) {
          const auto gens = find_submodule_generators(module, *rep.mu);
          if (gens.empty()) return {false, where + ": no kernel for predicted mu"};
          const auto sub = submodule_dimension(module, gens);
          if (static_cast<std::uint64_t>(sub) != *rep.dim_D_mu || *rep.dim_D_mu + rep.dim_D_lambda != rep.dim_S)
            return {false, where + ": dimensions do not add up"};
        } else {
          // No two-row p-regular mu other than lambda gives a submodule.
          for (int m2 = 0; 2 * m2 <= n; ++m2) {
            const Partition mu{n - m2, m2};
            if (mu == lambda || !is_p_regular(mu, p)) continue;
            if (!find_submodule_generators(module, mu).empty()) return {false, where + ": kernel for " + mu.to_string()};
          }
        }
      }
  return {true, std::to_string(cases) + " (lambda, p) pairs"};
}

Outcome ac11_specialization() {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shape = oracles::random_partition(rng, 2, 6);
    const int i = std::uniform_int_distribution<int>(1, shape.size() - 1)(rng);
    const int p = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 5;
    const auto generic = generator_matrix(shape, i, GenericRing{});
    const auto native = generator_matrix(shape, i, CyclotomicRing(p));
    if (!(generic.map([p](const L& x) { return specialize(x, p); }, CyclotomicScalar(p)) == native))
      return {false, shape.to_string() + " h_" + std::to_string(i) + " p=" + std::to_string(p)};
  }
  return {true, "20 random (shape, i, p)"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC01", "generator matrix of S^(3,2)", kBudgetFast, ac01_generator_matrix},
      {"AC02", "Garnir relation expansion", kBudgetFast, ac02_garnir_relation},
      {"AC03", "rendered Garnir elements", kBudgetFast, ac03_garnir_elements},
      {"AC04", "defining relations and annihilators, n <= 6", kBudgetRelations, ac04_relations},
      {"AC05", "two-row reducibility table", kBudgetFast, ac05_table},
      {"AC06", "dim D^(6,5) at p=3", kBudgetHooks, ac06_dimension},
      {"AC07", "submodule of S^(3,2) at p=3", kBudgetOracleExample, ac07_oracle_example},
      {"AC08", "p-root standard examples", kBudgetFast, ac08_p_root_examples},
      {"AC09", "p-root standard count = dim D, n <= 10", kBudgetSweep, ac09_count_equals_dimension},
      {"AC10", "annihilator-kernel oracle, n <= 8", kBudgetSweep, ac10_oracle_sweep},
      {"AC11", "specialization coherence", kBudgetSweep, ac11_specialization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds <= c.budget;
    const bool passed = outcome.passed && in_time;
    failures += !passed;
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << seconds << " s, budget "
              << c.budget << " s): " << outcome.detail << (in_time ? "" : " [over budget]") << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
