#include <gtest/gtest.h>

#include <numeric>

#include "../support/oracle.hpp"
#include "taumackey/characters.hpp"
#include "taumackey/error.hpp"

using namespace taumackey;

namespace {

std::vector<GroupPtr> battery() {
  return {make_cyclic(6),    make_symmetric(3), make_symmetric(4), make_symmetric(5), make_alternating(4),
          make_dihedral(4),  make_dihedral(5),  make_quaternion8(), make_clifford(3), make_alternating(5)};
}

std::size_t row_of_degree(const CharacterTable& t, int d) {
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t.degrees[r] == d) return r;
  ADD_FAILURE() << "no row of degree " << d;
  return 0;
}

void expect_near(Complex a, Complex b, double tol = 1e-9) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

}  // namespace

TEST(Table, CyclicTwo) {
  const GroupPtr g = make_cyclic(2);
  const CharacterTable t = compute_character_table(g);
  ASSERT_EQ(t.size(), 2u);
  expect_near(t.value(0, 1), 1.0);
  expect_near(t.value(1, 1), -1.0);
}

TEST(Table, Trivial) {
  const CharacterTable t = compute_character_table(make_cyclic(1));
  ASSERT_EQ(t.size(), 1u);
  expect_near(t.value(0, kIdentity), 1.0);
}

TEST(Table, SymmetricThree) {
  const GroupPtr g = make_symmetric(3);
  const CharacterTable t = compute_character_table(g);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 2}));
  const std::size_t std_row = row_of_degree(t, 2);
  expect_near(t.value(std_row, kIdentity), 2.0);
  expect_near(t.value(std_row, g->require("(1 2)")), 0.0);
  expect_near(t.value(std_row, g->require("(1 2 3)")), -1.0);
  expect_near(t.value(0, g->require("(1 2)")), 1.0);
  expect_near(t.value(1, g->require("(1 2)")), -1.0);
}

TEST(Table, Quaternion) {
  const GroupPtr g = make_quaternion8();
  const CharacterTable t = compute_character_table(g);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 1, 1, 2}));
  expect_near(t.value(4, g->require("-1")), -2.0);
  for (const char* l : {"i", "j", "k"}) expect_near(t.value(4, g->require(l)), 0.0);
}

TEST(Table, QualityGatesOnBattery) {
  for (const GroupPtr& g : battery()) {
    const CharacterTable t = compute_character_table(g);
    const std::size_t k = t.size();
    EXPECT_EQ(k, oracle::classes(*g).size());
    EXPECT_LT(t.quality.orthogonality_residual, 1e-8 * static_cast<double>(k)) << g->family_tag();
    long long sum_sq = 0;
    for (int d : t.degrees) {
      sum_sq += static_cast<long long>(d) * d;
      EXPECT_EQ(g->order() % static_cast<std::size_t>(d), 0u);
    }
    EXPECT_EQ(sum_sq, static_cast<long long>(g->order()));
    // row orthogonality by direct summation over elements
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Complex s = 0;
        for (ElementId x = 0; x < g->order(); ++x) s += t.value(i, x) * std::conj(t.value(j, x));
        expect_near(s / static_cast<double>(g->order()), i == j ? 1.0 : 0.0, 1e-8);
      }
    // column orthogonality against brute-force centralizers
    for (std::size_t c = 0; c < k; ++c) {
      const ElementId x = t.classes.representatives[c];
      Complex s = 0;
      for (std::size_t r = 0; r < k; ++r) s += t.value(r, x) * std::conj(t.value(r, x));
      expect_near(s, static_cast<double>(oracle::centralizer(*g, x)), 1e-8);
    }
  }
}

TEST(Table, SeedIndependentRows) {
  const GroupPtr g = make_symmetric(5);
  const CharacterTable a = compute_character_table(g, {}, 1), b = compute_character_table(g, {}, 99);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) expect_near(a.rows[r][c], b.rows[r][c], 1e-9);
}

TEST(Table, ClassBudget) {
  Budget b;
  b.max_classes = 3;
  try {
    compute_character_table(make_symmetric(4), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(ClassFunctions, MismatchedGroups) {
  const CharacterTable a = compute_character_table(make_symmetric(3));
  const CharacterTable b = compute_character_table(make_symmetric(3));
  EXPECT_THROW(inner_product(a, a.rows[0], b.rows[0]), Error);
  EXPECT_THROW((void)(a.rows[0] + b.rows[0]), Error);
}

TEST(Indicators, Quaternion) {
  const GroupPtr g = make_quaternion8();
  const CharacterTable t = compute_character_table(g);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(fs_indicator(t, r).value, 1);
  EXPECT_EQ(fs_indicator(t, 4).value, -1);
  const auto tw = twisted_fs_indicators(t, tau_inverse(g));
  EXPECT_EQ(tw[4].value, -1);
}

TEST(Indicators, CyclicThree) {
  const GroupPtr g = make_cyclic(3);
  const CharacterTable t = compute_character_table(g);
  EXPECT_EQ(fs_indicator(t, 0).value, 1);
  EXPECT_EQ(fs_indicator(t, 1).value, 0);
  EXPECT_EQ(fs_indicator(t, 2).value, 0);
  // with tau = id every row is self-tau-conjugate and real-type
  for (const auto& ind : twisted_fs_indicators(t, tau_identity(g))) EXPECT_EQ(ind.value, 1);
}

TEST(Indicators, ValuesAndExpansionOnBattery) {
  for (const GroupPtr& g : battery()) {
    const CharacterTable t = compute_character_table(g);
    std::vector<GroupMap> taus{tau_inverse(g)};
    if (g->is_abelian()) taus.push_back(tau_identity(g));
    if (g->clifford_rank() > 0) taus.push_back(tau_clifford(g));
    for (const GroupMap& tau : taus) {
      const TwistedCounts z = zeta_tau(*g, tau);
      const auto ind = twisted_fs_indicators(t, tau);
      const auto partner = tau_conjugate_rows(t, tau);
      for (std::size_t r = 0; r < t.size(); ++r) {
        EXPECT_TRUE(ind[r].value >= -1 && ind[r].value <= 1);
        EXPECT_LT(ind[r].residual, 1e-6);
        EXPECT_EQ(ind[r].value != 0, partner[r] == r);
      }
      EXPECT_LT(zeta_expansion_check(t, tau, z), 1e-6);
      const SelfConjugateCensus census = self_conjugate_census(t, tau, z);
      EXPECT_EQ(census.count, census.invariant_classes);
      EXPECT_EQ(census.count, census.zeta_square_average);
      EXPECT_EQ(oracle::sum_zeta_power(*g, tau, 2), oracle::Big(census.count) * g->order());
    }
  }
}

TEST(Census, KnownCounts) {
  const GroupPtr q = make_quaternion8();
  const CharacterTable tq = compute_character_table(q);
  const GroupMap qi = tau_inverse(q);
  EXPECT_EQ(self_conjugate_census(tq, qi, zeta_tau(*q, qi)).count, 5u);
  const GroupPtr z3 = make_cyclic(3);
  const CharacterTable tz = compute_character_table(z3);
  const GroupMap zi = tau_inverse(z3);
  EXPECT_EQ(self_conjugate_census(tz, zi, zeta_tau(*z3, zi)).count, 1u);
}

TEST(Tensor, MatchesDirectSums) {
  for (const GroupPtr& g : {make_symmetric(3), make_quaternion8(), make_alternating(5)}) {
    const CharacterTable t = compute_character_table(g);
    const TensorMultiplicities m = tensor_multiplicities(t);
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          Complex s = 0;
          for (ElementId x = 0; x < g->order(); ++x)
            s += t.value(i, x) * t.value(j, x) * std::conj(t.value(l, x));
          EXPECT_EQ(m(i, j, l), std::lround((s / static_cast<double>(g->order())).real()));
        }
  }
}

TEST(Induction, AlternatingToSymmetricThree) {
  const GroupPtr g = make_symmetric(3);
  const CharacterTable tg = compute_character_table(g);
  const Subgroup a3 = generated_subgroup(g, {g->require("(1 2 3)")});
  const CharacterTable ta = compute_character_table(a3.group);
  double residual = 1.0;
  const ClassFunction ind = induce_character(tg, ta, a3.elements, ta.rows[1], &residual);
  EXPECT_LT(residual, 1e-9);
  const auto mult = decompose(tg, ind);
  EXPECT_EQ(mult, (std::vector<int>{0, 0, 1}));
  const ClassFunction res = restrict_character(tg, ta, a3.elements, tg.rows[2]);
  EXPECT_EQ(decompose(ta, res), (std::vector<int>{0, 1, 1}));
}

TEST(Induction, ReciprocityOnCyclicSubgroups) {
  for (const GroupPtr& g : {make_symmetric(4), make_quaternion8(), make_dihedral(5)}) {
    const CharacterTable tg = compute_character_table(g);
    for (ElementId x = 1; x < g->order(); ++x) {
      const Subgroup c = generated_subgroup(g, {x});
      const CharacterTable tc = compute_character_table(c.group);
      for (std::size_t r = 0; r < tc.size(); ++r) {
        double residual = 1.0;
        const ClassFunction ind = induce_character(tg, tc, c.elements, tc.rows[r], &residual);
        EXPECT_LT(residual, 1e-9);
        expect_near(ind[0], static_cast<double>(g->order() / c.order()), 1e-9);
      }
    }
  }
}

TEST(CliffordTheory, CyclicThree) {
  const GroupPtr z3 = make_cyclic(3);
  const CliffordTheoryReport inv = clifford_theory_check(tau_inverse(z3));
  EXPECT_EQ(inv.extension->order(), 6u);
  EXPECT_TRUE(inv.extension->is_abelian());
  for (const auto& c : inv.cases) EXPECT_EQ(c.which, 2);

  const CliffordTheoryReport id = clifford_theory_check(tau_identity(z3));
  EXPECT_EQ(id.extension->order(), 6u);
  EXPECT_FALSE(id.extension->is_abelian());
  ASSERT_EQ(id.cases.size(), 3u);
  EXPECT_EQ(id.cases[0].which, 2);
  EXPECT_EQ(id.cases[1].which, 1);
  EXPECT_EQ(id.cases[2].which, 1);
  EXPECT_EQ(id.cases[1].h_conjugate, 2u);
}

TEST(CliffordTheory, SmallNormalSubgroups) {
  for (const GroupPtr& n : {make_cyclic(3), make_cyclic(4),
                            make_direct_product(make_cyclic(2), make_cyclic(2)), make_symmetric(3)}) {
    const CliffordTheoryReport r = clifford_theory_check(tau_inverse(n));
    EXPECT_EQ(r.cases.size(), compute_character_table(n).size());
    EXPECT_LT(r.max_residual, 1e-6);
    std::size_t case1 = 0;
    for (const auto& c : r.cases) {
      EXPECT_TRUE(c.which == 1 || c.which == 2);
      case1 += c.which == 1 ? 1 : 0;
    }
    const std::size_t case2 = r.cases.size() - case1;
    EXPECT_EQ(r.n_orbits, case2 + case1 / 2);
    EXPECT_EQ(r.g_orbits, r.n_orbits);
    EXPECT_EQ(compute_character_table(r.extension).size(), 2 * case2 + case1 / 2);
  }
}
