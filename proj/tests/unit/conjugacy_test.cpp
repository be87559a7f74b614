#include <gtest/gtest.h>

#include <random>

#include "../support/oracle.hpp"
#include "taumackey/conjugacy.hpp"
#include "taumackey/error.hpp"

using namespace taumackey;

namespace {

std::vector<std::pair<GroupPtr, GroupMap>> battery_pairs() {
  std::vector<std::pair<GroupPtr, GroupMap>> out;
  for (const GroupPtr& g : {make_cyclic(6), make_symmetric(3), make_symmetric(4), make_alternating(4),
                            make_dihedral(4), make_dihedral(5), make_quaternion8(), make_clifford(3)}) {
    out.emplace_back(g, tau_inverse(g));
    if (g->is_abelian()) out.emplace_back(g, tau_identity(g));
  }
  const GroupPtr c3 = make_clifford(3);
  out.emplace_back(c3, tau_clifford(c3));
  const GroupPtr s3 = make_symmetric(3);
  out.emplace_back(s3, tau_inner(s3, s3->require("(1 2)")));
  return out;
}

std::multiset<std::pair<std::size_t, std::uint64_t>> size_centralizer_profile(const ConjugacyData& cd) {
  std::multiset<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t c = 0; c < cd.class_count(); ++c)
    out.insert({cd.class_size(c), cd.centralizer_order[cd.representatives[c]]});
  return out;
}

}  // namespace

TEST(Classes, SymmetricThree) {
  const GroupPtr g = make_symmetric(3);
  const ConjugacyData cd = conjugacy_classes(*g);
  EXPECT_EQ(cd.class_count(), 3u);
  EXPECT_EQ(size_centralizer_profile(cd),
            (std::multiset<std::pair<std::size_t, std::uint64_t>>{{1, 6}, {3, 2}, {2, 3}}));
  EXPECT_EQ(cd.class_of[kIdentity], 0u);
}

TEST(Classes, Quaternion) {
  const ConjugacyData cd = conjugacy_classes(*make_quaternion8());
  std::multiset<std::size_t> sizes;
  for (std::size_t c = 0; c < cd.class_count(); ++c) sizes.insert(cd.class_size(c));
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Classes, MatchBruteForce) {
  for (const GroupPtr& g : {make_symmetric(5), make_alternating(5), make_dihedral(6), make_clifford(4)}) {
    const ConjugacyData cd = conjugacy_classes(*g);
    const auto brute = oracle::classes(*g);
    ASSERT_EQ(cd.class_count(), brute.size()) << g->family_tag();
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
      const std::set<ElementId> got(cd.classes[c].begin(), cd.classes[c].end());
      EXPECT_NE(std::find(brute.begin(), brute.end(), got), brute.end());
    }
    for (ElementId x = 0; x < g->order(); ++x) EXPECT_EQ(cd.centralizer_order[x], oracle::centralizer(*g, x));
  }
}

TEST(Zeta, SymmetricThreeInverse) {
  const GroupPtr g = make_symmetric(3);
  const TwistedCounts z = zeta_tau(*g, tau_inverse(g));
  EXPECT_EQ(z.zeta[kIdentity], 4u);
  EXPECT_EQ(z.zeta[g->require("(1 2)")], 0u);
  EXPECT_EQ(z.zeta[g->require("(1 2 3)")], 1u);
}

TEST(Zeta, Quaternion) {
  const GroupPtr g = make_quaternion8();
  const TwistedCounts z = zeta_tau(*g, tau_inverse(g));
  EXPECT_EQ(z.zeta[g->require("1")], 2u);
  EXPECT_EQ(z.zeta[g->require("-1")], 6u);
  for (const char* l : {"i", "-i", "j", "-j", "k", "-k"}) EXPECT_EQ(z.zeta[g->require(l)], 0u);
}

TEST(Zeta, PropertiesOnBattery) {
  for (const auto& [g, tau] : battery_pairs()) {
    const TwistedCounts z = zeta_tau(*g, tau);
    std::uint64_t total = 0;
    for (ElementId x = 0; x < g->order(); ++x) {
      ASSERT_EQ(z.zeta[x], oracle::zeta(*g, tau, x)) << g->family_tag();
      total += z.zeta[x];
      // zeta is a class function
      EXPECT_EQ(z.zeta[x], z.zeta[g->conj(g->generators().front(), x)]);
    }
    EXPECT_EQ(total, g->order());
  }
}

TEST(Zeta, RejectsNonInvolutory) {
  const GroupPtr g = make_cyclic(4);
  EXPECT_THROW(zeta_tau(*g, automorphism_identity(g)), Error);
}

TEST(PowerSums, KnownValues) {
  const GroupPtr s3 = make_symmetric(3);
  const ConjugacyData cd = conjugacy_classes(*s3);
  const GroupMap inv = tau_inverse(s3);
  const PowerSumReport r = power_sum_report(*s3, cd, zeta_tau(*s3, inv), inv, 2);
  EXPECT_EQ(r.sum_v_n, 66);
  EXPECT_EQ(r.sum_zeta_n1, 66);
  EXPECT_TRUE(r.equal);
  ASSERT_TRUE(r.verified_against_orbits.has_value());
  EXPECT_TRUE(*r.verified_against_orbits);

  const GroupPtr q = make_quaternion8();
  const GroupMap qi = tau_inverse(q);
  const PowerSumReport rq = power_sum_report(*q, conjugacy_classes(*q), zeta_tau(*q, qi), qi, 2);
  EXPECT_EQ(rq.sum_v_n, 224);
  EXPECT_EQ(rq.sum_zeta_n1, 224);

  const GroupPtr z5 = make_cyclic(5);
  const GroupMap id = tau_identity(z5);
  const PowerSumReport r5 = power_sum_report(*z5, conjugacy_classes(*z5), zeta_tau(*z5, id), id, 3);
  EXPECT_EQ(r5.sum_v_n, 625);
  EXPECT_EQ(r5.sum_zeta_n1, 625);
}

TEST(PowerSums, MatchBruteForceAndInequality) {
  for (const auto& [g, tau] : battery_pairs()) {
    const ConjugacyData cd = conjugacy_classes(*g);
    const TwistedCounts z = zeta_tau(*g, tau);
    for (unsigned n = 1; n <= 4; ++n) {
      const BigInt lhs = sum_centralizer_powers(cd, n), rhs = sum_zeta_powers(z, n + 1);
      EXPECT_EQ(lhs, oracle::sum_centralizer_power(*g, n));
      EXPECT_EQ(rhs, oracle::sum_zeta_power(*g, tau, n + 1));
      EXPECT_GE(lhs, rhs) << g->family_tag() << " n=" << n;
    }
  }
}

TEST(GammaScan, MatchesBruteForce) {
  for (const auto& [g, tau] : battery_pairs()) {
    const GammaScan s = gamma_orbit_scan(*g, conjugacy_classes(*g), 2, tau);
    const oracle::PairOrbits b = oracle::pair_orbits(*g, tau);
    EXPECT_EQ(s.orbit_count, b.orbits) << g->family_tag();
    EXPECT_EQ(s.tau_invariant_orbit_count, b.invariant) << g->family_tag();
  }
}

TEST(GammaScan, Budget) {
  const GroupPtr g = make_symmetric(5);
  Budget tiny;
  tiny.max_pairs = 100;
  try {
    gamma_orbit_scan(*g, conjugacy_classes(*g), 2, tau_inverse(g), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(TwistedBurnside, SwapOnTwoPoints) {
  const GroupPtr z2 = make_cyclic(2);
  const GroupAction a = GroupAction::from_generator_images(z2, 2, {{z2->require("a"), {1, 0}}});
  const TwistedOrbitCount c = twisted_orbit_count(a, {1, 0});
  EXPECT_EQ(c.orbit_count, 1u);
  EXPECT_EQ(c.averaged, 1u);
  EXPECT_EQ(c.enumerated, 1u);
}

TEST(TwistedBurnside, RejectsNonCommuting) {
  const GroupPtr z2 = make_cyclic(2);
  const GroupAction a = GroupAction::from_generator_images(z2, 3, {{z2->require("a"), {1, 0, 2}}});
  try {
    twisted_orbit_count(a, {0, 2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
  }
}

// Regular actions with alpha = right multiplication, which commutes with the
// left regular action; orbit counts from the oracle's explicit labelling.
TEST(TwistedBurnside, RandomRegularActions) {
  std::mt19937_64 rng(7);
  for (const GroupPtr& g : {make_symmetric(3), make_quaternion8(), make_dihedral(5), make_alternating(4)}) {
    std::map<ElementId, std::vector<std::uint32_t>> images;
    for (ElementId s : g->generators()) {
      std::vector<std::uint32_t> p(g->order());
      for (ElementId x = 0; x < g->order(); ++x) p[x] = g->mul(s, x);
      images[s] = p;
    }
    const GroupAction act = GroupAction::from_generator_images(g, g->order(), images);
    for (int trial = 0; trial < 3; ++trial) {
      const auto r = static_cast<ElementId>(rng() % g->order());
      std::vector<std::uint32_t> alpha(g->order());
      for (ElementId x = 0; x < g->order(); ++x) alpha[x] = g->mul(x, r);
      const TwistedOrbitCount c = twisted_orbit_count(act, alpha);
      EXPECT_EQ(c.orbit_count, 1u);
      EXPECT_EQ(c.enumerated, 1u);
      EXPECT_EQ(c.averaged, c.enumerated);
    }
  }
}
