#include <gtest/gtest.h>

#include "taumackey/error.hpp"
#include "taumackey/morphisms.hpp"

using namespace taumackey;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::InvalidSpec;
}

bool is_anti(const GroupTable& g, const GroupMap& m) {
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y)
      if (m(g.mul(x, y)) != g.mul(m(y), m(x))) return false;
  return true;
}

bool is_involution(const GroupTable& g, const GroupMap& m) {
  for (ElementId x = 0; x < g.order(); ++x)
    if (m(m(x)) != x) return false;
  return true;
}

}  // namespace

TEST(Tau, InverseIsInvolutoryAnti) {
  for (const GroupPtr& g : {make_symmetric(4), make_quaternion8(), make_clifford(3)}) {
    const GroupMap t = tau_inverse(g);
    EXPECT_EQ(t.kind(), MapKind::AntiAutomorphism);
    EXPECT_TRUE(t.involutory());
    EXPECT_TRUE(is_anti(*g, t));
    EXPECT_TRUE(is_involution(*g, t));
  }
}

TEST(Tau, IdentityOnlyForAbelian) {
  const GroupMap t = tau_identity(make_cyclic(5));
  EXPECT_TRUE(t.involutory());
  EXPECT_TRUE(is_anti(t.group(), t));
  EXPECT_NE(kind_of([] { tau_identity(make_symmetric(3)).require(MapKind::AntiAutomorphism, true); }),
            ErrorKind::InvalidSpec);
}

TEST(Tau, InnerOnS3) {
  const GroupPtr g = make_symmetric(3);
  const ElementId t12 = g->require("(1 2)");
  const GroupMap t = tau_inner(g, t12);
  EXPECT_TRUE(is_anti(*g, t));
  EXPECT_TRUE(is_involution(*g, t));
  for (ElementId x = 0; x < g->order(); ++x) EXPECT_EQ(t(x), g->mul(g->mul(t12, g->inv(x)), g->inv(t12)));
  const ElementId r = g->require("(1 2 3)");
  EXPECT_EQ(t(r), r);
  const GroupMap trivial = tau_inner(g, kIdentity);
  for (ElementId x = 0; x < g->order(); ++x) EXPECT_EQ(trivial(x), g->inv(x));
  // a 3-cycle squares to a non-central element
  EXPECT_EQ(kind_of([&] { tau_inner(g, g->require("(1 2 3)")); }), ErrorKind::NotInvolutory);
}

TEST(Tau, CliffordTwistAtRankThree) {
  const GroupPtr g = make_clifford(3);
  const GroupMap t = tau_clifford(g);
  EXPECT_TRUE(is_anti(*g, t));
  EXPECT_TRUE(is_involution(*g, t));
  const auto& model = g->clifford_model();
  for (ElementId x = 0; x < g->order(); ++x) {
    const int a = std::popcount(model[x].subset);
    const bool flip = (a * (a + 1) / 2) % 2 == 1;
    EXPECT_EQ(model[t(x)].subset, model[x].subset);
    EXPECT_EQ(model[t(x)].negative, model[x].negative != flip);
  }
  const GroupMap t2 = tau_clifford(make_clifford(2));
  for (ElementId x = 0; x < 8; ++x) EXPECT_EQ(t2(x), t2.group().inv(x));
  EXPECT_EQ(kind_of([] { tau_clifford(make_cyclic(4)); }), ErrorKind::NotCliffordGroup);
}

TEST(Tau, GeneratorImages) {
  const GroupPtr g = make_symmetric(3);
  const ElementId s = g->require("(1 2)"), r = g->require("(1 2 3)");
  const GroupMap t = tau_from_generator_images(g, {{s, s}, {r, g->inv(r)}});
  for (ElementId x = 0; x < 6; ++x) EXPECT_EQ(t(x), g->inv(x));
  EXPECT_NE(kind_of([&] { tau_from_generator_images(g, {{s, r}, {r, s}}); }), ErrorKind::InvalidSpec);
}

TEST(Automorphisms, ConjugationAndSwap) {
  const GroupPtr g = make_symmetric(4);
  const GroupMap c = automorphism_conjugation(g, g->require("(1 2)(3 4)"));
  EXPECT_EQ(c.kind(), MapKind::Automorphism);
  EXPECT_TRUE(c.involutory());
  const GroupPtr p = make_direct_power(make_symmetric(3), 2);
  const GroupMap sw = automorphism_swap_factors(p);
  EXPECT_TRUE(sw.involutory());
  for (ElementId x = 0; x < p->order(); ++x) EXPECT_EQ(sw(x), (x % 6) * 6 + x / 6);
}

TEST(Maps, CompositionParity) {
  const GroupPtr g = make_symmetric(3);
  const GroupMap inv = tau_inverse(g);
  const GroupMap id = compose(inv, inv);
  EXPECT_EQ(id.kind(), MapKind::Automorphism);
  EXPECT_TRUE(id.is_identity());
}

TEST(Maps, ValidateRejects) {
  const GroupPtr g = make_cyclic(4);
  EXPECT_EQ(kind_of([&] { validate(g, {0, 0, 1, 2}, MapKind::Automorphism); }), ErrorKind::NotBijective);
  EXPECT_EQ(kind_of([&] { validate(g, {0, 2, 1, 3}, MapKind::Automorphism); }), ErrorKind::HomomorphismViolation);
}

TEST(Maps, ProductAndPower) {
  const GroupPtr a = make_symmetric(3), b = make_cyclic(3);
  const GroupPtr p = make_direct_product(a, b);
  const GroupMap m = product_map(tau_inverse(a), tau_inverse(b), p);
  for (ElementId x = 0; x < p->order(); ++x) EXPECT_EQ(m(x), p->inv(x));
  const GroupPtr pw = make_direct_power(a, 3);
  const GroupMap e = extend_to_power(tau_inverse(a), pw, 3);
  for (ElementId x = 0; x < pw->order(); ++x) EXPECT_EQ(e(x), pw->inv(x));
}
