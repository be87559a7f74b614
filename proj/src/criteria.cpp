#include "taumackey/criteria.hpp"

namespace taumackey {

DefinitionCheck check_definition(const CharacterTable& table, const GroupMap& tau) {
  DefinitionCheck out;
  const auto m = tensor_multiplicities(table);
  out.multiplicity_free = true;
  for (std::size_t i = 0; i < m.k && out.multiplicity_free; ++i)
    for (std::size_t j = i; j < m.k && out.multiplicity_free; ++j)
      for (std::size_t l = 0; l < m.k; ++l)
        if (m(i, j, l) > 1) {
          out.multiplicity_free = false;
          out.tensor_witness = std::array<std::size_t, 3>{i, j, l};
          out.witness_multiplicity = m(i, j, l);
          break;
        }
  const auto partner = tau_conjugate_rows(table, tau);
  out.self_conjugate = true;
  for (std::size_t r = 0; r < partner.size(); ++r)
    if (partner[r] != r) {
      out.self_conjugate = false;
      out.row_witness = r;
      break;
    }
  return out;
}

MackeyCosetCheck check_mackey_cosets(const GroupTable& group, const ConjugacyData& classes, const GroupMap& tau,
                                     const Budget& budget) {
  MackeyCosetCheck out;
  const std::size_t pairs = group.order() * group.order();
  if (pairs > budget.max_pairs) {
    out.skipped = "skipped: G^2 scan needs " + std::to_string(pairs) + " pairs, budget " +
                  std::to_string(budget.max_pairs);
    return out;
  }
  const GammaScan scan = gamma_orbit_scan(group, classes, 2, tau, budget);
  out.orbit_count = scan.orbit_count;
  out.invariant_orbit_count = scan.tau_invariant_orbit_count;
  out.holds = scan.orbit_count == scan.tau_invariant_orbit_count;
  return out;
}

MackeyWignerCheck check_mackey_wigner(const ConjugacyData& classes, const TwistedCounts& zeta) {
  MackeyWignerCheck out;
  out.sum_zeta_cubed = sum_zeta_powers(zeta, 3);
  out.sum_v_squared = sum_centralizer_powers(classes, 2);
  out.holds = out.sum_zeta_cubed == out.sum_v_squared;
  return out;
}

SRVerdict simply_reducible(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta,
                           const Budget& budget) {
  SRVerdict out;
  out.definition = check_definition(table, tau);
  out.mackey_cosets = check_mackey_cosets(*table.group, table.classes, tau, budget);
  out.mackey_wigner = check_mackey_wigner(table.classes, zeta);
  const bool by_definition = out.definition.multiplicity_free && out.definition.self_conjugate;
  out.partially_verified = !out.mackey_cosets.holds.has_value();
  out.consistent = by_definition == out.mackey_wigner.holds &&
                   (out.partially_verified || *out.mackey_cosets.holds == by_definition);
  out.simply_reducible = out.consistent && by_definition;
  return out;
}

AmbivalenceCheck tau_ambivalence_check(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta) {
  AmbivalenceCheck out;
  out.sum_zeta_squared = sum_zeta_powers(zeta, 2);
  out.sum_v = sum_centralizer_powers(table.classes, 1);
  out.sum_equality = out.sum_zeta_squared == out.sum_v;
  out.classes_invariant = tau_invariant_class_count(table.classes, tau) == table.classes.class_count();
  const auto partner = tau_conjugate_rows(table, tau);
  out.all_rows_tau_selfconj = true;
  for (std::size_t r = 0; r < partner.size(); ++r) out.all_rows_tau_selfconj &= partner[r] == r;
  out.all_equal = out.sum_equality == out.classes_invariant && out.classes_invariant == out.all_rows_tau_selfconj;
  return out;
}

AbelianCheck abelian_characterization(const GroupTable& group, const ConjugacyData& classes, const GroupMap& tau,
                                      const TwistedCounts& zeta) {
  AbelianCheck out;
  out.sum_zeta_fourth = sum_zeta_powers(zeta, 4);
  out.sum_v_cubed = sum_centralizer_powers(classes, 3);
  out.equality_at_3 = out.sum_zeta_fourth == out.sum_v_cubed;
  bool abelian = true;
  for (ElementId x = 0; x < group.order() && abelian; ++x)
    for (ElementId s : group.generators())
      if (group.mul(x, s) != group.mul(s, x)) {
        abelian = false;
        break;
      }
  out.is_abelian_and_tau_identity = abelian && tau.is_identity();
  out.agrees = out.equality_at_3 == out.is_abelian_and_tau_identity;
  return out;
}

EqualityChain equality_chain(const ConjugacyData& classes, const TwistedCounts& zeta, std::size_t max_n) {
  EqualityChain out;
  for (std::size_t n = 1; n <= max_n; ++n)
    out.equal.push_back(sum_zeta_powers(zeta, n + 1) == sum_centralizer_powers(classes, n));
  for (std::size_t n = 1; n < out.equal.size(); ++n)
    if (out.equal[n] && !out.equal[n - 1]) out.downward_closed = false;
  return out;
}

}  // namespace taumackey
