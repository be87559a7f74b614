#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "taumackey/characters.hpp"

namespace taumackey {

/// Verdicts of the definition of tau-simple reducibility.
struct DefinitionCheck {
  /// Every tensor product of two irreducibles is multiplicity-free.
  bool multiplicity_free = false;
  /// Every irreducible is tau-self-conjugate.
  bool self_conjugate = false;
  /// First (i, j, l) with m[i][j][l] > 1, as row indices.
  std::optional<std::array<std::size_t, 3>> tensor_witness;
  int witness_multiplicity = 0;
  /// First row whose tau-conjugate is another row.
  std::optional<std::size_t> row_witness;
};

DefinitionCheck check_definition(const CharacterTable& table, const GroupMap& tau);

struct MackeyCosetCheck {
  /// Absent when the G^2 scan exceeded the budget.
  std::optional<bool> holds;
  std::string skipped;
  std::uint64_t orbit_count = 0;
  std::uint64_t invariant_orbit_count = 0;
};

/// Every simultaneous-conjugation orbit on G^2 is fixed by componentwise tau.
MackeyCosetCheck check_mackey_cosets(const GroupTable& group, const ConjugacyData& classes, const GroupMap& tau,
                                     const Budget& budget = {});

struct MackeyWignerCheck {
  bool holds = false;
  BigInt sum_zeta_cubed;
  BigInt sum_v_squared;
};

/// Exact comparison of sum zeta_tau^3 with sum v^2.
MackeyWignerCheck check_mackey_wigner(const ConjugacyData& classes, const TwistedCounts& zeta);

struct SRVerdict {
  DefinitionCheck definition;
  MackeyCosetCheck mackey_cosets;
  MackeyWignerCheck mackey_wigner;
  /// All evaluated routes agree.
  bool consistent = false;
  /// Verdict when consistent.
  bool simply_reducible = false;
  /// The coset route was skipped for budget reasons.
  bool partially_verified = false;
};

/// Runs all three routes. Disagreement is reported through `consistent`
/// rather than thrown.
SRVerdict simply_reducible(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta,
                           const Budget& budget = {});

struct AmbivalenceCheck {
  bool sum_equality = false;
  bool classes_invariant = false;
  bool all_rows_tau_selfconj = false;
  bool all_equal = false;
  BigInt sum_zeta_squared;
  BigInt sum_v;
};

/// sum zeta^2 = sum v, every class tau-invariant, every row self-tau-conjugate.
AmbivalenceCheck tau_ambivalence_check(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta);

struct AbelianCheck {
  bool equality_at_3 = false;
  bool is_abelian_and_tau_identity = false;
  bool agrees = false;
  BigInt sum_zeta_fourth;
  BigInt sum_v_cubed;
};

AbelianCheck abelian_characterization(const GroupTable& group, const ConjugacyData& classes, const GroupMap& tau,
                                      const TwistedCounts& zeta);

/// Equality of sum zeta^(n+1) and sum v^n for n = 1..max_n; equality at n0
/// must imply equality below n0.
struct EqualityChain {
  std::vector<bool> equal;
  bool downward_closed = true;
};

EqualityChain equality_chain(const ConjugacyData& classes, const TwistedCounts& zeta, std::size_t max_n);

}  // namespace taumackey
