#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taumackey/characters.hpp"

namespace taumackey {

/// The left cosets X = G/K with the action g . xK = gxK. Point 0 is K.
struct CosetSpace {
  GroupPtr group;
  Subgroup subgroup;
  /// Coset index of each element.
  std::vector<std::uint32_t> point_of;
  /// Least element of each coset.
  std::vector<ElementId> representative;

  std::size_t size() const { return representative.size(); }
  std::uint32_t act(ElementId g, std::uint32_t x) const { return point_of[group->mul(g, representative[x])]; }
};

/// Errors: NotASubgroup (through make_subgroup), GroupMismatch.
CosetSpace build_coset_space(const Subgroup& subgroup);
/// The permutation character of G on X.
ClassFunction permutation_character(const CosetSpace& space, const CharacterTable& table);

struct OrbitAnalysis {
  /// Orbits of pi^tau x pi on X x X, pi^tau(g) = pi(tau(g^-1)).
  std::size_t orbit_count = 0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t hom_sym_dim = 0;
  std::size_t hom_skew_dim = 0;
  /// Least element of each double coset tau(K) s K.
  std::vector<ElementId> coset_reps;
  /// tau(s) lies in tau(K) s K.
  std::vector<bool> rep_invariant;
  /// Orbit count matches the double cosets and m1 matches the invariant ones.
  bool consistent = false;
};

/// Throws BudgetExceeded when |X|^2 exceeds the pair budget.
OrbitAnalysis orbit_analysis(const CosetSpace& space, const GroupMap& tau, const Budget& budget = {});

struct GelfandReport {
  OrbitAnalysis orbits;
  std::vector<int> multiplicities;
  std::vector<std::size_t> constituents;
  /// C_tau on each constituent.
  std::vector<int> constituent_indicators;
  bool gelfand_pair = false;
  /// <chi, chi> of the permutation character.
  std::size_t rank = 0;
  /// Double cosets K\G/K.
  std::size_t k_double_cosets = 0;
  bool tau_k_invariant = false;
  /// The permutation character is fixed by tau.
  bool hypothesis = false;
  bool cond_a = false, cond_b = false, cond_c = false, cond_d = false;
  bool weakly_symmetric = false;
  std::optional<ElementId> weak_witness;
  /// Orbit, double-coset and character forms of the inversion case.
  bool garsia_orbits = false, garsia_cosets = false, garsia_characters = false;
  /// Every assertion that applied held. When the hypothesis fails the four
  /// conditions are reported but not compared.
  bool consistent = false;
  std::vector<std::string> failures;
};

GelfandReport gelfand_criteria_report(const CosetSpace& space, const CharacterTable& table, const GroupMap& tau,
                                      const Budget& budget = {});

struct SphericalFunctions {
  std::vector<std::size_t> constituents;
  /// values[i][g] for constituent i and every element g.
  std::vector<std::vector<Complex>> values;
  /// Least element of each double coset K g K, and the coset of each element.
  std::vector<ElementId> double_coset_reps;
  std::vector<std::uint32_t> double_coset_of;
  double normalization_residual = 0.0;
  double bi_invariance_residual = 0.0;
  /// Recovering the character from the spherical function.
  double inversion_residual = 0.0;
  /// (1/|G|) sum phi_i conj(phi_j) against delta_ij / d_i.
  double orthogonality_residual = 0.0;
};

/// Throws NotGelfand unless the permutation character is multiplicity-free.
SphericalFunctions spherical_functions(const CosetSpace& space, const CharacterTable& table);

struct TwistedGelfandReport {
  std::vector<std::size_t> constituents;
  std::vector<int> indicators;
  std::vector<double> identity1_residuals;
  /// (1/|G|) sum_x zeta(x)^2 and |K| sum 1/d over self-conjugate
  /// constituents, both as reduced fractions.
  std::string identity2_lhs;
  std::string identity2_rhs;
  bool identity2_exact = false;
  std::vector<std::uint64_t> zeta_points;
  double fourier_residual = 0.0;
  /// Present when tau(K) = K.
  std::optional<bool> k_orbit_match;
  std::string skipped;
  std::size_t tau_invariant_k_orbits = 0;
  std::size_t self_conjugate_constituents = 0;
  bool self_conjugate_indicators_one = true;
  bool consistent = false;
};

/// Throws NotGelfand unless the pair is Gelfand.
TwistedGelfandReport twisted_fs_gelfand(const CosetSpace& space, const CharacterTable& table, const GroupMap& tau);

struct ConditionStarReport {
  std::vector<ElementId> fixed_subgroup;
  std::size_t omega_size = 0;
  std::size_t omega_classes_in_g = 0;
  std::size_t omega_classes_in_k = 0;
  bool holds = false;
  bool involutive = false;
  /// Gelfand verdict for (G, K), evaluated when sigma is involutive.
  std::optional<bool> gelfand;
  std::size_t rank = 0;
  bool consistent = false;
};

/// K is the fixed subgroup of sigma; Omega = {x sigma(x^-1)}. Throws
/// NotAutomorphism unless sigma is an automorphism.
ConditionStarReport condition_star(const GroupMap& sigma, const Budget& budget = {},
                                   std::uint64_t seed = kDefaultTableSeed);

/// {g : sigma(g) = g} as a subgroup.
Subgroup fixed_subgroup(const GroupMap& sigma);

}  // namespace taumackey
