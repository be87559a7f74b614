#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "taumackey/budget.hpp"
#include "taumackey/group.hpp"
#include "taumackey/morphisms.hpp"

namespace taumackey {

using BigInt = boost::multiprecision::cpp_int;

/// Conjugacy classes ordered by their least element, which is also the
/// class representative.
struct ConjugacyData {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<ElementId>> classes;
  std::vector<ElementId> representatives;
  /// v(g) = |C_G(g)| per element.
  std::vector<std::uint64_t> centralizer_order;

  std::size_t class_count() const { return classes.size(); }
  std::size_t class_size(std::size_t c) const { return classes[c].size(); }
};

ConjugacyData conjugacy_classes(const GroupTable& group);

/// Index of the class tau(C) for each class C.
std::vector<std::uint32_t> tau_class_permutation(const ConjugacyData& classes, const GroupMap& tau);
std::size_t tau_invariant_class_count(const ConjugacyData& classes, const GroupMap& tau);

/// zeta_tau(g) = |{h : tau(h^-1) h = g}|.
struct TwistedCounts {
  std::vector<std::uint64_t> zeta;
};

/// Requires an involutory anti-automorphism (InvalidMap otherwise).
TwistedCounts zeta_tau(const GroupTable& group, const GroupMap& tau);

/// A permutation action of a group on {0..points-1}, tabulated per element.
struct GroupAction {
  GroupPtr group;
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> perm;

  /// Extends generator images to all of G with pi(w s) = pi(w) pi(s).
  /// Throws InvalidAction if the images do not define a homomorphism.
  static GroupAction from_generator_images(const GroupPtr& group, std::size_t points,
                                           const std::map<ElementId, std::vector<std::uint32_t>>& images);
};

struct TwistedOrbitCount {
  /// (1/|G|) sum_g |{x : pi(g) x = alpha x}|
  std::uint64_t averaged = 0;
  /// Orbits O with alpha(O) = O, by direct enumeration.
  std::uint64_t enumerated = 0;
  std::uint64_t orbit_count = 0;
};

/// Counts alpha-invariant orbits two ways and throws CrossCheckFailed if they
/// disagree. Errors: NotCommuting, NotInteger.
TwistedOrbitCount twisted_orbit_count(const GroupAction& action, const std::vector<std::uint32_t>& alpha);

struct GammaScan {
  std::size_t n = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t tau_invariant_orbit_count = 0;
};

/// Orbits of simultaneous conjugation on G^n (n = 1 or 2) and how many are
/// fixed by componentwise tau. Throws BudgetExceeded when |G|^n > max_pairs.
GammaScan gamma_orbit_scan(const GroupTable& group, const ConjugacyData& classes, std::size_t n,
                           const GroupMap& tau, const Budget& budget = {});

struct PowerSumReport {
  std::size_t n = 0;
  BigInt sum_v_n;
  BigInt sum_zeta_n1;
  bool equal = false;
  /// Set when the orbit scan ran: both averaged sums matched the scan counts.
  std::optional<bool> verified_against_orbits;
  std::optional<GammaScan> scan;
};

/// sum_g v(g)^n and sum_g zeta_tau(g)^(n+1), exact. Throws CrossCheckFailed
/// if the inequality fails or the orbit cross-check disagrees.
PowerSumReport power_sum_report(const GroupTable& group, const ConjugacyData& classes,
                                const TwistedCounts& zeta, const GroupMap& tau, std::size_t n,
                                const Budget& budget = {});

BigInt sum_centralizer_powers(const ConjugacyData& classes, std::size_t n);
BigInt sum_zeta_powers(const TwistedCounts& zeta, std::size_t exponent);

}  // namespace taumackey
