#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "taumackey/group.hpp"

namespace taumackey {

enum class MapKind { Automorphism, AntiAutomorphism };

std::string_view to_string(MapKind kind);

/// A validated automorphism or anti-automorphism, stored as the permutation
/// g -> images[g] of element ids.
class GroupMap {
 public:
  GroupMap(GroupPtr target, std::vector<ElementId> images, MapKind kind, bool involutory,
           bool exhaustive);

  const GroupPtr& target() const { return target_; }
  const GroupTable& group() const { return *target_; }
  ElementId operator()(ElementId g) const { return images_[g]; }
  const std::vector<ElementId>& images() const { return images_; }
  MapKind kind() const { return kind_; }
  bool involutory() const { return involutory_; }
  /// True when the kind was checked on every pair rather than sampled.
  bool exhaustive() const { return exhaustive_; }
  bool is_identity() const;

  /// Throws WrongKind unless the map has the given kind (and is involutory
  /// when requested).
  void require(MapKind kind, bool involutory) const;

 private:
  GroupPtr target_;
  std::vector<ElementId> images_;
  MapKind kind_;
  bool involutory_;
  bool exhaustive_;
};

/// Pairs checked exhaustively up to this order; above it, (generator,
/// element) pairs plus random pairs.
inline constexpr std::size_t kExhaustiveMapCheckLimit = 1024;

/// Validates a raw id permutation against the claimed kind. Errors:
/// NotBijective, HomomorphismViolation (message carries a witness triple).
GroupMap validate(const GroupPtr& group, std::vector<ElementId> images, MapKind claimed,
                  std::uint64_t seed = 1);

GroupMap tau_inverse(const GroupPtr& group);
/// The identity map; only an anti-automorphism when the group is abelian.
GroupMap tau_identity(const GroupPtr& group);
/// g -> g0 g^-1 g0^-1. Throws NotInvolutory unless g0^2 is central.
GroupMap tau_inner(const GroupPtr& group, ElementId g0);
/// For clifford(n): tau'(eps gamma_A) = eps (-1)^{|A|(|A|+1)/2} gamma_A when
/// n = 3 mod 4, inversion otherwise.
GroupMap tau_clifford(const GroupPtr& group);
/// Componentwise extension to `power`, which must be make_direct_power(G, n).
GroupMap extend_to_power(const GroupMap& tau, const GroupPtr& power, std::size_t n);
/// Componentwise map on a direct product whose factors are the targets of
/// `left` and `right` (same kind required).
GroupMap product_map(const GroupMap& left, const GroupMap& right, const GroupPtr& product);

/// Extends generator images along the Cayley graph, anti-homomorphically
/// (image(w s) = image(s) image(w)) or homomorphically, then validates.
/// Errors: InconsistentImages, NotInvolutory (when `require_involutory`).
GroupMap map_from_generator_images(const GroupPtr& group, const std::map<ElementId, ElementId>& images,
                                   MapKind kind, bool require_involutory);
GroupMap tau_from_generator_images(const GroupPtr& group, const std::map<ElementId, ElementId>& images,
                                   bool require_involutory = true);

/// Automorphisms used as sigma in condition (star).
GroupMap automorphism_conjugation(const GroupPtr& group, ElementId w);
/// (a, b) -> (b, a) on a direct product of two copies of the same table.
GroupMap automorphism_swap_factors(const GroupPtr& product);
GroupMap automorphism_identity(const GroupPtr& group);

/// Composition first-then-second as id permutations; the kind follows the
/// usual parity rule (two anti-automorphisms compose to an automorphism).
GroupMap compose(const GroupMap& second, const GroupMap& first);

/// G = N x| <alpha> with alpha(n) = tau(n^-1). Element (n, e) has id
/// e*|N| + n, so N sits at ids [0, |N|) and h = (1, alpha) has id |N|.
GroupPtr construct_semidirect_with_involution(const GroupMap& tau);

}  // namespace taumackey
