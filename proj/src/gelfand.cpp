#include "taumackey/gelfand.hpp"

#include <algorithm>
#include <numeric>

namespace taumackey {
namespace {

constexpr double kResidualTolerance = 1e-6;
constexpr std::uint32_t kUnset = ~std::uint32_t{0};

struct DoubleCosets {
  std::vector<std::uint32_t> of;
  std::vector<ElementId> reps;
};

// Partition of G into double cosets L g R, scanned in id order so each
// representative is the least member.
DoubleCosets double_cosets(const GroupTable& g, const std::vector<ElementId>& left,
                           const std::vector<ElementId>& right) {
  DoubleCosets out;
  out.of.assign(g.order(), kUnset);
  for (ElementId s = 0; s < g.order(); ++s) {
    if (out.of[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(s);
    for (ElementId a : left) {
      const ElementId as = g.mul(a, s);
      for (ElementId b : right) out.of[g.mul(as, b)] = id;
    }
  }
  return out;
}

std::vector<ElementId> image_of(const std::vector<ElementId>& set, const GroupMap& map) {
  std::vector<ElementId> out;
  out.reserve(set.size());
  for (ElementId x : set) out.push_back(map(x));
  std::sort(out.begin(), out.end());
  return out;
}

void require_table(const CosetSpace& space, const CharacterTable& table) {
  if (space.group->uid() != table.uid())
    throw Error(ErrorKind::GroupMismatch, "coset space and character table belong to different groups");
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  num /= g == 0 ? 1 : g;
  den /= g == 0 ? 1 : g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

CosetSpace build_coset_space(const Subgroup& subgroup) {
  CosetSpace space;
  space.group = subgroup.parent;
  space.subgroup = subgroup;
  const GroupTable& g = *space.group;
  space.point_of.assign(g.order(), kUnset);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (space.point_of[x] != kUnset) continue;
    const auto p = static_cast<std::uint32_t>(space.representative.size());
    space.representative.push_back(x);
    for (ElementId k : subgroup.elements) space.point_of[g.mul(x, k)] = p;
  }
  return space;
}

ClassFunction permutation_character(const CosetSpace& space, const CharacterTable& table) {
  require_table(space, table);
  std::vector<Complex> v(table.classes.class_count());
  for (std::size_t c = 0; c < v.size(); ++c) {
    const ElementId g = table.classes.representatives[c];
    std::size_t fixed = 0;
    for (std::uint32_t x = 0; x < space.size(); ++x) fixed += space.act(g, x) == x ? 1 : 0;
    v[c] = static_cast<double>(fixed);
  }
  return table.make_function(std::move(v));
}

OrbitAnalysis orbit_analysis(const CosetSpace& space, const GroupMap& tau, const Budget& budget) {
  const GroupTable& g = *space.group;
  if (tau.group().uid() != g.uid()) throw Error(ErrorKind::GroupMismatch, "tau acts on a different group");
  const std::size_t n = space.size();
  if (n * n > budget.max_pairs)
    throw Error(ErrorKind::BudgetExceeded, "X x X scan needs " + std::to_string(n * n) + " pairs, budget " +
                                               std::to_string(budget.max_pairs));
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> moves;
  for (ElementId s : g.generators()) {
    const ElementId twisted = tau(g.inv(s));
    std::vector<std::uint32_t> left(n), right(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      left[x] = space.act(twisted, x);
      right[x] = space.act(s, x);
    }
    moves.emplace_back(std::move(left), std::move(right));
  }

  OrbitAnalysis out;
  std::vector<std::uint32_t> orbit(n * n, kUnset);
  std::vector<std::size_t> first;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < orbit.size(); ++start) {
    if (orbit[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(first.size());
    first.push_back(start);
    orbit[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      for (const auto& [left, right] : moves) {
        const std::size_t q = static_cast<std::size_t>(left[p / n]) * n + right[p % n];
        if (orbit[q] == kUnset) {
          orbit[q] = id;
          stack.push_back(q);
        }
      }
    }
  }
  out.orbit_count = first.size();
  for (std::size_t p : first) {
    const std::size_t flipped = (p % n) * n + p / n;
    (orbit[flipped] == orbit[p] ? out.m1 : out.m2) += 1;
  }
  out.hom_sym_dim = out.m1 + out.m2 / 2;
  out.hom_skew_dim = out.m2 / 2;

  const auto tau_k = image_of(space.subgroup.elements, tau);
  const auto dc = double_cosets(g, tau_k, space.subgroup.elements);
  out.coset_reps = dc.reps;
  std::size_t invariant = 0;
  for (std::size_t i = 0; i < dc.reps.size(); ++i) {
    const bool inv = dc.of[tau(dc.reps[i])] == i;
    out.rep_invariant.push_back(inv);
    invariant += inv ? 1 : 0;
  }
  out.consistent = out.orbit_count == dc.reps.size() && out.m1 == invariant && out.m2 % 2 == 0;
  return out;
}

GelfandReport gelfand_criteria_report(const CosetSpace& space, const CharacterTable& table, const GroupMap& tau,
                                      const Budget& budget) {
  require_table(space, table);
  const GroupTable& g = *space.group;
  GelfandReport r;
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };

  const ClassFunction perm = permutation_character(space, table);
  r.multiplicities = decompose(table, perm);
  r.gelfand_pair = true;
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
    const int m = r.multiplicities[i];
    if (m != 0) r.constituents.push_back(i);
    if (m > 1) r.gelfand_pair = false;
    r.rank += static_cast<std::size_t>(m * m);
  }
  const auto& k = space.subgroup.elements;
  r.k_double_cosets = double_cosets(g, k, k).reps.size();
  if (r.rank != r.k_double_cosets)
    fail("rank " + std::to_string(r.rank) + " != K-orbits on X " + std::to_string(r.k_double_cosets));

  const auto indicators = twisted_fs_indicators(table, tau);
  for (std::size_t c : r.constituents) r.constituent_indicators.push_back(indicators[c].value);

  r.tau_k_invariant = std::all_of(k.begin(), k.end(), [&](ElementId x) { return space.subgroup.contains(tau(x)); });
  const auto class_perm = tau_class_permutation(table.classes, tau);
  r.hypothesis = true;
  for (std::size_t c = 0; c < class_perm.size(); ++c)
    if (std::abs(perm.values[class_perm[c]] - perm.values[c]) > kResidualTolerance) r.hypothesis = false;
  if (r.tau_k_invariant && !r.hypothesis) fail("tau(K) = K but the permutation character is not tau-invariant");

  r.orbits = orbit_analysis(space, tau, budget);
  if (!r.orbits.consistent) fail("orbit scan disagrees with the double cosets tau(K)\\G/K");
  r.cond_a = r.orbits.hom_skew_dim == 0;
  r.cond_b = r.orbits.m2 == 0;
  r.cond_c = std::all_of(r.orbits.rep_invariant.begin(), r.orbits.rep_invariant.end(), [](bool b) { return b; });
  r.cond_d = r.gelfand_pair && std::all_of(r.constituent_indicators.begin(), r.constituent_indicators.end(),
                                           [](int v) { return v == 1; });
  if (r.hypothesis && !(r.cond_a == r.cond_b && r.cond_b == r.cond_c && r.cond_c == r.cond_d))
    fail("conditions (a)-(d) disagree under the hypothesis");

  const auto kk = double_cosets(g, k, k);
  r.weakly_symmetric = true;
  for (ElementId x = 0; x < g.order(); ++x)
    if (kk.of[x] != kk.of[tau(x)]) {
      r.weakly_symmetric = false;
      r.weak_witness = x;
      break;
    }
  if (r.weakly_symmetric && !(r.tau_k_invariant && r.hypothesis && r.cond_a && r.cond_b && r.cond_c && r.cond_d))
    fail("weakly symmetric but some condition fails");

  const GroupMap inversion = tau_inverse(space.group);
  const OrbitAnalysis plain = orbit_analysis(space, inversion, budget);
  r.garsia_orbits = plain.m2 == 0;
  r.garsia_cosets = std::all_of(plain.rep_invariant.begin(), plain.rep_invariant.end(), [](bool b) { return b; });
  r.garsia_characters = r.gelfand_pair && std::all_of(r.constituents.begin(), r.constituents.end(),
                                                      [&](std::size_t c) { return fs_indicator(table, c).value == 1; });
  if (!(r.garsia_orbits == r.garsia_cosets && r.garsia_cosets == r.garsia_characters))
    fail("the three forms of the symmetric-pair criterion disagree");
  r.consistent = r.failures.empty();
  return r;
}

SphericalFunctions spherical_functions(const CosetSpace& space, const CharacterTable& table) {
  require_table(space, table);
  const GroupTable& g = *space.group;
  const auto mult = decompose(table, permutation_character(space, table));
  SphericalFunctions out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 1) throw Error(ErrorKind::NotGelfand, "row " + std::to_string(i) + " occurs " +
                                                            std::to_string(mult[i]) + " times in the permutation character");
    if (mult[i] == 1) out.constituents.push_back(i);
  }
  const auto& k = space.subgroup.elements;
  const auto dc = double_cosets(g, k, k);
  out.double_coset_reps = dc.reps;
  out.double_coset_of = dc.of;
  const double korder = static_cast<double>(k.size());
  const double gorder = static_cast<double>(g.order());

  for (std::size_t row : out.constituents) {
    std::vector<Complex> phi(g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      Complex s = 0;
      for (ElementId y : k) s += std::conj(table.value(row, g.mul(x, y)));
      phi[x] = s / korder;
    }
    out.normalization_residual = std::max(out.normalization_residual, std::abs(phi[kIdentity] - 1.0));
    for (ElementId x = 0; x < g.order(); ++x)
      out.bi_invariance_residual =
          std::max(out.bi_invariance_residual, std::abs(phi[x] - phi[dc.reps[dc.of[x]]]));
    const double d = table.degrees[row];
    for (std::size_t c = 0; c < table.classes.class_count(); ++c) {
      const ElementId rep = table.classes.representatives[c];
      Complex s = 0;
      for (ElementId h = 0; h < g.order(); ++h) s += std::conj(phi[g.mul(g.mul(g.inv(h), rep), h)]);
      out.inversion_residual =
          std::max(out.inversion_residual, std::abs(d / gorder * s - table.rows[row].values[c]));
    }
    out.values.push_back(std::move(phi));
  }
  for (std::size_t i = 0; i < out.values.size(); ++i)
    for (std::size_t j = 0; j < out.values.size(); ++j) {
      Complex s = 0;
      for (ElementId x = 0; x < g.order(); ++x) s += out.values[i][x] * std::conj(out.values[j][x]);
      const double expected = i == j ? 1.0 / table.degrees[out.constituents[i]] : 0.0;
      out.orthogonality_residual = std::max(out.orthogonality_residual, std::abs(s / gorder - expected));
    }
  return out;
}

TwistedGelfandReport twisted_fs_gelfand(const CosetSpace& space, const CharacterTable& table, const GroupMap& tau) {
  require_table(space, table);
  const GroupTable& g = *space.group;
  const SphericalFunctions sph = spherical_functions(space, table);
  const auto indicators = twisted_fs_indicators(table, tau);
  const auto partner = tau_conjugate_rows(table, tau);
  TwistedGelfandReport r;
  r.constituents = sph.constituents;
  const double gorder = static_cast<double>(g.order());
  const std::uint64_t korder = space.subgroup.order();

  for (std::size_t i = 0; i < sph.constituents.size(); ++i) {
    const std::size_t row = sph.constituents[i];
    Complex s = 0;
    for (ElementId x = 0; x < g.order(); ++x) s += sph.values[i][g.mul(g.inv(tau(x)), x)];
    const double d = table.degrees[row];
    r.indicators.push_back(indicators[row].value);
    r.identity1_residuals.push_back(std::abs(d / gorder * s - static_cast<double>(indicators[row].value)));
  }

  r.zeta_points.assign(space.size(), 0);
  for (ElementId x = 0; x < g.order(); ++x) ++r.zeta_points[space.point_of[g.mul(g.inv(tau(x)), x)]];
  std::uint64_t square_sum = 0;
  for (auto z : r.zeta_points) square_sum += z * z;
  std::uint64_t lcm = 1;
  for (std::size_t row : sph.constituents) lcm = std::lcm(lcm, static_cast<std::uint64_t>(table.degrees[row]));
  std::uint64_t scaled = 0;
  for (std::size_t row : sph.constituents)
    if (partner[row] == row) scaled += lcm / static_cast<std::uint64_t>(table.degrees[row]);
  r.identity2_lhs = fraction(square_sum, g.order());
  r.identity2_rhs = fraction(korder * scaled, lcm);
  r.identity2_exact = square_sum * lcm == g.order() * korder * scaled;

  for (std::uint32_t p = 0; p < space.size(); ++p) {
    Complex s = 0;
    for (std::size_t i = 0; i < sph.constituents.size(); ++i)
      s += sph.values[i][space.representative[p]] * static_cast<double>(r.indicators[i]);
    r.fourier_residual = std::max(r.fourier_residual,
                                  std::abs(static_cast<double>(korder) * s - static_cast<double>(r.zeta_points[p])));
  }

  const auto& k = space.subgroup.elements;
  const bool tau_k = std::all_of(k.begin(), k.end(), [&](ElementId x) { return space.subgroup.contains(tau(x)); });
  for (std::size_t i = 0; i < sph.constituents.size(); ++i) {
    const std::size_t row = sph.constituents[i];
    if (partner[row] != row) continue;
    ++r.self_conjugate_constituents;
    if (tau_k && r.indicators[i] != 1) r.self_conjugate_indicators_one = false;
  }
  if (tau_k) {
    for (std::size_t i = 0; i < sph.double_coset_reps.size(); ++i)
      r.tau_invariant_k_orbits += sph.double_coset_of[tau(sph.double_coset_reps[i])] == i ? 1 : 0;
    r.k_orbit_match = r.tau_invariant_k_orbits == r.self_conjugate_constituents;
  } else {
    r.skipped = "skipped: tau(K) != K";
  }
  const bool ids = std::all_of(r.identity1_residuals.begin(), r.identity1_residuals.end(),
                               [](double x) { return x < kResidualTolerance; });
  r.consistent = ids && r.identity2_exact && r.fourier_residual < kResidualTolerance &&
                 r.k_orbit_match.value_or(true) && r.self_conjugate_indicators_one;
  return r;
}

Subgroup fixed_subgroup(const GroupMap& sigma) {
  std::vector<ElementId> fixed;
  for (ElementId x = 0; x < sigma.group().order(); ++x)
    if (sigma(x) == x) fixed.push_back(x);
  return make_subgroup(sigma.target(), std::move(fixed));
}

ConditionStarReport condition_star(const GroupMap& sigma, const Budget& budget, std::uint64_t seed) {
  if (sigma.kind() != MapKind::Automorphism)
    throw Error(ErrorKind::NotAutomorphism, "condition (star) needs an automorphism");
  const GroupTable& g = sigma.group();
  ConditionStarReport r;
  const Subgroup k = fixed_subgroup(sigma);
  r.fixed_subgroup = k.elements;

  std::vector<bool> in_omega(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) in_omega[g.mul(x, sigma(g.inv(x)))] = true;
  std::vector<ElementId> omega;
  for (ElementId x = 0; x < g.order(); ++x)
    if (in_omega[x]) omega.push_back(x);
  r.omega_size = omega.size();

  const ConjugacyData classes = conjugacy_classes(g);
  std::vector<bool> class_hit(classes.class_count(), false);
  for (ElementId x : omega) {
    if (!class_hit[classes.class_of[x]]) ++r.omega_classes_in_g;
    class_hit[classes.class_of[x]] = true;
  }

  std::vector<ElementId> k_gens;
  for (ElementId s : k.group->generators()) k_gens.push_back(k.elements[s]);
  std::vector<bool> seen(g.order(), false);
  for (ElementId x : omega) {
    if (seen[x]) continue;
    ++r.omega_classes_in_k;
    std::vector<ElementId> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const ElementId y = stack.back();
      stack.pop_back();
      for (ElementId s : k_gens) {
        const ElementId z = g.conj(s, y);
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
  }
  r.holds = r.omega_classes_in_g == r.omega_classes_in_k;

  r.involutive = true;
  for (ElementId x = 0; x < g.order(); ++x)
    if (sigma(sigma(x)) != x) {
      r.involutive = false;
      break;
    }
  if (r.involutive) {
    const CharacterTable table = compute_character_table(sigma.target(), budget, seed);
    const CosetSpace space = build_coset_space(k);
    const auto mult = decompose(table, permutation_character(space, table));
    r.gelfand = std::all_of(mult.begin(), mult.end(), [](int m) { return m <= 1; });
    for (int m : mult) r.rank += static_cast<std::size_t>(m * m);
  }
  r.consistent = !(r.holds && r.involutive) || r.gelfand.value_or(false);
  return r;
}

}  // namespace taumackey
