#include "taumackey/conjugacy.hpp"

#include <algorithm>
#include <deque>

namespace taumackey {

ConjugacyData conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ConjugacyData data;
  data.class_of.assign(n, kUnset);
  data.centralizer_order.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    if (data.class_of[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(data.classes.size());
    std::vector<ElementId> members{x};
    data.class_of[x] = c;
    // Conjugating by generators suffices: they generate the conjugation action.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (ElementId s : g.generators()) {
        const ElementId y = g.conj(s, members[i]);
        if (data.class_of[y] == kUnset) {
          data.class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    const std::uint64_t v = n / members.size();
    for (ElementId y : members) data.centralizer_order[y] = v;
    data.representatives.push_back(x);
    data.classes.push_back(std::move(members));
  }
  return data;
}

std::vector<std::uint32_t> tau_class_permutation(const ConjugacyData& classes, const GroupMap& tau) {
  std::vector<std::uint32_t> out(classes.class_count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = classes.class_of[tau(classes.representatives[c])];
  return out;
}

std::size_t tau_invariant_class_count(const ConjugacyData& classes, const GroupMap& tau) {
  const auto perm = tau_class_permutation(classes, tau);
  std::size_t count = 0;
  for (std::size_t c = 0; c < perm.size(); ++c) count += perm[c] == c ? 1 : 0;
  return count;
}

TwistedCounts zeta_tau(const GroupTable& g, const GroupMap& tau) {
  if (tau.group().uid() != g.uid()) throw Error(ErrorKind::GroupMismatch, "tau acts on a different group");
  if (tau.kind() != MapKind::AntiAutomorphism || !tau.involutory())
    throw Error(ErrorKind::InvalidMap, "zeta_tau needs an involutory anti-automorphism");
  TwistedCounts out;
  out.zeta.assign(g.order(), 0);
  for (ElementId h = 0; h < g.order(); ++h) ++out.zeta[g.mul(tau(g.inv(h)), h)];
  return out;
}

// ------------------------------------------------------------ actions

GroupAction GroupAction::from_generator_images(const GroupPtr& group, std::size_t points,
                                               const std::map<ElementId, std::vector<std::uint32_t>>& images) {
  const GroupTable& g = *group;
  for (const auto& [s, p] : images) {
    if (s >= g.order()) throw Error(ErrorKind::InvalidAction, "generator id out of range");
    if (p.size() != points) throw Error(ErrorKind::InvalidAction, "generator image has the wrong degree");
    std::vector<bool> hit(points, false);
    for (auto v : p) {
      if (v >= points || hit[v]) throw Error(ErrorKind::InvalidAction, "generator image is not a permutation");
      hit[v] = true;
    }
  }
  GroupAction action;
  action.group = group;
  action.points = points;
  action.perm.assign(g.order(), {});
  std::vector<std::uint32_t> id(points);
  for (std::uint32_t x = 0; x < points; ++x) id[x] = x;
  action.perm[kIdentity] = id;
  std::deque<ElementId> queue{kIdentity};
  while (!queue.empty()) {
    const ElementId w = queue.front();
    queue.pop_front();
    for (const auto& [s, ps] : images) {
      const ElementId ws = g.mul(w, s);
      std::vector<std::uint32_t> composed(points);
      for (std::size_t x = 0; x < points; ++x) composed[x] = action.perm[w][ps[x]];
      if (action.perm[ws].empty()) {
        action.perm[ws] = std::move(composed);
        queue.push_back(ws);
      } else if (action.perm[ws] != composed) {
        throw Error(ErrorKind::InvalidAction, "generator images do not define an action at " + g.label(ws));
      }
    }
  }
  for (const auto& p : action.perm)
    if (p.empty()) throw Error(ErrorKind::InvalidAction, "generators with images do not generate the group");
  return action;
}

TwistedOrbitCount twisted_orbit_count(const GroupAction& action, const std::vector<std::uint32_t>& alpha) {
  const GroupTable& g = *action.group;
  const std::size_t npts = action.points;
  if (alpha.size() != npts) throw Error(ErrorKind::InvalidAction, "alpha has the wrong degree");
  for (ElementId s : g.generators())
    for (std::size_t x = 0; x < npts; ++x)
      if (alpha[action.perm[s][x]] != action.perm[s][alpha[x]])
        throw Error(ErrorKind::NotCommuting, "alpha does not commute with " + g.label(s));

  TwistedOrbitCount out;
  std::uint64_t total = 0;
  for (ElementId h = 0; h < g.order(); ++h)
    for (std::size_t x = 0; x < npts; ++x) total += action.perm[h][x] == alpha[x] ? 1 : 0;
  if (total % g.order() != 0)
    throw Error(ErrorKind::NotInteger, "twisted Burnside sum " + std::to_string(total) + " not divisible by |G|");
  out.averaged = total / g.order();

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> orbit(npts, kUnset);
  std::uint32_t next = 0;
  for (std::size_t x0 = 0; x0 < npts; ++x0) {
    if (orbit[x0] != kUnset) continue;
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(x0)};
    orbit[x0] = next;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (ElementId s : g.generators()) {
        const auto y = action.perm[s][x];
        if (orbit[y] == kUnset) {
          orbit[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  out.orbit_count = next;
  // alpha permutes orbits, so an orbit is invariant iff it contains alpha of one member.
  std::vector<bool> checked(next, false);
  for (std::size_t x = 0; x < npts; ++x) {
    if (checked[orbit[x]]) continue;
    checked[orbit[x]] = true;
    out.enumerated += orbit[alpha[x]] == orbit[x] ? 1 : 0;
  }
  if (out.enumerated != out.averaged)
    throw Error(ErrorKind::CrossCheckFailed, "twisted Burnside average " + std::to_string(out.averaged) +
                                                 " != enumerated invariant orbits " + std::to_string(out.enumerated));
  return out;
}

// ------------------------------------------------------------ gamma scan

GammaScan gamma_orbit_scan(const GroupTable& g, const ConjugacyData& classes, std::size_t n,
                           const GroupMap& tau, const Budget& budget) {
  if (tau.group().uid() != g.uid()) throw Error(ErrorKind::GroupMismatch, "tau acts on a different group");
  GammaScan out;
  out.n = n;
  const std::size_t order = g.order();
  if (n == 1) {
    out.orbit_count = classes.class_count();
    out.tau_invariant_orbit_count = tau_invariant_class_count(classes, tau);
    return out;
  }
  if (n != 2) throw Error(ErrorKind::InvalidSpec, "orbit scans are limited to n = 1, 2");
  if (order * order > budget.max_pairs)
    throw Error(ErrorKind::BudgetExceeded, "G^2 scan needs " + std::to_string(order * order) +
                                               " pairs, budget " + std::to_string(budget.max_pairs));

  std::vector<std::vector<ElementId>> conj_by;
  for (ElementId s : g.generators()) {
    std::vector<ElementId> row(order);
    for (ElementId x = 0; x < order; ++x) row[x] = g.conj(s, x);
    conj_by.push_back(std::move(row));
  }
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> orbit(order * order, kUnset);
  std::vector<std::size_t> minimal;
  std::vector<std::size_t> stack;
  // Scanning in index order makes the first member of each orbit its minimum,
  // so orbit ids are canonical.
  for (std::size_t start = 0; start < orbit.size(); ++start) {
    if (orbit[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(minimal.size());
    minimal.push_back(start);
    orbit[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      const std::size_t a = p / order, b = p % order;
      for (const auto& row : conj_by) {
        const std::size_t q = static_cast<std::size_t>(row[a]) * order + row[b];
        if (orbit[q] == kUnset) {
          orbit[q] = id;
          stack.push_back(q);
        }
      }
    }
  }
  out.orbit_count = minimal.size();
  for (std::size_t id = 0; id < minimal.size(); ++id) {
    const std::size_t a = minimal[id] / order, b = minimal[id] % order;
    const std::size_t image = static_cast<std::size_t>(tau(static_cast<ElementId>(a))) * order +
                              tau(static_cast<ElementId>(b));
    out.tau_invariant_orbit_count += orbit[image] == id ? 1 : 0;
  }
  return out;
}

// ------------------------------------------------------------ power sums

BigInt sum_centralizer_powers(const ConjugacyData& classes, std::size_t n) {
  BigInt total = 0;
  for (std::size_t c = 0; c < classes.class_count(); ++c) {
    const BigInt v = classes.centralizer_order[classes.representatives[c]];
    total += BigInt(classes.class_size(c)) * boost::multiprecision::pow(v, static_cast<unsigned>(n));
  }
  return total;
}

BigInt sum_zeta_powers(const TwistedCounts& zeta, std::size_t exponent) {
  BigInt total = 0;
  for (auto z : zeta.zeta)
    if (z != 0) total += boost::multiprecision::pow(BigInt(z), static_cast<unsigned>(exponent));
  return total;
}

PowerSumReport power_sum_report(const GroupTable& g, const ConjugacyData& classes, const TwistedCounts& zeta,
                                const GroupMap& tau, std::size_t n, const Budget& budget) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "power sums need n >= 1");
  PowerSumReport r;
  r.n = n;
  r.sum_v_n = sum_centralizer_powers(classes, n);
  r.sum_zeta_n1 = sum_zeta_powers(zeta, n + 1);
  r.equal = r.sum_v_n == r.sum_zeta_n1;
  if (r.sum_zeta_n1 > r.sum_v_n)
    throw Error(ErrorKind::CrossCheckFailed, "sum zeta^(n+1) = " + r.sum_zeta_n1.str() + " exceeds sum v^n = " +
                                                 r.sum_v_n.str());
  const BigInt order = g.order();
  if (r.sum_v_n % order != 0 || r.sum_zeta_n1 % order != 0)
    throw Error(ErrorKind::NotInteger, "power sums are not divisible by |G|");
  if (n <= 2 && g.order() * (n == 2 ? g.order() : 1) <= budget.max_pairs) {
    r.scan = gamma_orbit_scan(g, classes, n, tau, budget);
    const bool ok = r.sum_v_n / order == r.scan->orbit_count &&
                    r.sum_zeta_n1 / order == r.scan->tau_invariant_orbit_count;
    r.verified_against_orbits = ok;
    if (!ok)
      throw Error(ErrorKind::CrossCheckFailed,
                  "orbit scan disagrees with power sums: orbits " + std::to_string(r.scan->orbit_count) +
                      " vs " + BigInt(r.sum_v_n / order).str() + ", invariant " +
                      std::to_string(r.scan->tau_invariant_orbit_count) + " vs " +
                      BigInt(r.sum_zeta_n1 / order).str());
  }
  return r;
}

}  // namespace taumackey
