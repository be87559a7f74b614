#pragma once

// Brute-force reference computations used as independent oracles in tests.
// They work from the multiplication table only and never call the library's
// conjugacy, character or criteria code.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "taumackey/group.hpp"
#include "taumackey/morphisms.hpp"

namespace oracle {

using taumackey::ElementId;
using taumackey::GroupTable;
using Big = boost::multiprecision::cpp_int;

inline std::uint64_t centralizer(const GroupTable& g, ElementId x) {
  std::uint64_t c = 0;
  for (ElementId h = 0; h < g.order(); ++h) c += g.mul(h, x) == g.mul(x, h) ? 1 : 0;
  return c;
}

inline std::vector<std::set<ElementId>> classes(const GroupTable& g) {
  std::vector<std::set<ElementId>> out;
  std::vector<bool> seen(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<ElementId> cls;
    for (ElementId h = 0; h < g.order(); ++h) cls.insert(g.mul(g.mul(h, x), g.inv(h)));
    for (ElementId y : cls) seen[y] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

/// #{h : tau(h^-1) h = x}
inline std::uint64_t zeta(const GroupTable& g, const taumackey::GroupMap& tau, ElementId x) {
  std::uint64_t c = 0;
  for (ElementId h = 0; h < g.order(); ++h) c += g.mul(tau(g.inv(h)), h) == x ? 1 : 0;
  return c;
}

inline Big sum_zeta_power(const GroupTable& g, const taumackey::GroupMap& tau, unsigned e) {
  Big s = 0;
  for (ElementId x = 0; x < g.order(); ++x) s += boost::multiprecision::pow(Big(zeta(g, tau, x)), e);
  return s;
}

inline Big sum_centralizer_power(const GroupTable& g, unsigned e) {
  Big s = 0;
  for (ElementId x = 0; x < g.order(); ++x) s += boost::multiprecision::pow(Big(centralizer(g, x)), e);
  return s;
}

/// Orbits of simultaneous conjugation on G x G, and how many are mapped to
/// themselves by (x, y) -> (tau(x), tau(y)), by explicit enumeration.
struct PairOrbits {
  std::size_t orbits = 0;
  std::size_t invariant = 0;
};

inline PairOrbits pair_orbits(const GroupTable& g, const taumackey::GroupMap& tau) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> orbit(n * n, UINT32_MAX);
  PairOrbits out;
  for (std::size_t p = 0; p < n * n; ++p) {
    if (orbit[p] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(out.orbits++);
    const auto x = static_cast<ElementId>(p / n), y = static_cast<ElementId>(p % n);
    for (ElementId h = 0; h < n; ++h)
      orbit[static_cast<std::size_t>(g.conj(h, x)) * n + g.conj(h, y)] = id;
  }
  std::vector<bool> fixed(out.orbits, true);
  for (std::size_t p = 0; p < n * n; ++p) {
    const auto x = static_cast<ElementId>(p / n), y = static_cast<ElementId>(p % n);
    if (orbit[static_cast<std::size_t>(tau(x)) * n + tau(y)] != orbit[p]) fixed[orbit[p]] = false;
  }
  out.invariant = static_cast<std::size_t>(std::count(fixed.begin(), fixed.end(), true));
  return out;
}

/// Orbits of a permutation action given by point images per element.
inline std::vector<std::uint32_t> orbit_labels(const std::vector<std::vector<std::uint32_t>>& perm,
                                               std::size_t points) {
  std::vector<std::uint32_t> label(points, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t p = 0; p < points; ++p) {
    if (label[p] != UINT32_MAX) continue;
    for (const auto& row : perm) label[row[p]] = next;
    ++next;
  }
  return label;
}

/// Real matrix model of the Clifford relations gamma_i^2 = 1 and
/// gamma_i gamma_j = -gamma_j gamma_i, via Kronecker products of the Pauli
/// X and Z matrices.
struct Matrix {
  std::size_t n = 0;
  std::vector<int> a;
  int operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r{x.n, std::vector<int>(x.n * x.n, 0)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k)
        if (x(i, k) != 0)
          for (std::size_t j = 0; j < x.n; ++j) r.a[i * x.n + j] += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
  Matrix negated() const {
    Matrix r = *this;
    for (int& v : r.a) v = -v;
    return r;
  }
};

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r{x.n * y.n, std::vector<int>(x.n * y.n * x.n * y.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < y.n; ++k)
        for (std::size_t l = 0; l < y.n; ++l) r.a[(i * y.n + k) * r.n + j * y.n + l] = x(i, j) * y(k, l);
  return r;
}

inline std::vector<Matrix> clifford_generators(std::size_t n) {
  const Matrix id{2, {1, 0, 0, 1}}, px{2, {0, 1, 1, 0}}, pz{2, {1, 0, 0, -1}};
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix m{1, {1}};
    for (std::size_t slot = 0; slot < n; ++slot) m = kron(m, slot < k ? pz : slot == k ? px : id);
    gens.push_back(m);
  }
  return gens;
}

/// The matrix of +-gamma_A, A as a bitmask, product in increasing index order.
inline Matrix clifford_matrix(const std::vector<Matrix>& gens, std::uint32_t subset, bool negative) {
  const std::size_t dim = gens.empty() ? 1 : gens[0].n;
  Matrix m{dim, std::vector<int>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m.a[i * dim + i] = 1;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if ((subset >> k) & 1u) m = m * gens[k];
  return negative ? m.negated() : m;
}

}  // namespace oracle
