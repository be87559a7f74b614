#include "taumackey/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace taumackey {
namespace {

constexpr int kMaxAttempts = 20;
constexpr double kClusterGap = 1e-8;
constexpr double kRowMatchTolerance = 1e-6;

void require_same(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a != b) throw Error(ErrorKind::GroupMismatch, std::string(what) + " belong to different groups");
}

bool rows_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (std::abs(a[c] - b[c]) > kRowMatchTolerance) return false;
  return true;
}

std::size_t find_row(const CharacterTable& table, const std::vector<Complex>& values) {
  for (std::size_t j = 0; j < table.size(); ++j)
    if (rows_equal(table.rows[j].values, values)) return j;
  throw Error(ErrorKind::NoMatchingRow, "class function matches no irreducible row");
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// a[(j*k + i)*k + l] = |{x in C_j : x^-1 g_l in C_i}|.
std::vector<std::uint32_t> structure_constants(const GroupTable& g, const ConjugacyData& cd) {
  const std::size_t k = cd.class_count();
  std::vector<std::uint32_t> a(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    const ElementId gl = cd.representatives[l];
    for (ElementId x = 0; x < g.order(); ++x) {
      const ElementId y = g.mul(g.inv(x), gl);
      ++a[(static_cast<std::size_t>(cd.class_of[x]) * k + cd.class_of[y]) * k + l];
    }
  }
  return a;
}

struct Candidate {
  std::vector<std::vector<Complex>> rows;
  std::vector<int> degrees;
  double orthogonality = 0.0;
  double integrality = 0.0;
};

// One eigen-decomposition of a random combination of the class matrices.
// Returns nullopt when eigenvalues cluster or the result fails validation.
std::optional<Candidate> attempt(const ConjugacyData& cd, std::size_t order, const std::vector<std::uint32_t>& a,
                                 std::mt19937_64& rng) {
  const std::size_t k = cd.class_count();
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> sqrt_size(k);
  for (std::size_t c = 0; c < k; ++c) sqrt_size[c] = std::sqrt(static_cast<double>(cd.class_size(c)));

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const double cj = coef(rng) / static_cast<double>(cd.class_size(j));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const auto v = a[(j * k + i) * k + l];
        if (v != 0) m(i, l) += cj * v * sqrt_size[l] / sqrt_size[i];
      }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, true);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const auto& lambda = solver.eigenvalues();
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q)
      if (std::abs(lambda(p) - lambda(q)) < kClusterGap) return std::nullopt;

  Candidate out;
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<Complex> w(k);
    for (std::size_t c = 0; c < k; ++c) w[c] = solver.eigenvectors()(c, col) * sqrt_size[c];
    if (std::abs(w[0]) < 1e-12) return std::nullopt;
    const Complex w0 = w[0];
    double norm = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      w[c] /= w0;
      norm += std::norm(w[c]) / static_cast<double>(cd.class_size(c));
    }
    const double d = std::sqrt(static_cast<double>(order) / norm);
    const double rd = std::round(d);
    out.integrality = std::max(out.integrality, std::abs(d - rd));
    std::vector<Complex> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = rd * w[c] / static_cast<double>(cd.class_size(c));
    out.rows.push_back(std::move(row));
    out.degrees.push_back(static_cast<int>(rd));
  }
  if (out.integrality > kIntegralityTolerance) return std::nullopt;
  long long sum_sq = 0;
  for (int d : out.degrees) {
    if (d <= 0 || order % static_cast<std::size_t>(d) != 0) return std::nullopt;
    sum_sq += static_cast<long long>(d) * d;
  }
  if (sum_sq != static_cast<long long>(order)) return std::nullopt;

  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p; q < k; ++q) {
      Complex s = 0;
      for (std::size_t c = 0; c < k; ++c)
        s += static_cast<double>(cd.class_size(c)) * out.rows[p][c] * std::conj(out.rows[q][c]);
      s /= static_cast<double>(order);
      out.orthogonality = std::max(out.orthogonality, std::abs(s - (p == q ? 1.0 : 0.0)));
    }
  if (out.orthogonality >= 1e-8 * static_cast<double>(k)) return std::nullopt;
  return out;
}

// Descending lexicographic order on values rounded to 1e-6, after degree.
bool row_less(const std::vector<Complex>& a, int da, const std::vector<Complex>& b, int db) {
  if (da != db) return da < db;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const auto ar = std::llround(a[c].real() * 1e6), br = std::llround(b[c].real() * 1e6);
    if (ar != br) return ar > br;
    const auto ai = std::llround(a[c].imag() * 1e6), bi = std::llround(b[c].imag() * 1e6);
    if (ai != bi) return ai > bi;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------ class functions

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group_uid, b.group_uid, "class functions");
  ClassFunction out{a.group_uid, a.values};
  for (std::size_t c = 0; c < out.size(); ++c) out.values[c] += b.values[c];
  return out;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group_uid, b.group_uid, "class functions");
  ClassFunction out{a.group_uid, a.values};
  for (std::size_t c = 0; c < out.size(); ++c) out.values[c] *= b.values[c];
  return out;
}

ClassFunction conjugate(const ClassFunction& f) {
  ClassFunction out = f;
  for (auto& v : out.values) v = std::conj(v);
  return out;
}

ClassFunction CharacterTable::make_function(std::vector<Complex> values) const {
  if (values.size() != classes.class_count())
    throw Error(ErrorKind::InvalidSpec, "class function has the wrong number of values");
  return ClassFunction{uid(), std::move(values)};
}

ClassFunction CharacterTable::regular_character() const {
  std::vector<Complex> v(classes.class_count(), 0.0);
  v[0] = static_cast<double>(order());
  return make_function(std::move(v));
}

// ------------------------------------------------------------ table

CharacterTable compute_character_table(const GroupPtr& group, const Budget& budget, std::uint64_t seed) {
  CharacterTable table;
  table.group = group;
  table.classes = conjugacy_classes(*group);
  const std::size_t k = table.classes.class_count();
  if (k > budget.max_classes)
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(k) + " classes exceed the budget of " + std::to_string(budget.max_classes));
  const auto a = structure_constants(*group, table.classes);
  std::mt19937_64 rng(seed);
  std::optional<Candidate> found;
  int attempts = 0;
  while (!found && attempts < kMaxAttempts) {
    ++attempts;
    found = attempt(table.classes, group->order(), a, rng);
  }
  if (!found)
    throw Error(ErrorKind::DegenerateEigenspaces,
                "no separating class-matrix combination after " + std::to_string(attempts) + " attempts");

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return row_less(found->rows[x], found->degrees[x], found->rows[y], found->degrees[y]);
  });
  for (std::size_t p : perm) {
    table.rows.push_back(ClassFunction{group->uid(), std::move(found->rows[p])});
    table.degrees.push_back(found->degrees[p]);
  }
  table.quality = {found->orthogonality, found->integrality, attempts};
  return table;
}

Complex inner_product(const CharacterTable& table, const ClassFunction& f1, const ClassFunction& f2) {
  require_same(f1.group_uid, table.uid(), "class function and table");
  require_same(f2.group_uid, table.uid(), "class function and table");
  Complex s = 0;
  for (std::size_t c = 0; c < table.classes.class_count(); ++c)
    s += static_cast<double>(table.classes.class_size(c)) * f1.values[c] * std::conj(f2.values[c]);
  return s / static_cast<double>(table.order());
}

long long round_checked(Complex x, ErrorKind kind, const std::string& what, double tolerance) {
  const double r = std::round(x.real());
  if (std::abs(x - Complex(r, 0.0)) > tolerance)
    throw Error(kind, what + " = " + fmt(x.real()) + (x.imag() != 0.0 ? "+" + fmt(x.imag()) + "i" : "") +
                          " is not an integer");
  return static_cast<long long>(r);
}

TensorMultiplicities tensor_multiplicities(const CharacterTable& table) {
  TensorMultiplicities out;
  const std::size_t k = table.size();
  out.k = k;
  out.m.resize(k * k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const ClassFunction prod = table.rows[i] * table.rows[j];
      for (std::size_t l = 0; l < k; ++l) {
        const Complex v = inner_product(table, prod, table.rows[l]);
        const long long r = round_checked(v, ErrorKind::NonIntegralMultiplicity,
                                          "multiplicity of row " + std::to_string(l) + " in rows " +
                                              std::to_string(i) + "x" + std::to_string(j));
        out.max_residual = std::max(out.max_residual, std::abs(v - static_cast<double>(r)));
        out.m[(i * k + j) * k + l] = static_cast<int>(r);
      }
    }
  return out;
}

// ------------------------------------------------------------ indicators

Indicator fs_indicator(const CharacterTable& table, std::size_t row) {
  const GroupTable& g = *table.group;
  Complex s = 0;
  for (ElementId x = 0; x < g.order(); ++x) s += table.value(row, g.mul(x, x));
  s /= static_cast<double>(g.order());
  Indicator out;
  out.value = static_cast<int>(round_checked(s, ErrorKind::NonIntegralIndicator, "FS indicator"));
  if (out.value < -1 || out.value > 1)
    throw Error(ErrorKind::ValueOutOfRange, "FS indicator " + std::to_string(out.value) + " outside {-1,0,1}");
  out.residual = std::abs(s - static_cast<double>(out.value));
  return out;
}

Complex twisted_trace_sum(const CharacterTable& table, const ClassFunction& f, const GroupMap& tau) {
  require_same(tau.group().uid(), table.uid(), "tau and table");
  require_same(f.group_uid, table.uid(), "class function and table");
  const GroupTable& g = *table.group;
  Complex s = 0;
  for (ElementId x = 0; x < g.order(); ++x) s += f.values[table.classes.class_of[g.mul(g.inv(tau(x)), x)]];
  return s / static_cast<double>(g.order());
}

std::vector<Indicator> twisted_fs_indicators(const CharacterTable& table, const GroupMap& tau) {
  require_same(tau.group().uid(), table.uid(), "tau and table");
  tau.require(MapKind::AntiAutomorphism, true);
  const GroupTable& g = *table.group;
  const std::size_t k = table.classes.class_count();
  // Route 1: histogram of tau(x)^-1 x over classes.
  std::vector<double> hist(k, 0.0);
  for (ElementId x = 0; x < g.order(); ++x) hist[table.classes.class_of[g.mul(g.inv(tau(x)), x)]] += 1.0;
  // Route 2: zeta_tau on class representatives.
  const TwistedCounts zeta = zeta_tau(g, tau);

  std::vector<Indicator> out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    Complex direct = 0, via_zeta = 0;
    for (std::size_t c = 0; c < k; ++c) {
      direct += hist[c] * table.rows[r].values[c];
      via_zeta += static_cast<double>(table.classes.class_size(c) * zeta.zeta[table.classes.representatives[c]]) *
                  std::conj(table.rows[r].values[c]);
    }
    direct /= static_cast<double>(g.order());
    via_zeta /= static_cast<double>(g.order());
    Indicator ind;
    ind.value = static_cast<int>(
        round_checked(direct, ErrorKind::NonIntegralIndicator, "twisted indicator of row " + std::to_string(r)));
    if (ind.value < -1 || ind.value > 1)
      throw Error(ErrorKind::ValueOutOfRange,
                  "twisted indicator " + std::to_string(ind.value) + " of row " + std::to_string(r));
    ind.residual = std::abs(direct - static_cast<double>(ind.value));
    ind.route_gap = std::abs(direct - via_zeta);
    if (ind.route_gap > kIntegralityTolerance)
      throw Error(ErrorKind::CrossCheckFailed, "twisted indicator routes disagree on row " + std::to_string(r) +
                                                   " by " + fmt(ind.route_gap));
    out.push_back(ind);
  }
  return out;
}

Indicator twisted_fs_indicator(const CharacterTable& table, std::size_t row, const GroupMap& tau) {
  return twisted_fs_indicators(table, tau).at(row);
}

std::size_t tau_conjugate_row(const CharacterTable& table, std::size_t row, const GroupMap& tau) {
  require_same(tau.group().uid(), table.uid(), "tau and table");
  const auto perm = tau_class_permutation(table.classes, tau);
  std::vector<Complex> v(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) v[c] = table.rows[row].values[perm[c]];
  return find_row(table, v);
}

std::vector<std::size_t> tau_conjugate_rows(const CharacterTable& table, const GroupMap& tau) {
  std::vector<std::size_t> out(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) out[r] = tau_conjugate_row(table, r, tau);
  return out;
}

SelfConjugateCensus self_conjugate_census(const CharacterTable& table, const GroupMap& tau,
                                          const TwistedCounts& zeta) {
  SelfConjugateCensus out;
  const auto partner = tau_conjugate_rows(table, tau);
  out.self_conjugate.resize(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    out.self_conjugate[r] = partner[r] == r;
    out.count += out.self_conjugate[r] ? 1 : 0;
  }
  out.invariant_classes = tau_invariant_class_count(table.classes, tau);
  std::uint64_t sq = 0;
  for (auto z : zeta.zeta) sq += z * z;
  if (sq % table.order() != 0)
    throw Error(ErrorKind::NotInteger, "sum of zeta^2 is not divisible by |G|");
  out.zeta_square_average = sq / table.order();
  if (out.count != out.invariant_classes || out.count != out.zeta_square_average)
    throw Error(ErrorKind::CrossCheckFailed,
                "self-conjugate census disagrees: rows " + std::to_string(out.count) + ", invariant classes " +
                    std::to_string(out.invariant_classes) + ", zeta^2 average " +
                    std::to_string(out.zeta_square_average));
  return out;
}

double zeta_expansion_check(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta) {
  const auto ind = twisted_fs_indicators(table, tau);
  double worst = 0.0;
  for (std::size_t c = 0; c < table.classes.class_count(); ++c) {
    Complex s = 0;
    for (std::size_t r = 0; r < table.size(); ++r) s += static_cast<double>(ind[r].value) * table.rows[r].values[c];
    worst = std::max(worst, std::abs(s - static_cast<double>(zeta.zeta[table.classes.representatives[c]])));
  }
  return worst;
}

// ------------------------------------------------------------ induction

void check_embedding(const GroupTable& parent, const GroupTable& sub, std::span<const ElementId> embedding) {
  if (embedding.size() != sub.order()) throw Error(ErrorKind::NotASubgroup, "embedding has the wrong size");
  std::vector<bool> hit(parent.order(), false);
  for (ElementId e : embedding) {
    if (e >= parent.order() || hit[e]) throw Error(ErrorKind::NotASubgroup, "embedding is not injective");
    hit[e] = true;
  }
  for (ElementId x = 0; x < sub.order(); ++x)
    for (ElementId y = 0; y < sub.order(); ++y)
      if (embedding[sub.mul(x, y)] != parent.mul(embedding[x], embedding[y]))
        throw Error(ErrorKind::NotASubgroup, "embedding is not a homomorphism at (" + sub.label(x) + ", " +
                                                 sub.label(y) + ")");
}

ClassFunction restrict_character(const CharacterTable& parent, const CharacterTable& sub,
                                 std::span<const ElementId> embedding, const ClassFunction& chi) {
  require_same(chi.group_uid, parent.uid(), "character and parent table");
  std::vector<Complex> v(sub.classes.class_count());
  for (std::size_t c = 0; c < v.size(); ++c)
    v[c] = chi.values[parent.classes.class_of[embedding[sub.classes.representatives[c]]]];
  return sub.make_function(std::move(v));
}

ClassFunction induce_character(const CharacterTable& parent, const CharacterTable& sub,
                               std::span<const ElementId> embedding, const ClassFunction& f,
                               double* reciprocity_residual) {
  require_same(f.group_uid, sub.uid(), "class function and subgroup table");
  const GroupTable& g = *parent.group;
  std::vector<std::int64_t> back(g.order(), -1);
  for (std::size_t i = 0; i < embedding.size(); ++i) back[embedding[i]] = static_cast<std::int64_t>(i);

  std::vector<Complex> v(parent.classes.class_count(), 0.0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    const ElementId rep = parent.classes.representatives[c];
    Complex s = 0;
    for (ElementId x = 0; x < g.order(); ++x) {
      const auto y = back[g.mul(g.mul(g.inv(x), rep), x)];
      if (y >= 0) s += f.values[sub.classes.class_of[static_cast<std::size_t>(y)]];
    }
    v[c] = s / static_cast<double>(sub.order());
  }
  ClassFunction induced = parent.make_function(std::move(v));

  double worst = 0.0;
  for (const auto& chi : parent.rows) {
    const Complex lhs = inner_product(parent, induced, chi);
    const Complex rhs = inner_product(sub, f, restrict_character(parent, sub, embedding, chi));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  if (reciprocity_residual) *reciprocity_residual = worst;
  if (worst > kIntegralityTolerance)
    throw Error(ErrorKind::CrossCheckFailed, "Frobenius reciprocity fails by " + fmt(worst));
  return induced;
}

std::vector<int> decompose(const CharacterTable& table, const ClassFunction& chi) {
  std::vector<int> out(table.size());
  for (std::size_t r = 0; r < table.size(); ++r)
    out[r] = static_cast<int>(round_checked(inner_product(table, chi, table.rows[r]),
                                            ErrorKind::NonIntegralMultiplicity,
                                            "multiplicity of row " + std::to_string(r)));
  return out;
}

// ------------------------------------------------------------ Clifford theory

CliffordTheoryReport clifford_theory_check(const GroupMap& tau, const Budget& budget, std::uint64_t seed) {
  CliffordTheoryReport out;
  out.extension = construct_semidirect_with_involution(tau);
  const GroupPtr& n_group = tau.target();
  const GroupTable& g = *out.extension;
  const std::size_t n_order = n_group->order();
  const CharacterTable nt = compute_character_table(n_group, budget, seed);
  const CharacterTable gt = compute_character_table(out.extension, budget, seed);
  std::vector<ElementId> embedding(n_order);
  std::iota(embedding.begin(), embedding.end(), ElementId{0});
  check_embedding(g, *n_group, embedding);

  const auto h = static_cast<ElementId>(n_order);
  // Sign character of G/N: +1 on N, -1 off N.
  std::vector<Complex> eps(gt.classes.class_count());
  for (std::size_t c = 0; c < eps.size(); ++c) eps[c] = gt.classes.representatives[c] < n_order ? 1.0 : -1.0;
  const ClassFunction sign = gt.make_function(std::move(eps));

  std::vector<std::size_t> h_partner(nt.size());
  for (std::size_t s = 0; s < nt.size(); ++s) {
    std::vector<Complex> v(nt.classes.class_count());
    for (std::size_t c = 0; c < v.size(); ++c) {
      const ElementId m = g.mul(g.mul(g.inv(h), nt.classes.representatives[c]), h);
      v[c] = nt.rows[s].values[nt.classes.class_of[m]];
    }
    h_partner[s] = find_row(nt, v);
  }

  std::vector<std::size_t> sign_partner(gt.size());
  for (std::size_t t = 0; t < gt.size(); ++t) sign_partner[t] = find_row(gt, (gt.rows[t] * sign).values);

  for (std::size_t s = 0; s < nt.size(); ++s) {
    double residual = 0.0;
    const ClassFunction ind = induce_character(gt, nt, embedding, nt.rows[s], &residual);
    out.max_residual = std::max(out.max_residual, residual);
    const auto mult = decompose(gt, ind);
    CliffordCase cc;
    cc.sigma = s;
    cc.h_conjugate = h_partner[s];
    int total = 0;
    for (std::size_t t = 0; t < mult.size(); ++t) {
      if (mult[t] != 0) cc.constituents.push_back(t);
      total += mult[t] * mult[t];
    }

    const bool moved = h_partner[s] != s;
    bool case1 = false, case2 = false;
    if (moved && total == 1 && cc.constituents.size() == 1) {
      const auto res = decompose(nt, restrict_character(gt, nt, embedding, ind));
      case1 = res[s] == 1 && res[h_partner[s]] == 1 &&
              std::accumulate(res.begin(), res.end(), 0) == 2;
    }
    if (!moved && total == 2 && cc.constituents.size() == 2) {
      const std::size_t t0 = cc.constituents[0], t1 = cc.constituents[1];
      if (sign_partner[t0] == t1) {
        const auto res = decompose(nt, restrict_character(gt, nt, embedding, gt.rows[t0]));
        case2 = res[s] == 1 && std::accumulate(res.begin(), res.end(), 0) == 1;
      }
    }
    if (case1 == case2)
      throw Error(ErrorKind::CaseClassificationFailed,
                  "irreducible " + std::to_string(s) + " of N fits " + (case1 ? "both" : "neither") +
                      " Clifford case");
    cc.which = case1 ? 1 : 2;
    out.cases.push_back(std::move(cc));
  }

  auto orbit_count = [](const std::vector<std::size_t>& involution) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < involution.size(); ++i) n += involution[i] >= i ? 1 : 0;
    return n;
  };
  out.n_orbits = orbit_count(h_partner);
  out.g_orbits = orbit_count(sign_partner);
  if (out.n_orbits != out.g_orbits)
    throw Error(ErrorKind::CaseClassificationFailed,
                "orbit counts differ: " + std::to_string(out.n_orbits) + " on Irr(N), " +
                    std::to_string(out.g_orbits) + " on Irr(G)");
  return out;
}

}  // namespace taumackey
