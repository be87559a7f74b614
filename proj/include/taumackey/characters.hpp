#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "taumackey/budget.hpp"
#include "taumackey/conjugacy.hpp"
#include "taumackey/group.hpp"
#include "taumackey/morphisms.hpp"

namespace taumackey {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultTableSeed = 0x7a17'5eedULL;
/// Tolerance for every quantity that must round to an integer.
inline constexpr double kIntegralityTolerance = 1e-6;

/// Values of a class function, one per conjugacy class of the group with
/// the given uid.
struct ClassFunction {
  std::uint64_t group_uid = 0;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  Complex operator[](std::size_t c) const { return values[c]; }
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
/// Pointwise product: the character of the tensor product.
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction conjugate(const ClassFunction& f);

struct TableQuality {
  double orthogonality_residual = 0.0;
  double integrality_residual = 0.0;
  int attempts = 0;
};

/// Complex irreducible characters of a finite group. Rows are sorted by
/// degree, then in decreasing lexicographic order of their rounded values on
/// the ordered classes, so row 0 is the trivial character.
struct CharacterTable {
  GroupPtr group;
  ConjugacyData classes;
  std::vector<ClassFunction> rows;
  std::vector<int> degrees;
  TableQuality quality;

  std::size_t size() const { return rows.size(); }
  std::size_t order() const { return group->order(); }
  std::uint64_t uid() const { return group->uid(); }
  Complex value(std::size_t row, ElementId g) const { return rows[row].values[classes.class_of[g]]; }
  ClassFunction make_function(std::vector<Complex> values) const;
  ClassFunction regular_character() const;
};

/// Burnside's class-algebra method. Errors: BudgetExceeded (too many
/// classes), DegenerateEigenspaces (no separating combination found in 20
/// attempts or the result fails its quality gates).
CharacterTable compute_character_table(const GroupPtr& group, const Budget& budget = {},
                                       std::uint64_t seed = kDefaultTableSeed);

/// (1/|G|) sum_C |C| f1(C) conj(f2(C)). Throws GroupMismatch.
Complex inner_product(const CharacterTable& table, const ClassFunction& f1, const ClassFunction& f2);

/// Rounds x, throwing `kind` if it is farther than the tolerance from an integer.
long long round_checked(Complex x, ErrorKind kind, const std::string& what,
                        double tolerance = kIntegralityTolerance);

struct TensorMultiplicities {
  std::size_t k = 0;
  std::vector<int> m;
  double max_residual = 0.0;

  int operator()(std::size_t i, std::size_t j, std::size_t l) const { return m[(i * k + j) * k + l]; }
};

/// m[i][j][l] = <chi_i chi_j, chi_l>. Throws NonIntegralMultiplicity.
TensorMultiplicities tensor_multiplicities(const CharacterTable& table);

struct Indicator {
  int value = 0;
  /// Distance of the raw sum from `value`.
  double residual = 0.0;
  /// For the twisted indicator: gap between the two evaluation routes.
  double route_gap = 0.0;
};

/// (1/|G|) sum_g chi(g^2). Throws NonIntegralIndicator / ValueOutOfRange.
Indicator fs_indicator(const CharacterTable& table, std::size_t row);

/// C_tau(rho) = (1/|G|) sum_g chi(tau(g)^-1 g), also evaluated as
/// (1/|G|) sum_g zeta_tau(g) conj(chi(g)); the two must agree.
std::vector<Indicator> twisted_fs_indicators(const CharacterTable& table, const GroupMap& tau);
Indicator twisted_fs_indicator(const CharacterTable& table, std::size_t row, const GroupMap& tau);
/// The trace formula applied to an arbitrary class function (not rounded).
Complex twisted_trace_sum(const CharacterTable& table, const ClassFunction& f, const GroupMap& tau);

/// Row j with chi_j(g) = chi_i(tau(g)). Throws NoMatchingRow.
std::size_t tau_conjugate_row(const CharacterTable& table, std::size_t row, const GroupMap& tau);
std::vector<std::size_t> tau_conjugate_rows(const CharacterTable& table, const GroupMap& tau);

struct SelfConjugateCensus {
  std::size_t count = 0;
  std::vector<bool> self_conjugate;
  std::size_t invariant_classes = 0;
  /// (1/|G|) sum zeta_tau^2, exact.
  std::uint64_t zeta_square_average = 0;
};

/// Counts tau-self-conjugate rows and checks the count against the
/// tau-invariant classes and the averaged zeta square sum.
/// Throws CrossCheckFailed.
SelfConjugateCensus self_conjugate_census(const CharacterTable& table, const GroupMap& tau,
                                          const TwistedCounts& zeta);

/// max over classes of |zeta_tau(g) - sum_sigma C_tau(sigma) chi_sigma(g)|.
double zeta_expansion_check(const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta);

/// Checks that `embedding` (sub id -> parent id) is an injective
/// homomorphism. Throws NotASubgroup.
void check_embedding(const GroupTable& parent, const GroupTable& sub, std::span<const ElementId> embedding);

ClassFunction restrict_character(const CharacterTable& parent, const CharacterTable& sub,
                                 std::span<const ElementId> embedding, const ClassFunction& chi);

/// Ind_K^G f(g) = (1/|K|) sum_{x in G} f(x^-1 g x), with f extended by 0
/// off K. Frobenius reciprocity is checked against every row of `parent`;
/// CrossCheckFailed when it fails.
ClassFunction induce_character(const CharacterTable& parent, const CharacterTable& sub,
                               std::span<const ElementId> embedding, const ClassFunction& f,
                               double* reciprocity_residual = nullptr);

/// Multiplicities of the irreducible rows in a character. Throws
/// NonIntegralMultiplicity.
std::vector<int> decompose(const CharacterTable& table, const ClassFunction& chi);

struct CliffordCase {
  std::size_t sigma = 0;
  /// 1: Ind irreducible, Res Ind = sigma + h-sigma. 2: Ind = theta + theta eps.
  int which = 0;
  std::size_t h_conjugate = 0;
  std::vector<std::size_t> constituents;
};

struct CliffordTheoryReport {
  GroupPtr extension;
  std::vector<CliffordCase> cases;
  std::size_t n_orbits = 0;
  std::size_t g_orbits = 0;
  double max_residual = 0.0;
};

/// Builds N x| <alpha> and classifies every irreducible of N into exactly one
/// of the two Clifford cases. Throws CaseClassificationFailed.
CliffordTheoryReport clifford_theory_check(const GroupMap& tau, const Budget& budget = {},
                                           std::uint64_t seed = kDefaultTableSeed);

}  // namespace taumackey
