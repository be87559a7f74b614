#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taumackey/error.hpp"

namespace taumackey {

/// Dense element index. Id 0 is always the identity.
using ElementId = std::uint32_t;
inline constexpr ElementId kIdentity = 0;

inline constexpr std::size_t kDefaultOrderCap = 20000;
/// Groups up to this order carry a materialized multiplication table.
inline constexpr std::size_t kDenseTableLimit = 4096;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// An element +-gamma_A of the Clifford group CL(n); `subset` is a bitmask
/// with bit (i-1) standing for the point i.
struct CliffordElement {
  bool negative = false;
  std::uint32_t subset = 0;

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Number of pairs (a, b) in A x B with a > b.
int clifford_xi(std::uint32_t a, std::uint32_t b);
CliffordElement clifford_multiply(const CliffordElement& x, const CliffordElement& y);
CliffordElement clifford_inverse(const CliffordElement& x);
std::string clifford_label(const CliffordElement& x);

/// Permutation of the points {1..degree}, stored 0-based. Products compose
/// right to left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t degree);
  /// Parses cycle notation such as "(1 2)(3 4 5)" or "(1,2)"; "()" is the identity.
  static Permutation parse(std::string_view cycles, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Canonical cycle notation: each cycle starts at its least point, cycles
  /// sorted by least point, fixed points omitted.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Everything needed to assemble a GroupTable. Either `table` is filled
/// (order*order entries, row-major) or `multiply` is set.
struct GroupData {
  std::size_t order = 0;
  std::vector<ElementId> table;
  std::function<ElementId(ElementId, ElementId)> multiply;
  std::vector<ElementId> inverses;
  std::vector<std::string> labels;
  std::vector<ElementId> generators;
  std::string family_tag;
  std::size_t permutation_degree = 0;
  std::vector<CliffordElement> clifford_model;
  int clifford_rank = -1;
  GroupPtr product_left;
  GroupPtr product_right;
};

/// A fully enumerated finite group. Immutable after construction.
class GroupTable {
 public:
  explicit GroupTable(GroupData data);

  std::size_t order() const { return order_; }
  ElementId mul(ElementId a, ElementId b) const {
    return table_.empty() ? multiply_(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(x, g), inv(x)); }
  ElementId power(ElementId g, std::int64_t exponent) const;
  std::size_t element_order(ElementId g) const;

  const std::string& label(ElementId g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Looks an element up by label; permutation groups also accept any cycle
  /// notation of the element.
  std::optional<ElementId> find(std::string_view label) const;
  ElementId require(std::string_view label) const;

  const std::vector<ElementId>& generators() const { return generators_; }
  const std::string& family_tag() const { return family_tag_; }
  bool has_dense_table() const { return !table_.empty(); }
  bool is_abelian() const;
  /// Process-unique id used to detect mixing of class functions.
  std::uint64_t uid() const { return uid_; }

  std::size_t permutation_degree() const { return permutation_degree_; }
  int clifford_rank() const { return clifford_rank_; }
  const std::vector<CliffordElement>& clifford_model() const { return clifford_model_; }
  const GroupPtr& product_left() const { return product_left_; }
  const GroupPtr& product_right() const { return product_right_; }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::function<ElementId(ElementId, ElementId)> multiply_;
  std::vector<ElementId> inverses_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> by_label_;
  std::vector<ElementId> generators_;
  std::string family_tag_;
  std::size_t permutation_degree_;
  std::vector<CliffordElement> clifford_model_;
  int clifford_rank_;
  GroupPtr product_left_;
  GroupPtr product_right_;
  std::uint64_t uid_;
};

/// Result of a Cayley closure: elements in discovery order with the
/// identity moved to the front.
template <class Elem>
struct Closure {
  std::vector<Elem> elements;
  std::vector<ElementId> generator_ids;
};

/// Closes `generators` under `compose`. Throws ClosureCapExceeded when more
/// than `cap` elements appear and NonGroup when no identity is found.
template <class Elem, class Compose, class Hash = std::hash<Elem>>
Closure<Elem> close_under(const std::vector<Elem>& generators, Compose compose,
                          std::size_t cap = kDefaultOrderCap) {
  if (generators.empty()) throw Error(ErrorKind::NonGroup, "empty generator list");
  std::vector<Elem> elems;
  std::unordered_map<Elem, ElementId, Hash> index;
  auto add = [&](const Elem& e) {
    auto [it, inserted] = index.emplace(e, static_cast<ElementId>(elems.size()));
    if (inserted) {
      elems.push_back(e);
      if (elems.size() > cap)
        throw Error(ErrorKind::ClosureCapExceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
    }
    return it->second;
  };
  std::vector<ElementId> gen_ids;
  for (const auto& g : generators) gen_ids.push_back(add(g));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) add(compose(elems[i], g));
  }

  // Identity: the element fixing one probe, verified on every generator.
  const Elem& probe = generators.front();
  std::optional<std::size_t> identity;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (compose(elems[i], probe) == probe) {
      identity = i;
      break;
    }
  }
  if (!identity) throw Error(ErrorKind::NonGroup, "no identity element in closure");
  for (const auto& g : generators) {
    if (!(compose(elems[*identity], g) == g) || !(compose(g, elems[*identity]) == g))
      throw Error(ErrorKind::NonGroup, "probe identity fails on a generator");
  }

  Closure<Elem> out;
  out.elements.reserve(elems.size());
  out.elements.push_back(elems[*identity]);
  std::vector<ElementId> remap(elems.size());
  remap[*identity] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i == *identity) continue;
    remap[i] = static_cast<ElementId>(out.elements.size());
    out.elements.push_back(elems[i]);
  }
  for (ElementId g : gen_ids) out.generator_ids.push_back(remap[g]);
  return out;
}

/// Builds a GroupTable from a closure of concrete elements. The table is
/// materialized up to kDenseTableLimit, otherwise products are computed on
/// demand from the concrete representation.
template <class Elem, class Compose, class Hash = std::hash<Elem>>
GroupData tabulate(Closure<Elem> closure, Compose compose,
                   std::function<std::string(const Elem&)> to_label) {
  struct State {
    std::vector<Elem> elements;
    std::unordered_map<Elem, ElementId, Hash> index;
  };
  auto state = std::make_shared<State>();
  state->elements = std::move(closure.elements);
  const std::size_t n = state->elements.size();
  for (std::size_t i = 0; i < n; ++i) state->index.emplace(state->elements[i], static_cast<ElementId>(i));

  GroupData data;
  data.order = n;
  data.generators = std::move(closure.generator_ids);
  auto lookup = [state, compose](ElementId a, ElementId b) -> ElementId {
    auto it = state->index.find(compose(state->elements[a], state->elements[b]));
    if (it == state->index.end()) throw Error(ErrorKind::NonGroup, "product escapes the closure");
    return it->second;
  };
  if (n <= kDenseTableLimit) {
    data.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data.table[a * n + b] = lookup(static_cast<ElementId>(a), static_cast<ElementId>(b));
  } else {
    data.multiply = lookup;
  }

  // Inverses via powers: g^(k-1) where g^k = 1.
  data.inverses.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    ElementId prev = kIdentity;
    ElementId cur = static_cast<ElementId>(g);
    std::size_t steps = 0;
    while (cur != kIdentity) {
      prev = cur;
      cur = lookup(cur, static_cast<ElementId>(g));
      if (++steps > n) throw Error(ErrorKind::NonGroup, "element without inverse");
    }
    data.inverses[g] = g == 0 ? kIdentity : prev;
  }
  data.labels.reserve(n);
  for (const auto& e : state->elements) data.labels.push_back(to_label(e));
  return data;
}

// Builtin families.
GroupPtr make_cyclic(std::size_t n);
/// Dihedral group of order 2n (symmetries of the n-gon).
GroupPtr make_dihedral(std::size_t n);
GroupPtr make_symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap);
GroupPtr make_alternating(std::size_t n, std::size_t cap = kDefaultOrderCap);
GroupPtr make_quaternion8();
/// CL(n) = {+-gamma_A : A in {1..n}}, order 2^(n+1).
GroupPtr make_clifford(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// Element (g, h) has id g*|right| + h.
GroupPtr make_direct_product(const GroupPtr& left, const GroupPtr& right,
                             std::size_t cap = kDefaultOrderCap);
/// G^n as iterated direct products ((G x G) x G) ...
GroupPtr make_direct_power(const GroupPtr& group, std::size_t n, std::size_t cap = kDefaultOrderCap);

/// The closure of permutation generators given in cycle notation on 1..degree.
GroupPtr make_permutation_group(const std::vector<std::string>& generators, std::size_t degree,
                                std::size_t cap = kDefaultOrderCap);
GroupPtr make_permutation_group(const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultOrderCap);

/// Generic family dispatch: cyclic, dihedral, symmetric, alternating,
/// quaternion8, clifford.
GroupPtr construct_family(std::string_view name, std::size_t n, std::size_t cap = kDefaultOrderCap);

/// A subgroup presented both as a subset of its parent and as a standalone
/// GroupTable whose element i is the parent element `elements[i]`.
struct Subgroup {
  GroupPtr parent;
  std::vector<ElementId> elements;
  GroupPtr group;
  std::vector<std::int32_t> index_of;

  bool contains(ElementId g) const { return index_of[g] >= 0; }
  std::size_t order() const { return elements.size(); }
};

/// Throws NotASubgroup unless `elements` contains 1 and is closed.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<ElementId> elements);
Subgroup generated_subgroup(const GroupPtr& parent, const std::vector<ElementId>& generators);

struct AxiomReport {
  bool ok = true;
  bool exhaustive = true;
  std::string witness;
};

/// Associativity, identity and inverse axioms plus Cayley reachability.
/// Exhaustive on triples up to order 256, otherwise `samples` random triples.
AxiomReport verify_axioms(const GroupTable& group, std::uint64_t seed = 1,
                          std::size_t samples = 100000);

}  // namespace taumackey
