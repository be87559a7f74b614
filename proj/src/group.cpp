#include "taumackey/group.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace taumackey {

namespace {

std::atomic<std::uint64_t> next_uid{1};

struct CliffordHash {
  std::size_t operator()(const CliffordElement& c) const noexcept {
    return (static_cast<std::size_t>(c.subset) << 1) | (c.negative ? 1u : 0u);
  }
};

// Quaternion unit: sign plus basis index 0..3 for 1, i, j, k.
struct QuaternionUnit {
  bool negative = false;
  int basis = 0;
  friend bool operator==(const QuaternionUnit&, const QuaternionUnit&) = default;
};

struct QuaternionHash {
  std::size_t operator()(const QuaternionUnit& q) const noexcept {
    return static_cast<std::size_t>(q.basis * 2 + (q.negative ? 1 : 0));
  }
};

QuaternionUnit quaternion_multiply(const QuaternionUnit& x, const QuaternionUnit& y) {
  // kTable[a][b] = signed basis of e_a * e_b, encoded as +-(basis+1).
  static constexpr int kTable[4][4] = {
      {1, 2, 3, 4},
      {2, -1, 4, -3},
      {3, -4, -1, 2},
      {4, 3, -2, -1},
  };
  const int v = kTable[x.basis][y.basis];
  QuaternionUnit out;
  out.basis = std::abs(v) - 1;
  out.negative = (v < 0) != (x.negative != y.negative);
  return out;
}

std::string quaternion_label(const QuaternionUnit& q) {
  static constexpr const char* kNames[4] = {"1", "i", "j", "k"};
  return (q.negative ? "-" : "") + std::string(kNames[q.basis]);
}

std::string power_label(const std::string& symbol, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return symbol + "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------- Clifford

int clifford_xi(std::uint32_t a, std::uint32_t b) {
  // For each a in A count the b in B below it.
  int count = 0;
  while (a != 0) {
    const int bit = std::countr_zero(a);
    const std::uint32_t below = bit == 0 ? 0u : (b & ((1u << bit) - 1u));
    count += std::popcount(below);
    a &= a - 1;
  }
  return count;
}

CliffordElement clifford_multiply(const CliffordElement& x, const CliffordElement& y) {
  CliffordElement out;
  const bool xi_odd = (clifford_xi(x.subset, y.subset) & 1) != 0;
  out.negative = (x.negative != y.negative) != xi_odd;
  out.subset = x.subset ^ y.subset;
  return out;
}

CliffordElement clifford_inverse(const CliffordElement& x) {
  const int size = std::popcount(x.subset);
  const bool flip = ((size * (size - 1) / 2) & 1) != 0;
  return CliffordElement{x.negative != flip, x.subset};
}

std::string clifford_label(const CliffordElement& x) {
  std::string out = x.negative ? "-g{" : "g{";
  bool first = true;
  for (int bit = 0; bit < 32; ++bit) {
    if ((x.subset >> bit) & 1u) {
      if (!first) out += ',';
      out += std::to_string(bit + 1);
      first = false;
    }
  }
  return out + "}";
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(ErrorKind::InvalidSpec, "image list is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidSpec, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<std::uint16_t>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
  return h;
}

// -------------------------------------------------------------- GroupTable

GroupTable::GroupTable(GroupData data)
    : order_(data.order),
      table_(std::move(data.table)),
      multiply_(std::move(data.multiply)),
      inverses_(std::move(data.inverses)),
      labels_(std::move(data.labels)),
      generators_(std::move(data.generators)),
      family_tag_(std::move(data.family_tag)),
      permutation_degree_(data.permutation_degree),
      clifford_model_(std::move(data.clifford_model)),
      clifford_rank_(data.clifford_rank),
      product_left_(std::move(data.product_left)),
      product_right_(std::move(data.product_right)),
      uid_(next_uid.fetch_add(1)) {
  if (order_ == 0) throw Error(ErrorKind::NonGroup, "empty group");
  if (table_.empty() && !multiply_) throw Error(ErrorKind::NonGroup, "no multiplication supplied");
  if (inverses_.size() != order_ || labels_.size() != order_)
    throw Error(ErrorKind::NonGroup, "inverse or label table has the wrong size");
  if (generators_.empty()) generators_.push_back(kIdentity);
  for (std::size_t g = 0; g < order_; ++g) by_label_.emplace(labels_[g], static_cast<ElementId>(g));
}

ElementId GroupTable::power(ElementId g, std::int64_t exponent) const {
  if (exponent < 0) {
    g = inv(g);
    exponent = -exponent;
  }
  ElementId result = kIdentity;
  ElementId base = g;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(ElementId g) const {
  std::size_t k = 1;
  for (ElementId cur = g; cur != kIdentity; cur = mul(cur, g)) ++k;
  return k;
}

std::optional<ElementId> GroupTable::find(std::string_view label) const {
  if (auto it = by_label_.find(std::string(label)); it != by_label_.end()) return it->second;
  if (permutation_degree_ > 0) {
    try {
      const auto canonical = Permutation::parse(label, permutation_degree_).to_cycle_string();
      if (auto it = by_label_.find(canonical); it != by_label_.end()) return it->second;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

ElementId GroupTable::require(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorKind::UnknownLabel, "no element labelled '" + std::string(label) + "' in " + family_tag_);
}

bool GroupTable::is_abelian() const {
  for (ElementId a : generators_)
    for (ElementId b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------- families

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "cyclic(0)");
  GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.table[a * n + b] = static_cast<ElementId>((a + b) % n);
  d.inverses.resize(n);
  for (std::size_t a = 0; a < n; ++a) d.inverses[a] = static_cast<ElementId>((n - a) % n);
  for (std::size_t a = 0; a < n; ++a) d.labels.push_back(a == 0 ? "e" : power_label("a", a));
  d.generators = {n == 1 ? kIdentity : ElementId{1}};
  d.family_tag = "cyclic(" + std::to_string(n) + ")";
  return std::make_shared<const GroupTable>(std::move(d));
}

GroupPtr make_dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "dihedral(0)");
  // r^k s^e has id e*n + k; s r s = r^-1.
  const std::size_t order = 2 * n;
  auto id = [n](std::size_t k, std::size_t e) { return static_cast<ElementId>(e * n + k % n); };
  GroupData d;
  d.order = order;
  d.table.resize(order * order);
  d.inverses.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, e = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, f = y / n;
      const std::size_t k = e == 0 ? a + b : a + n - b;
      d.table[x * order + y] = id(k, (e + f) % 2);
    }
    d.inverses[x] = e == 0 ? id(n - a, 0) : static_cast<ElementId>(x);
    std::string label = power_label("r", a);
    if (e == 1) label = label.empty() ? "s" : label + " s";
    d.labels.push_back(label.empty() ? "e" : label);
  }
  d.generators = {id(1, 0), id(0, 1)};
  d.family_tag = "dihedral(" + std::to_string(n) + ")";
  return std::make_shared<const GroupTable>(std::move(d));
}

GroupPtr make_permutation_group(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::NonGroup, "empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(ErrorKind::InvalidSpec, "generators of different degree");
  auto compose = [](const Permutation& a, const Permutation& b) { return a * b; };
  auto closure = close_under<Permutation, decltype(compose), PermutationHash>(generators, compose, cap);
  auto data = tabulate<Permutation, decltype(compose), PermutationHash>(
      std::move(closure), compose, [](const Permutation& p) { return p.to_cycle_string(); });
  data.permutation_degree = degree;
  data.family_tag = "permutation(degree " + std::to_string(degree) + ")";
  return std::make_shared<const GroupTable>(std::move(data));
}

GroupPtr make_permutation_group(const std::vector<std::string>& generators, std::size_t degree,
                                std::size_t cap) {
  if (degree == 0) throw Error(ErrorKind::InvalidSpec, "permutation degree must be positive");
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.push_back(Permutation::parse(g, degree));
  return make_permutation_group(perms, cap);
}

namespace {

GroupPtr retag(const GroupPtr& g, std::string tag) {
  GroupData d;
  d.order = g->order();
  if (g->has_dense_table()) {
    d.table.resize(d.order * d.order);
    for (std::size_t a = 0; a < d.order; ++a)
      for (std::size_t b = 0; b < d.order; ++b)
        d.table[a * d.order + b] = g->mul(static_cast<ElementId>(a), static_cast<ElementId>(b));
  } else {
    d.multiply = [g](ElementId a, ElementId b) { return g->mul(a, b); };
  }
  for (std::size_t a = 0; a < d.order; ++a) d.inverses.push_back(g->inv(static_cast<ElementId>(a)));
  d.labels = g->labels();
  d.generators = g->generators();
  d.family_tag = std::move(tag);
  d.permutation_degree = g->permutation_degree();
  return std::make_shared<const GroupTable>(std::move(d));
}

std::vector<Permutation> long_cycle(std::size_t first, std::size_t last, std::size_t degree) {
  // The cycle (first first+1 ... last), 1-based.
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (std::size_t p = first; p < last; ++p) images[p - 1] = static_cast<std::uint16_t>(p);
  images[last - 1] = static_cast<std::uint16_t>(first - 1);
  return {Permutation(std::move(images))};
}

}  // namespace

GroupPtr make_symmetric(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "symmetric(0)");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::identity(1));
  } else {
    gens.push_back(Permutation::parse("(1 2)", n));
    if (n > 2) gens.push_back(long_cycle(1, n, n).front());
  }
  return retag(make_permutation_group(gens, cap), "symmetric(" + std::to_string(n) + ")");
}

GroupPtr make_alternating(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "alternating(0)");
  std::vector<Permutation> gens;
  if (n < 3) {
    gens.push_back(Permutation::identity(n));
  } else {
    gens.push_back(Permutation::parse("(1 2 3)", n));
    if (n > 3) gens.push_back(long_cycle(n % 2 == 1 ? 1 : 2, n, n).front());
  }
  return retag(make_permutation_group(gens, cap), "alternating(" + std::to_string(n) + ")");
}

GroupPtr make_quaternion8() {
  auto compose = [](const QuaternionUnit& a, const QuaternionUnit& b) { return quaternion_multiply(a, b); };
  std::vector<QuaternionUnit> gens{{false, 1}, {false, 2}};
  auto closure = close_under<QuaternionUnit, decltype(compose), QuaternionHash>(gens, compose);
  // Canonical order 1, -1, i, -i, j, -j, k, -k keeps ids readable.
  std::sort(closure.elements.begin(), closure.elements.end(), [](const auto& a, const auto& b) {
    return std::pair(a.basis, a.negative) < std::pair(b.basis, b.negative);
  });
  auto data = tabulate<QuaternionUnit, decltype(compose), QuaternionHash>(
      std::move(closure), compose, quaternion_label);
  data.generators = {2, 4};
  data.family_tag = "quaternion8";
  return std::make_shared<const GroupTable>(std::move(data));
}

GroupPtr make_clifford(std::size_t n, std::size_t cap) {
  if (n == 0 || n > 30) throw Error(ErrorKind::InvalidSpec, "clifford(n) needs 1 <= n <= 30");
  if ((std::size_t{2} << n) > cap)
    throw Error(ErrorKind::ClosureCapExceeded, "clifford(" + std::to_string(n) + ") has order 2^" +
                                                   std::to_string(n + 1));
  auto compose = [](const CliffordElement& a, const CliffordElement& b) { return clifford_multiply(a, b); };
  std::vector<CliffordElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back({false, 1u << i});
  gens.push_back({true, 0u});  // epsilon = -gamma_empty
  auto closure = close_under<CliffordElement, decltype(compose), CliffordHash>(gens, compose, cap);
  // Order by (subset, sign): id 2*A + sign.
  std::sort(closure.elements.begin(), closure.elements.end(), [](const auto& a, const auto& b) {
    return std::pair(a.subset, a.negative) < std::pair(b.subset, b.negative);
  });
  std::vector<CliffordElement> model = closure.elements;
  closure.generator_ids.clear();
  for (std::size_t i = 0; i < n; ++i) closure.generator_ids.push_back(static_cast<ElementId>(2u << i));
  closure.generator_ids.push_back(1);
  auto data = tabulate<CliffordElement, decltype(compose), CliffordHash>(
      std::move(closure), compose, clifford_label);
  data.family_tag = "clifford(" + std::to_string(n) + ")";
  data.clifford_model = std::move(model);
  data.clifford_rank = static_cast<int>(n);
  return std::make_shared<const GroupTable>(std::move(data));
}

GroupPtr make_direct_product(const GroupPtr& left, const GroupPtr& right, std::size_t cap) {
  const std::size_t nl = left->order(), nr = right->order();
  const std::size_t order = nl * nr;
  if (order > cap)
    throw Error(ErrorKind::ClosureCapExceeded, "direct product of order " + std::to_string(order));
  auto multiply = [left, right, nr](ElementId x, ElementId y) {
    return static_cast<ElementId>(left->mul(x / nr, y / nr) * nr + right->mul(x % nr, y % nr));
  };
  GroupData d;
  d.order = order;
  if (order <= kDenseTableLimit) {
    d.table.resize(order * order);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        d.table[x * order + y] = multiply(static_cast<ElementId>(x), static_cast<ElementId>(y));
  } else {
    d.multiply = multiply;
  }
  for (std::size_t x = 0; x < order; ++x) {
    const auto a = static_cast<ElementId>(x / nr), b = static_cast<ElementId>(x % nr);
    d.inverses.push_back(static_cast<ElementId>(left->inv(a) * nr + right->inv(b)));
    d.labels.push_back("(" + left->label(a) + "," + right->label(b) + ")");
  }
  for (ElementId g : left->generators())
    if (g != kIdentity) d.generators.push_back(static_cast<ElementId>(g * nr));
  for (ElementId h : right->generators())
    if (h != kIdentity) d.generators.push_back(h);
  d.family_tag = "direct_product(" + left->family_tag() + "," + right->family_tag() + ")";
  d.product_left = left;
  d.product_right = right;
  return std::make_shared<const GroupTable>(std::move(d));
}

GroupPtr make_direct_power(const GroupPtr& group, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "direct power needs n >= 1");
  GroupPtr out = group;
  for (std::size_t i = 1; i < n; ++i) out = make_direct_product(out, group, cap);
  return out;
}

GroupPtr construct_family(std::string_view name, std::size_t n, std::size_t cap) {
  GroupPtr g;
  if (name == "cyclic") g = make_cyclic(n);
  else if (name == "dihedral") g = make_dihedral(n);
  else if (name == "symmetric") g = make_symmetric(n, cap);
  else if (name == "alternating") g = make_alternating(n, cap);
  else if (name == "quaternion8") g = make_quaternion8();
  else if (name == "clifford") g = make_clifford(n, cap);
  else throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
  if (g->order() > cap)
    throw Error(ErrorKind::ClosureCapExceeded, std::string(name) + " has order " + std::to_string(g->order()));
  return g;
}

// --------------------------------------------------------------- subgroups

namespace {

Subgroup finish_subgroup(const GroupPtr& parent, std::vector<ElementId> elements,
                         std::vector<ElementId> parent_generators) {
  Subgroup s;
  s.parent = parent;
  s.elements = std::move(elements);
  s.index_of.assign(parent->order(), -1);
  for (std::size_t i = 0; i < s.elements.size(); ++i) s.index_of[s.elements[i]] = static_cast<std::int32_t>(i);

  const std::size_t n = s.elements.size();
  GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      d.table[a * n + b] = static_cast<ElementId>(s.index_of[parent->mul(s.elements[a], s.elements[b])]);
  for (std::size_t a = 0; a < n; ++a) {
    d.inverses.push_back(static_cast<ElementId>(s.index_of[parent->inv(s.elements[a])]));
    d.labels.push_back(parent->label(s.elements[a]));
  }
  for (ElementId g : parent_generators) d.generators.push_back(static_cast<ElementId>(s.index_of[g]));
  d.family_tag = "subgroup of " + parent->family_tag();
  d.permutation_degree = parent->permutation_degree();
  s.group = std::make_shared<const GroupTable>(std::move(d));
  return s;
}

std::vector<ElementId> closure_of(const GroupTable& g, const std::vector<ElementId>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> out{kIdentity};
  in[kIdentity] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId s : gens) {
      const ElementId next = g.mul(out[i], s);
      if (!in[next]) {
        in[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup make_subgroup(const GroupPtr& parent, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != kIdentity)
    throw Error(ErrorKind::NotASubgroup, "subset does not contain the identity");
  std::vector<bool> in(parent->order(), false);
  for (ElementId g : elements) {
    if (g >= parent->order()) throw Error(ErrorKind::NotASubgroup, "element id out of range");
    in[g] = true;
  }
  for (ElementId a : elements) {
    if (!in[parent->inv(a)]) throw Error(ErrorKind::NotASubgroup, "not closed under inverses at " + parent->label(a));
    for (ElementId b : elements)
      if (!in[parent->mul(a, b)])
        throw Error(ErrorKind::NotASubgroup,
                    "not closed: " + parent->label(a) + " * " + parent->label(b));
  }
  // Greedy generating set.
  std::vector<ElementId> gens;
  std::vector<bool> reached(parent->order(), false);
  reached[kIdentity] = true;
  for (ElementId g : elements) {
    if (reached[g]) continue;
    gens.push_back(g);
    for (ElementId x : closure_of(*parent, gens)) reached[x] = true;
  }
  return finish_subgroup(parent, std::move(elements), std::move(gens));
}

Subgroup generated_subgroup(const GroupPtr& parent, const std::vector<ElementId>& generators) {
  for (ElementId g : generators)
    if (g >= parent->order()) throw Error(ErrorKind::NotASubgroup, "generator id out of range");
  return finish_subgroup(parent, closure_of(*parent, generators), generators);
}

// ------------------------------------------------------------------ axioms

AxiomReport verify_axioms(const GroupTable& g, std::uint64_t seed, std::size_t samples) {
  AxiomReport report;
  const std::size_t n = g.order();
  auto fail = [&](std::string why) {
    report.ok = false;
    report.witness = std::move(why);
    return report;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<ElementId>(a);
    if (g.mul(kIdentity, x) != x || g.mul(x, kIdentity) != x) return fail("identity fails at " + g.label(x));
    if (g.mul(x, g.inv(x)) != kIdentity || g.mul(g.inv(x), x) != kIdentity)
      return fail("inverse fails at " + g.label(x));
  }
  auto check = [&](ElementId a, ElementId b, ElementId c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 256) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!check(a, b, c))
            return fail("associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      if (!check(a, b, c))
        return fail("associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
    }
  }
  std::vector<bool> reached(n, false);
  std::deque<ElementId> queue{kIdentity};
  reached[kIdentity] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId s : g.generators()) {
      const ElementId y = g.mul(x, s);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  if (count != n) return fail("generators reach only " + std::to_string(count) + " elements");
  return report;
}

}  // namespace taumackey
