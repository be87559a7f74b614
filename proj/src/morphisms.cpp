#include "taumackey/morphisms.hpp"

#include <bit>
#include <deque>
#include <optional>
#include <random>

namespace taumackey {

std::string_view to_string(MapKind kind) {
  return kind == MapKind::Automorphism ? "automorphism" : "anti-automorphism";
}

GroupMap::GroupMap(GroupPtr target, std::vector<ElementId> images, MapKind kind, bool involutory,
                   bool exhaustive)
    : target_(std::move(target)),
      images_(std::move(images)),
      kind_(kind),
      involutory_(involutory),
      exhaustive_(exhaustive) {}

bool GroupMap::is_identity() const {
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (images_[g] != g) return false;
  return true;
}

void GroupMap::require(MapKind kind, bool involutory) const {
  if (kind_ != kind)
    throw Error(ErrorKind::WrongKind, "expected an " + std::string(to_string(kind)) + ", got an " +
                                          std::string(to_string(kind_)));
  if (involutory && !involutory_) throw Error(ErrorKind::NotInvolutory, "map is not involutory");
}

namespace {

bool respects(const GroupTable& g, const std::vector<ElementId>& img, MapKind kind, ElementId a,
              ElementId b) {
  const ElementId lhs = img[g.mul(a, b)];
  const ElementId rhs = kind == MapKind::Automorphism ? g.mul(img[a], img[b]) : g.mul(img[b], img[a]);
  return lhs == rhs;
}

std::optional<std::pair<ElementId, ElementId>> find_violation(const GroupTable& g,
                                                             const std::vector<ElementId>& img,
                                                             MapKind kind, std::uint64_t seed,
                                                             bool& exhaustive) {
  const std::size_t n = g.order();
  exhaustive = n <= kExhaustiveMapCheckLimit;
  if (exhaustive) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (!respects(g, img, kind, a, b)) return std::pair(a, b);
    return std::nullopt;
  }
  for (ElementId s : g.generators())
    for (ElementId x = 0; x < n; ++x) {
      if (!respects(g, img, kind, x, s)) return std::pair(x, s);
      if (!respects(g, img, kind, s, x)) return std::pair(s, x);
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  for (int i = 0; i < 100000; ++i) {
    const ElementId a = pick(rng), b = pick(rng);
    if (!respects(g, img, kind, a, b)) return std::pair(a, b);
  }
  return std::nullopt;
}

bool is_involution(const std::vector<ElementId>& img) {
  for (std::size_t g = 0; g < img.size(); ++g)
    if (img[img[g]] != g) return false;
  return true;
}

}  // namespace

GroupMap validate(const GroupPtr& group, std::vector<ElementId> images, MapKind claimed, std::uint64_t seed) {
  const GroupTable& g = *group;
  if (images.size() != g.order())
    throw Error(ErrorKind::NotBijective, "image list has " + std::to_string(images.size()) +
                                             " entries for a group of order " + std::to_string(g.order()));
  std::vector<bool> hit(g.order(), false);
  for (ElementId v : images) {
    if (v >= g.order() || hit[v]) throw Error(ErrorKind::NotBijective, "images do not form a permutation");
    hit[v] = true;
  }
  bool exhaustive = true;
  if (auto w = find_violation(g, images, claimed, seed, exhaustive)) {
    const auto [a, b] = *w;
    const ElementId lhs = images[g.mul(a, b)];
    const ElementId rhs =
        claimed == MapKind::Automorphism ? g.mul(images[a], images[b]) : g.mul(images[b], images[a]);
    throw Error(ErrorKind::HomomorphismViolation,
                "not an " + std::string(to_string(claimed)) + ": witness (" + g.label(a) + ", " + g.label(b) +
                    ") maps the product to " + g.label(lhs) + " but expected " + g.label(rhs));
  }
  const bool invol = is_involution(images);
  return GroupMap(group, std::move(images), claimed, invol, exhaustive);
}

GroupMap tau_inverse(const GroupPtr& group) {
  std::vector<ElementId> img(group->order());
  for (ElementId g = 0; g < group->order(); ++g) img[g] = group->inv(g);
  // Inversion is always an involutory anti-automorphism.
  return GroupMap(group, std::move(img), MapKind::AntiAutomorphism, true, true);
}

GroupMap tau_identity(const GroupPtr& group) {
  std::vector<ElementId> img(group->order());
  for (ElementId g = 0; g < group->order(); ++g) img[g] = g;
  return validate(group, std::move(img), MapKind::AntiAutomorphism);
}

GroupMap tau_inner(const GroupPtr& group, ElementId g0) {
  const GroupTable& g = *group;
  std::vector<ElementId> img(g.order());
  for (ElementId x = 0; x < g.order(); ++x) img[x] = g.conj(g0, g.inv(x));
  GroupMap map = validate(group, std::move(img), MapKind::AntiAutomorphism);
  if (!map.involutory())
    throw Error(ErrorKind::NotInvolutory,
                "tau_inner(" + g.label(g0) + ") squares to conjugation by g0^2, which is not central");
  return map;
}

GroupMap tau_clifford(const GroupPtr& group) {
  const int n = group->clifford_rank();
  if (n < 0) throw Error(ErrorKind::NotCliffordGroup, group->family_tag() + " is not a Clifford group");
  if (n % 4 != 3) return tau_inverse(group);
  const auto& model = group->clifford_model();
  std::vector<ElementId> img(group->order());
  for (ElementId x = 0; x < group->order(); ++x) {
    const CliffordElement& e = model[x];
    const int a = std::popcount(e.subset);
    const bool flip = ((a * (a + 1) / 2) & 1) != 0;
    // ids are 2*subset + sign
    img[x] = static_cast<ElementId>(2 * e.subset + ((e.negative != flip) ? 1 : 0));
  }
  return validate(group, std::move(img), MapKind::AntiAutomorphism);
}

GroupMap product_map(const GroupMap& left, const GroupMap& right, const GroupPtr& product) {
  if (product->product_left() == nullptr || product->product_left()->uid() != left.group().uid() ||
      product->product_right()->uid() != right.group().uid())
    throw Error(ErrorKind::GroupMismatch, "product factors do not match the maps");
  if (left.kind() != right.kind()) throw Error(ErrorKind::WrongKind, "factor maps of different kinds");
  const std::size_t nr = right.group().order();
  std::vector<ElementId> img(product->order());
  for (ElementId x = 0; x < product->order(); ++x)
    img[x] = static_cast<ElementId>(left(static_cast<ElementId>(x / nr)) * nr + right(static_cast<ElementId>(x % nr)));
  return GroupMap(product, std::move(img), left.kind(), left.involutory() && right.involutory(),
                  left.exhaustive() && right.exhaustive());
}

GroupMap extend_to_power(const GroupMap& tau, const GroupPtr& power, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "power must be positive");
  if (n == 1) {
    if (power->uid() != tau.group().uid()) throw Error(ErrorKind::GroupMismatch, "G^1 must be G itself");
    return tau;
  }
  const GroupPtr& inner = power->product_left();
  if (!inner) throw Error(ErrorKind::GroupMismatch, "target is not a direct power");
  GroupMap lower = extend_to_power(tau, inner, n - 1);
  return product_map(lower, tau, power);
}

GroupMap map_from_generator_images(const GroupPtr& group, const std::map<ElementId, ElementId>& images,
                                   MapKind kind, bool require_involutory) {
  const GroupTable& g = *group;
  for (ElementId s : g.generators())
    if (s != kIdentity && !images.count(s))
      throw Error(ErrorKind::InvalidSpec, "no image given for generator " + g.label(s));
  std::vector<ElementId> gens;
  for (const auto& [s, t] : images) {
    if (s >= g.order() || t >= g.order()) throw Error(ErrorKind::InvalidSpec, "generator image out of range");
    gens.push_back(s);
  }
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> img(g.order(), kUnset);
  img[kIdentity] = kIdentity;
  std::deque<ElementId> queue{kIdentity};
  while (!queue.empty()) {
    const ElementId w = queue.front();
    queue.pop_front();
    for (ElementId s : gens) {
      const ElementId ws = g.mul(w, s);
      const ElementId t = images.at(s);
      const ElementId value = kind == MapKind::AntiAutomorphism ? g.mul(t, img[w]) : g.mul(img[w], t);
      if (img[ws] == kUnset) {
        img[ws] = value;
        queue.push_back(ws);
      } else if (img[ws] != value) {
        throw Error(ErrorKind::InconsistentImages,
                    "two words for " + g.label(ws) + " give images " + g.label(img[ws]) + " and " + g.label(value));
      }
    }
  }
  for (ElementId v : img)
    if (v == kUnset) throw Error(ErrorKind::InvalidSpec, "generator images do not reach every element");
  GroupMap map = validate(group, std::move(img), kind);
  if (require_involutory && !map.involutory())
    throw Error(ErrorKind::NotInvolutory, "extended map is not an involution");
  return map;
}

GroupMap tau_from_generator_images(const GroupPtr& group, const std::map<ElementId, ElementId>& images,
                                   bool require_involutory) {
  return map_from_generator_images(group, images, MapKind::AntiAutomorphism, require_involutory);
}

GroupMap automorphism_conjugation(const GroupPtr& group, ElementId w) {
  std::vector<ElementId> img(group->order());
  for (ElementId x = 0; x < group->order(); ++x) img[x] = group->conj(w, x);
  return validate(group, std::move(img), MapKind::Automorphism);
}

GroupMap automorphism_swap_factors(const GroupPtr& product) {
  const auto& l = product->product_left();
  const auto& r = product->product_right();
  if (!l || !r || l->order() != r->order())
    throw Error(ErrorKind::NotAutomorphism, "swap needs a direct product of two equal-order factors");
  const std::size_t n = r->order();
  std::vector<ElementId> img(product->order());
  for (ElementId x = 0; x < product->order(); ++x)
    img[x] = static_cast<ElementId>((x % n) * n + x / n);
  try {
    return validate(product, std::move(img), MapKind::Automorphism);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAutomorphism, std::string("factor swap: ") + e.what());
  }
}

GroupMap automorphism_identity(const GroupPtr& group) {
  std::vector<ElementId> img(group->order());
  for (ElementId x = 0; x < group->order(); ++x) img[x] = x;
  return GroupMap(group, std::move(img), MapKind::Automorphism, true, true);
}

GroupMap compose(const GroupMap& second, const GroupMap& first) {
  if (second.group().uid() != first.group().uid())
    throw Error(ErrorKind::GroupMismatch, "maps on different groups");
  std::vector<ElementId> img(first.images().size());
  for (std::size_t g = 0; g < img.size(); ++g) img[g] = second(first(static_cast<ElementId>(g)));
  const MapKind kind = first.kind() == second.kind() ? MapKind::Automorphism : MapKind::AntiAutomorphism;
  return validate(first.target(), std::move(img), kind);
}

GroupPtr construct_semidirect_with_involution(const GroupMap& tau) {
  try {
    tau.require(MapKind::AntiAutomorphism, true);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidMap, e.what());
  }
  const GroupPtr base = tau.target();
  const GroupTable& nn = *base;
  const std::size_t n = nn.order();
  const std::size_t order = 2 * n;
  std::vector<ElementId> alpha(n);
  for (ElementId x = 0; x < n; ++x) alpha[x] = tau(nn.inv(x));

  GroupData d;
  d.order = order;
  auto multiply = [base, alpha, n](ElementId x, ElementId y) {
    const ElementId a = x % n, b = y % n;
    const std::size_t e = x / n, f = y / n;
    const ElementId twisted = e == 0 ? b : alpha[b];
    return static_cast<ElementId>(((e + f) % 2) * n + base->mul(a, twisted));
  };
  if (order <= kDenseTableLimit) {
    d.table.resize(order * order);
    for (ElementId x = 0; x < order; ++x)
      for (ElementId y = 0; y < order; ++y) d.table[x * order + y] = multiply(x, y);
  } else {
    d.multiply = multiply;
  }
  d.inverses.resize(order);
  for (ElementId x = 0; x < order; ++x) {
    const ElementId a = x % n;
    // (a,0)^-1 = (a^-1,0); (a,1)^-1 = (alpha(a^-1),1).
    d.inverses[x] = x < n ? nn.inv(a) : static_cast<ElementId>(n + alpha[nn.inv(a)]);
    if (x < n) d.labels.push_back(nn.label(a));
    else if (a == kIdentity) d.labels.push_back("h");
    else d.labels.push_back(nn.label(a) + "*h");
  }
  for (ElementId s : nn.generators())
    if (s != kIdentity) d.generators.push_back(s);
  d.generators.push_back(static_cast<ElementId>(n));
  d.family_tag = "semidirect(" + nn.family_tag() + ")";
  return std::make_shared<const GroupTable>(std::move(d));
}

}  // namespace taumackey
