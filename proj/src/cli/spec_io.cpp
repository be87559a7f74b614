#include "taumackey/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "taumackey/gelfand.hpp"

namespace taumackey {
namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidSpec, field + ": " + why);
}

const Json& unwrap(const Json& spec, const char* key) {
  if (spec.is_object() && spec.size() == 1 && spec.contains(key)) return spec.at(key);
  return spec;
}

std::size_t size_field(const Json& spec, const char* key, const std::string& where) {
  if (!spec.contains(key)) invalid(where, std::string("missing \"") + key + "\"");
  const Json& v = spec.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) invalid(where, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::map<ElementId, ElementId> image_pairs(const GroupTable& g, const Json& images, const std::string& where) {
  if (!images.is_object()) invalid(where, "generator_images must be an object of label pairs");
  std::map<ElementId, ElementId> out;
  for (const auto& [from, to] : images.items()) {
    if (!to.is_string()) invalid(where, "image of " + from + " must be a label");
    out[g.require(from)] = g.require(to.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json_argument(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '@') {
    std::ifstream in(body.substr(1));
    if (!in) invalid("argument", "cannot read " + body.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json out = Json::parse(body, nullptr, false);
  if (!out.is_discarded()) return out;
  const bool word = !body.empty() && body.find_first_of("{}[]\"") == std::string::npos;
  if (!word) invalid("argument", "not valid JSON: " + body);
  return Json(body);
}

GroupPtr group_from_json(const Json& spec, const Budget& budget) {
  const Json& s = unwrap(spec, "group");
  if (!s.is_object()) invalid("group", "expected an object");
  const std::size_t cap = budget.max_order;
  if (s.contains("family")) {
    if (!s.at("family").is_string()) invalid("group.family", "expected a string");
    const std::string family = s.at("family").get<std::string>();
    const std::size_t n = s.contains("n") ? size_field(s, "n", "group") : 0;
    if (!s.contains("n") && family != "quaternion8") invalid("group", "family " + family + " needs \"n\"");
    return construct_family(family, n, cap);
  }
  if (s.contains("generators")) {
    if (!s.at("generators").is_array()) invalid("group.generators", "expected an array of cycle strings");
    std::vector<std::string> gens;
    for (const auto& g : s.at("generators")) {
      if (!g.is_string()) invalid("group.generators", "expected cycle strings");
      gens.push_back(g.get<std::string>());
    }
    return make_permutation_group(gens, size_field(s, "degree", "group"), cap);
  }
  if (s.contains("product")) {
    const Json& p = s.at("product");
    if (!p.is_array() || p.size() != 2) invalid("group.product", "expected two group specs");
    return make_direct_product(group_from_json(p[0], budget), group_from_json(p[1], budget), cap);
  }
  if (s.contains("semidirect")) {
    const Json& p = s.at("semidirect");
    if (!p.is_object() || !p.contains("base") || !p.contains("tau"))
      invalid("group.semidirect", "expected {\"base\": ..., \"tau\": ...}");
    const GroupPtr base = group_from_json(p.at("base"), budget);
    return construct_semidirect_with_involution(tau_from_json(base, p.at("tau")));
  }
  invalid("group", "expected one of family, generators, product, semidirect");
}

GroupMap tau_from_json(const GroupPtr& group, const Json& spec) {
  const Json& s = unwrap(spec, "tau");
  if (s.is_string()) {
    const std::string name = s.get<std::string>();
    if (name == "inverse") return tau_inverse(group);
    if (name == "identity") return tau_identity(group);
    if (name == "clifford") return tau_clifford(group);
    invalid("tau", "unknown tau \"" + name + "\"");
  }
  if (s.is_object() && s.contains("inner")) {
    if (!s.at("inner").is_string()) invalid("tau.inner", "expected an element label");
    return tau_inner(group, group->require(s.at("inner").get<std::string>()));
  }
  if (s.is_object() && s.contains("generator_images"))
    return tau_from_generator_images(group, image_pairs(*group, s.at("generator_images"), "tau"), true);
  invalid("tau", "expected inverse, identity, clifford, {inner} or {generator_images}");
}

GroupMap sigma_from_json(const GroupPtr& group, const Json& spec) {
  const Json& s = unwrap(spec, "sigma");
  if (s.is_string()) {
    const std::string name = s.get<std::string>();
    if (name == "identity") return automorphism_identity(group);
    if (name == "swap") return automorphism_swap_factors(group);
    invalid("sigma", "unknown sigma \"" + name + "\"");
  }
  if (s.is_object() && s.contains("conjugation")) {
    if (!s.at("conjugation").is_string()) invalid("sigma.conjugation", "expected an element label");
    return automorphism_conjugation(group, group->require(s.at("conjugation").get<std::string>()));
  }
  if (s.is_object() && s.contains("generator_images"))
    return map_from_generator_images(group, image_pairs(*group, s.at("generator_images"), "sigma"),
                                     MapKind::Automorphism, false);
  invalid("sigma", "expected identity, swap, {conjugation} or {generator_images}");
}

Subgroup subgroup_from_json(const GroupPtr& group, const Json& spec) {
  const Json& s = unwrap(spec, "subgroup");
  if (!s.is_object()) invalid("subgroup", "expected an object");
  auto labels = [&](const char* key) {
    const Json& list = s.at(key);
    if (!list.is_array()) invalid(std::string("subgroup.") + key, "expected an array of labels");
    std::vector<ElementId> ids;
    for (const auto& l : list) {
      if (!l.is_string()) invalid(std::string("subgroup.") + key, "expected labels");
      ids.push_back(group->require(l.get<std::string>()));
    }
    return ids;
  };
  if (s.contains("generators")) return generated_subgroup(group, labels("generators"));
  if (s.contains("elements")) return make_subgroup(group, labels("elements"));
  if (s.contains("centralizer_of_sigma")) return fixed_subgroup(sigma_from_json(group, s.at("centralizer_of_sigma")));
  invalid("subgroup", "expected generators, elements or centralizer_of_sigma");
}

}  // namespace taumackey
