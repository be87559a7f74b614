#pragma once

#include <string_view>

#include <json.hpp>

#include "taumackey/budget.hpp"
#include "taumackey/group.hpp"
#include "taumackey/morphisms.hpp"

namespace taumackey {

using Json = nlohmann::json;

/// Reads a JSON argument: inline text, or a file when prefixed with '@'.
/// A bare word that is not JSON is taken as a string. Throws InvalidSpec.
Json parse_json_argument(std::string_view text);

/// {"family": name, "n": k} | {"generators": [...], "degree": m} |
/// {"product": [spec, spec]} | {"semidirect": {"base": spec, "tau": tau}}.
GroupPtr group_from_json(const Json& spec, const Budget& budget = {});

/// "inverse" | "identity" | "clifford" | {"inner": label} |
/// {"generator_images": {label: label}}. Accepts the value either bare or
/// wrapped as {"tau": ...}.
GroupMap tau_from_json(const GroupPtr& group, const Json& spec);

/// Automorphisms: "identity" | "swap" | {"conjugation": label} |
/// {"generator_images": {label: label}}.
GroupMap sigma_from_json(const GroupPtr& group, const Json& spec);

/// {"generators": [labels]} | {"elements": [labels]} |
/// {"centralizer_of_sigma": sigma}.
Subgroup subgroup_from_json(const GroupPtr& group, const Json& spec);

}  // namespace taumackey
