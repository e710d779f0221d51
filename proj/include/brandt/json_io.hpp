#pragma once

#include <string>

#include <json.hpp>

#include "brandt/category.hpp"
#include "brandt/ext_topology.hpp"
#include "brandt/extension.hpp"
#include "brandt/homomorphism.hpp"
#include "brandt/report.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/topology.hpp"

namespace brandt {

/// Key order is preserved so that serialisation is byte-stable.
using Json = nlohmann::ordered_json;

/// {"elements": [...], "table": [[...]], "zero": name, "one": name}; the
/// table holds element indices and zero / one are omitted when absent.
Json to_json(const FiniteSemigroup& s);
/// Parses and validates. Throws Error(Parse) on malformed input and the
/// validation errors of FiniteSemigroup::validate otherwise.
FiniteSemigroup semigroup_from_json(const Json& j);

/// {"n": n, "opens": [[...]]} when at most `open_cap` open sets exist,
/// otherwise {"n": n, "base": [[...]]} listing the minimal open set of each point.
Json to_json(const FiniteTopology& t, std::size_t open_cap = kDefaultOpenListCap);
FiniteTopology topology_from_json(const Json& j);

/// {"lambda", "base", "semigroup", "labels"}; labels give (alpha, element, beta)
/// 1-based, with the zero as {"zero": true}.
Json to_json(const BrandtExtension& ext);

/// {"title", "passed", "clauses": {name: {"status", "pass", "witness"?, "note"?}}}.
Json to_json(const Report& r);

Json hom_to_json(const std::string& source, const std::string& target, const HomMap& f);
Json to_json(const SigmaData& d);
Json to_json(const CompletenessResult& r);

Json load_json(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace brandt
