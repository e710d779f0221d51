#include "brandt/json_io.hpp"

#include <fstream>
#include <sstream>

#include "brandt/error.hpp"

namespace brandt {

namespace {

Json set_to_json(const IndexSet& a) {
  Json out = Json::array();
  a.for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

IndexSet set_from_json(std::size_t n, const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "set must be an array of indices");
  IndexSet out(n);
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(ErrorKind::Parse, "set members must be non-negative integers");
    const auto i = v.get<std::size_t>();
    if (i >= n) throw Error(ErrorKind::IndexOutOfRange, "set member " + std::to_string(i) + " out of range", {i});
    out.set(i);
  }
  return out;
}

// Accepts an element name or an index.
Index element_ref(const std::vector<std::string>& names, const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<Index>();
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    for (Index i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw Error(ErrorKind::Parse, std::string(what) + " names unknown element '" + name + "'");
  }
  throw Error(ErrorKind::Parse, std::string(what) + " must be an element name or index");
}

const char* status_name(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Pass: return "pass";
    case ClauseStatus::Fail: return "fail";
    case ClauseStatus::Skipped: return "skipped";
  }
  return "fail";
}

}  // namespace

Json to_json(const FiniteSemigroup& s) {
  Json j;
  j["elements"] = s.elements();
  j["table"] = s.rows();
  if (s.zero()) j["zero"] = s.name(*s.zero());
  if (s.one()) j["one"] = s.name(*s.one());
  return j;
}

FiniteSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw Error(ErrorKind::Parse, "semigroup needs 'elements' and 'table'");
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table;
  try {
    names = j.at("elements").get<std::vector<std::string>>();
    for (const auto& row : j.at("table")) {
      std::vector<Index> r;
      for (const auto& v : row) r.push_back(element_ref(names, v, "table entry"));
      table.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  std::optional<Index> zero, one;
  if (j.contains("zero") && !j.at("zero").is_null()) zero = element_ref(names, j.at("zero"), "zero");
  if (j.contains("one") && !j.at("one").is_null()) one = element_ref(names, j.at("one"), "one");
  return FiniteSemigroup::validate(std::move(names), table, zero, one);
}

Json to_json(const FiniteTopology& t, std::size_t open_cap) {
  Json j;
  j["n"] = t.size();
  try {
    Json opens = Json::array();
    for (const auto& u : t.opens(open_cap)) opens.push_back(set_to_json(u));
    j["opens"] = std::move(opens);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    Json base = Json::array();
    for (const auto& u : t.minimal_opens()) base.push_back(set_to_json(u));
    j["base"] = std::move(base);
  }
  return j;
}

FiniteTopology topology_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_unsigned())
    throw Error(ErrorKind::Parse, "topology needs a non-negative 'n'");
  const auto n = j.at("n").get<std::size_t>();
  if (j.contains("opens")) {
    std::vector<IndexSet> opens;
    for (const auto& u : j.at("opens")) opens.push_back(set_from_json(n, u));
    return FiniteTopology::from_opens(n, opens);
  }
  if (j.contains("base")) {
    std::vector<IndexSet> nbhds;
    for (const auto& u : j.at("base")) nbhds.push_back(set_from_json(n, u));
    if (nbhds.size() != n) throw Error(ErrorKind::Parse, "'base' needs one minimal open set per point");
    return FiniteTopology::from_minimal_neighborhoods(std::move(nbhds));
  }
  throw Error(ErrorKind::Parse, "topology needs 'opens' or 'base'");
}

Json to_json(const BrandtExtension& ext) {
  Json j;
  j["lambda"] = ext.lambda();
  j["base"] = to_json(ext.base());
  j["semigroup"] = to_json(ext.semigroup());
  Json labels = Json::array();
  for (const auto& l : ext.labels()) {
    Json e;
    if (l.is_zero) {
      e["zero"] = true;
    } else {
      e["alpha"] = l.alpha + 1;
      e["element"] = ext.base().name(l.element);
      e["beta"] = l.beta + 1;
    }
    labels.push_back(std::move(e));
  }
  j["labels"] = std::move(labels);
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["title"] = r.title;
  j["passed"] = r.passed();
  Json clauses = Json::object();
  for (const auto& c : r.clauses) {
    Json e;
    e["status"] = status_name(c.status);
    e["pass"] = c.passed();
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    clauses[c.name] = std::move(e);
  }
  j["clauses"] = std::move(clauses);
  return j;
}

Json hom_to_json(const std::string& source, const std::string& target, const HomMap& f) {
  Json j;
  j["source"] = source;
  j["target"] = target;
  j["map"] = f;
  return j;
}

Json to_json(const SigmaData& d) {
  Json j;
  j["h"] = d.h;
  j["u"] = d.u;
  Json phi = Json::array();
  for (std::size_t p : d.phi) phi.push_back(p + 1);
  j["phi"] = std::move(phi);
  j["e"] = d.e;
  return j;
}

Json to_json(const CompletenessResult& r) {
  Json j;
  j["lambda1"] = r.lambda1;
  j["lambda2"] = r.lambda2;
  j["idempotents_central"] = r.idempotents_central;
  j["b_star"] = r.b_star;
  j["tuples"] = r.tuples;
  j["rejected"] = r.rejected;
  j["constructed"] = r.constructed;
  j["enumerated"] = r.enumerated;
  j["missing"] = r.missing;
  j["extra"] = r.extra;
  j["equal"] = r.equal();
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace brandt
