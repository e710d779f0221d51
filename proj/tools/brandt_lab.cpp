// brandt-lab: generate semigroups, build Brandt extensions and their
// topologies, run the verification suites and export artifacts.
//
// Exit codes: 0 all clauses pass, 1 some clause fails, 2 usage or validation error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brandt/category.hpp"
#include "brandt/error.hpp"
#include "brandt/ext_topology.hpp"
#include "brandt/extension.hpp"
#include "brandt/homomorphism.hpp"
#include "brandt/json_io.hpp"
#include "brandt/suite.hpp"

namespace {

using namespace brandt;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw Error(ErrorKind::Parse, "cannot write " + out);
  file << text;
}

FiniteSemigroup generate(const std::string& kind, std::size_t n, const std::string& file) {
  if (kind == "matrix-units") return matrix_units(n);
  if (kind == "chain") return chain(n);
  if (kind == "group-with-zero") return cyclic_group_with_zero(n);
  if (kind == "trivial") return trivial_with_zero();
  if (kind == "adjoin-zero") {
    if (file.empty()) throw Error(ErrorKind::Parse, "adjoin-zero needs --file");
    return adjoin_zero(semigroup_from_json(load_json(file)));
  }
  throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
}

FiniteTopology load_topology_or_discrete(const std::string& path, std::size_t n) {
  if (path.empty()) return FiniteTopology::discrete(n);
  FiniteTopology t = topology_from_json(load_json(path));
  if (t.size() != n) throw Error(ErrorKind::CarrierMismatch, "topology size does not match the semigroup");
  return t;
}

std::vector<TpcbObject> load_corpus(const std::string& path) {
  if (path.empty()) return category_corpus();
  const Json j = load_json(path);
  if (!j.contains("objects") || !j.at("objects").is_array())
    throw Error(ErrorKind::Parse, "corpus needs an 'objects' array");
  std::vector<TpcbObject> out;
  for (const auto& o : j.at("objects")) {
    FiniteSemigroup s = [&] {
      if (o.contains("semigroup")) return semigroup_from_json(o.at("semigroup"));
      if (o.contains("generate")) {
        const auto& g = o.at("generate");
        return generate(g.value("kind", std::string{}), g.value("n", std::size_t{2}), g.value("file", std::string{}));
      }
      throw Error(ErrorKind::Parse, "corpus object needs 'semigroup' or 'generate'");
    }();
    const std::string name = o.value("name", "S" + std::to_string(out.size() + 1));
    const std::size_t lambda = o.value("lambda", std::size_t{1});
    if (o.contains("topology"))
      out.push_back(make_object(name, std::move(s), lambda, topology_from_json(o.at("topology"))));
    else
      out.push_back(make_object(name, std::move(s), lambda));
  }
  return out;
}

Report structure_report(const FiniteSemigroup& s, std::size_t lambda, const FiniteTopology& tau, BaseMode mode) {
  const BrandtExtension ext(s, lambda);
  Report r = verify_extension(ext, tau, extension_topology(ext, tau, mode));
  r.title = "structure (lambda=" + std::to_string(lambda) + ")";
  const std::size_t expected = lambda * lambda * (s.size() - 1) + 1;
  r.add("cardinality", ext.size() == expected,
        "size " + std::to_string(ext.size()) + ", expected " + std::to_string(expected));
  const auto full = brandt_full_extension(s, lambda);
  const auto q = rees_quotient(full.semigroup, full.ideal).quotient;
  r.add("rees_quotient_isomorphic", find_isomorphism(q, ext.semigroup()).has_value(), "no isomorphism found");
  r.add("zero_is_two_sided", find_zero(ext.semigroup()) == ext.zero(), "zero of the extension is not two-sided");
  if (lambda >= 2) r.add("no_identity", !find_identity(ext.semigroup()).has_value(), "extension has an identity");
  return r;
}

Report topology_report(const FiniteSemigroup& s, std::size_t lambda, const FiniteTopology& tau) {
  const BrandtExtension ext(s, lambda);
  const FiniteTopology finite = extension_topology(ext, tau, BaseMode::FiniteBase);
  Report r;
  r.title = "topology (lambda=" + std::to_string(lambda) + ")";
  r.add("base_modes_equal", extension_topology(ext, tau, BaseMode::CofiniteBase) == finite,
        "finite_base and cofinite_base differ");
  const bool semitop = is_semitopological(s, tau).holds;
  if (semitop)
    r.add("extension_semitopological", is_semitopological(ext.semigroup(), finite).holds, "a translation is discontinuous");
  else
    r.skip("extension_semitopological", "input is not semitopological");
  if (is_semiregular(tau).semiregular)
    r.add("semiregularity_transfer", is_semiregular(finite).semiregular, "extension topology is not semiregular");
  else
    r.skip("semiregularity_transfer", "input is not semiregular");
  if (!is_topological(s, tau).holds) {
    r.skip("joint_continuity", "input is not a topological semigroup");
  } else if (lambda == 1) {
    r.add("joint_continuity", is_topological(ext.semigroup(), finite).holds, "multiplication is not jointly continuous");
  } else {
    const bool jc = is_topological(ext.semigroup(), finite).holds;
    r.add("joint_continuity", true, {}, std::string("reported only: ") + (jc ? "jointly continuous" : "not jointly continuous"));
  }
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Finite-scale laboratory for Brandt lambda^0-extensions of monoids with zero"};
  app.require_subcommand(1);

  std::string out;
  std::uint64_t seed = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a semigroup as JSON");
  std::string kind;
  std::size_t gen_n = 2;
  std::string gen_file;
  gen->add_option("kind", kind, "matrix-units | chain | group-with-zero | adjoin-zero | trivial")
      ->required()
      ->check(CLI::IsMember({"matrix-units", "chain", "group-with-zero", "adjoin-zero", "trivial"}));
  gen->add_option("n", gen_n, "Size parameter")->check(CLI::PositiveNumber);
  gen->add_option("--file", gen_file, "Input semigroup for adjoin-zero");
  gen->add_option("--out", out, "Output file");

  // extend / export share their inputs.
  std::string semigroup_file, topology_file, mode_text = "finite_base";
  std::size_t lambda = 2;
  auto* extend = app.add_subcommand("extend", "Build B^0_lambda(S) and, with --topology, its extension topology");
  extend->add_option("semigroup", semigroup_file, "Semigroup JSON")->required();
  extend->add_option("--lambda", lambda, "Number of blocks")->check(CLI::PositiveNumber);
  extend->add_option("--topology", topology_file, "Topology JSON on S");
  extend->add_option("--mode", mode_text)->check(CLI::IsMember({"finite_base", "cofinite_base"}));
  extend->add_option("--out", out, "Output file");

  auto* exp = app.add_subcommand("export", "Export an extension and its topology as JSON or Graphviz");
  bool dot = false;
  exp->add_option("semigroup", semigroup_file, "Semigroup JSON")->required();
  exp->add_option("--lambda", lambda, "Number of blocks")->check(CLI::PositiveNumber);
  exp->add_option("--topology", topology_file, "Topology JSON on S (discrete if omitted)");
  exp->add_option("--mode", mode_text)->check(CLI::IsMember({"finite_base", "cofinite_base"}));
  exp->add_flag("--dot", dot, "Emit the specialisation order in DOT");
  exp->add_option("--out", out, "Output file");

  // check
  auto* check = app.add_subcommand("check", "Run a verification suite and print a JSON report");
  std::string suite;
  std::string source_file, target_file, corpus_file, filter_text = "hausdorff_semitop";
  std::size_t lambda2 = 0;
  std::size_t cap = kDefaultTopologyCap;
  std::size_t samples = 8;
  check->add_option("suite", suite, "structure | topology | uniqueness | homs | category | all")
      ->required()
      ->check(CLI::IsMember({"structure", "topology", "uniqueness", "homs", "category", "all"}));
  check->add_option("--semigroup", semigroup_file, "Semigroup JSON (structure, topology, uniqueness)");
  check->add_option("--topology", topology_file, "Topology JSON on S");
  check->add_option("--lambda", lambda, "Number of blocks")->check(CLI::PositiveNumber);
  check->add_option("--lambda2", lambda2, "Target block count for homs (defaults to --lambda)");
  check->add_option("--mode", mode_text)->check(CLI::IsMember({"finite_base", "cofinite_base"}));
  check->add_option("--cap", cap, "Largest carrier the topology enumeration accepts")->check(CLI::PositiveNumber);
  check->add_option("--filter", filter_text)->check(CLI::IsMember({"hausdorff_semitop", "semitop"}));
  check->add_option("--source", source_file, "Source semigroup JSON (homs)");
  check->add_option("--target", target_file, "Target semigroup JSON (homs)");
  check->add_option("--corpus", corpus_file, "Corpus JSON (category)");
  check->add_option("--seed", seed, "Seed for sampled exploration topologies");
  check->add_option("--samples", samples, "Sampled topologies per monoid (all)");
  check->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const BaseMode mode = parse_base_mode(mode_text);

  if (*gen) {
    emit(dump(to_json(generate(kind, gen_n, gen_file))), out);
    return kPass;
  }

  if (*extend || *exp) {
    const FiniteSemigroup s = semigroup_from_json(load_json(semigroup_file));
    const BrandtExtension ext(s, lambda);
    if (*exp && dot) {
      const FiniteTopology tau = load_topology_or_discrete(topology_file, s.size());
      emit(to_dot(extension_topology(ext, tau, mode), ext.semigroup().elements()), out);
      return kPass;
    }
    Json j;
    j["extension"] = to_json(ext);
    if (!topology_file.empty() || *exp) {
      const FiniteTopology tau = load_topology_or_discrete(topology_file, s.size());
      j["mode"] = std::string(to_string(mode));
      j["topology"] = to_json(extension_topology(ext, tau, mode));
    }
    emit(dump(j), out);
    return kPass;
  }

  // check
  Json report;
  bool passed = true;
  auto need = [](const std::string& path, const char* flag) {
    if (path.empty()) throw Error(ErrorKind::Parse, std::string("this suite needs ") + flag);
    return semigroup_from_json(load_json(path));
  };

  if (suite == "all") {
    SuiteOptions options;
    options.seed = seed;
    options.samples = samples;
    options.cap = cap;
    report = run_suite(options);
    passed = report["passed"].get<bool>();
  } else if (suite == "structure" || suite == "topology") {
    if (semigroup_file.empty()) {
      report = suite == "structure" ? suite_structure(4) : suite_topology(3);
      passed = report["passed"].get<bool>();
    } else {
      const FiniteSemigroup s = need(semigroup_file, "--semigroup");
      const FiniteTopology tau = load_topology_or_discrete(topology_file, s.size());
      const Report r = suite == "structure" ? structure_report(s, lambda, tau, mode) : topology_report(s, lambda, tau);
      report = to_json(r);
      passed = r.passed();
    }
  } else if (suite == "uniqueness") {
    if (semigroup_file.empty()) {
      report = suite_uniqueness(cap);
      passed = report["passed"].get<bool>();
    } else {
      const FiniteSemigroup s = need(semigroup_file, "--semigroup");
      const FiniteTopology tau = load_topology_or_discrete(topology_file, s.size());
      const BrandtExtension ext(s, lambda);
      const ClassFilter filter = filter_text == "semitop" ? ClassFilter::Semitop : ClassFilter::HausdorffSemitop;
      const auto r = uniqueness_search(ext, tau, filter, cap);
      const FiniteTopology built = extension_topology(ext, tau, mode);
      const bool contains_built =
          std::find(r.survivors.begin(), r.survivors.end(), built) != r.survivors.end();
      report["filter"] = std::string(to_string(filter));
      report["enumerated"] = r.enumerated;
      report["survivors"] = r.survivors.size();
      report["contains_extension_topology"] = contains_built;
      Json list = Json::array();
      for (const auto& t : r.survivors) list.push_back(to_json(t));
      report["topologies"] = std::move(list);
      passed = filter == ClassFilter::Semitop ? contains_built : (r.survivors.size() == 1 && contains_built);
      report["passed"] = passed;
    }
  } else if (suite == "homs") {
    if (source_file.empty() && target_file.empty()) {
      report = suite_homs();
      passed = report["passed"].get<bool>();
    } else {
      const FiniteSemigroup s = need(source_file, "--source");
      const FiniteSemigroup t = need(target_file, "--target");
      const auto r = completeness_check(s, t, lambda, lambda2 == 0 ? lambda : lambda2);
      report = to_json(r);
      passed = !r.hypotheses() || r.equal();
      report["passed"] = passed;
    }
  } else if (suite == "category") {
    const auto corpus = load_corpus(corpus_file);
    const Report laws = verify_category_laws(corpus);
    const Report functor = verify_functor_laws(corpus);
    const Report full = verify_fullness(corpus);
    passed = laws.passed() && functor.passed() && full.passed();
    report["passed"] = passed;
    report["laws"] = to_json(laws);
    report["functor"] = to_json(functor);
    report["fullness"] = to_json(full);
  }
  emit(dump(report), out);
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const brandt::Error& e) {
    brandt::Json j;
    j["error"] = std::string(brandt::to_string(e.kind()));
    j["message"] = e.what();
    j["witness"] = e.witness();
    std::cerr << j.dump(2) << "\n";
    return kUsage;
  }
}
