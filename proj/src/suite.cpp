#include "brandt/suite.hpp"

#include <map>
#include <random>

#include "brandt/error.hpp"
#include "brandt/ext_topology.hpp"
#include "brandt/extension.hpp"
#include "brandt/homomorphism.hpp"

namespace brandt {

namespace {

bool zero_closed(const FiniteTopology& t, Index zero) {
  for (Index x = 0; x < t.size(); ++x)
    if (x != zero && t.minimal_open(x).test(zero)) return false;
  return true;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::string first_witness;

  void record(bool ok, const std::string& witness) {
    ok ? ++pass : ++fail;
    if (!ok && first_witness.empty()) first_witness = witness;
  }
  Json to_json() const {
    Json j;
    j["pass"] = pass;
    j["fail"] = fail;
    if (skipped) j["skipped"] = skipped;
    if (!first_witness.empty()) j["first_witness"] = first_witness;
    return j;
  }
};

std::vector<FiniteTopology> semitopological(const FiniteSemigroup& s, std::size_t cap) {
  std::vector<FiniteTopology> out;
  TopologyEnumerator topologies(s.size(), cap);
  while (auto t = topologies.next())
    if (is_semitopological(s, *t).holds) out.push_back(std::move(*t));
  return out;
}

}  // namespace

std::vector<NamedMonoid> corpus_monoids() {
  return {
      {"chain2", chain(2)},
      {"chain3", chain(3)},
      {"chain4", chain(4)},
      {"chain5", chain(5)},
      {"Z2^0", cyclic_group_with_zero(2)},
      {"Z3^0", cyclic_group_with_zero(3)},
      {"Z4^0", cyclic_group_with_zero(4)},
      {"LZ2^{0,1}", adjoin_identity(adjoin_zero(left_zero_band(2)))},
  };
}

std::vector<FiniteTopology> corpus_topologies(const FiniteSemigroup& s, std::size_t cap) {
  const Index zero = s.require_zero();
  std::vector<FiniteTopology> out;
  for (auto& t : semitopological(s, cap))
    if (zero_closed(t, zero)) out.push_back(std::move(t));
  return out;
}

std::vector<TpcbObject> category_corpus() {
  std::vector<TpcbObject> out;
  for (std::size_t lambda = 1; lambda <= 2; ++lambda) {
    out.push_back(make_object("chain2", chain(2), lambda));
    out.push_back(make_object("chain3", chain(3), lambda));
    out.push_back(make_object("Z2^0", cyclic_group_with_zero(2), lambda));
  }
  return out;
}

Json suite_structure(std::size_t max_lambda) {
  Json rows = Json::array();
  bool all = true;
  for (const auto& [name, s] : corpus_monoids())
    for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
      const BrandtExtension ext(s, lambda);
      const std::size_t expected = lambda * lambda * (s.size() - 1) + 1;
      bool associative = true;
      try {
        FiniteSemigroup::validate(ext.semigroup().elements(), ext.semigroup().rows(), ext.semigroup().zero(),
                                  ext.semigroup().one());
      } catch (const Error&) {
        associative = false;
      }
      const auto full = brandt_full_extension(s, lambda);
      const auto quotient = rees_quotient(full.semigroup, full.ideal).quotient;
      std::vector<Index> map;
      bool rees = quotient.size() == ext.size();
      for (Index x = 0; rees && x < quotient.size(); ++x) {
        const auto y = ext.semigroup().index_of(quotient.name(x));
        rees = y.has_value();
        if (rees) map.push_back(*y);
      }
      rees = rees && verify_map(quotient, ext.semigroup(), map, true);
      const bool no_identity = lambda == 1 || !find_identity(ext.semigroup());
      const bool zero_ok = find_zero(ext.semigroup()) == ext.zero();

      Json row;
      row["monoid"] = name;
      row["lambda"] = lambda;
      row["size"] = ext.size();
      row["expected_size"] = expected;
      row["associative"] = associative;
      row["rees_quotient_agrees"] = rees;
      row["zero_is_two_sided"] = zero_ok;
      row["no_identity_for_lambda_ge_2"] = no_identity;
      all = all && ext.size() == expected && associative && rees && no_identity && zero_ok;
      rows.push_back(std::move(row));
    }
  Json j;
  j["passed"] = all;
  j["extensions"] = std::move(rows);
  return j;
}

Json suite_topology(std::size_t max_lambda) {
  std::map<std::string, Tally> clauses;
  std::vector<std::string> order;
  Tally base_modes, semitop, semiregular, joint, joint_lambda1;
  std::size_t pairs = 0;
  Json per_monoid = Json::object();

  for (const auto& [name, s] : corpus_monoids()) {
    const auto taus = corpus_topologies(s);
    per_monoid[name] = taus.size();
    for (const auto& tau : taus)
      for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
        ++pairs;
        const BrandtExtension ext(s, lambda);
        const FiniteTopology tb = extension_topology(ext, tau, BaseMode::FiniteBase);
        const std::string where = name + " lambda=" + std::to_string(lambda) + " ";
        const Report r = verify_extension(ext, tau, tb);
        for (const auto& c : r.clauses) {
          if (!clauses.count(c.name)) order.push_back(c.name);
          clauses[c.name].record(c.passed(), where + c.witness);
        }
        base_modes.record(extension_topology(ext, tau, BaseMode::CofiniteBase) == tb, where);
        semitop.record(is_semitopological(ext.semigroup(), tb).holds, where);
        if (is_semiregular(tau).semiregular) semiregular.record(is_semiregular(tb).semiregular, where);
        if (is_topological(s, tau).holds) {
          const bool jc = is_topological(ext.semigroup(), tb).holds;
          if (lambda == 1) joint_lambda1.record(jc, where);
          else joint.record(jc, where);
        }
      }
  }

  Json j;
  bool all = true;
  Json verify = Json::object();
  for (const auto& name : order) {
    verify[name] = clauses[name].to_json();
    all = all && clauses[name].fail == 0;
  }
  all = all && base_modes.fail == 0 && semitop.fail == 0 && semiregular.fail == 0 && joint_lambda1.fail == 0;
  j["passed"] = all;
  j["pairs"] = pairs;
  j["topologies_per_monoid"] = std::move(per_monoid);
  j["verify_extension"] = std::move(verify);
  j["base_modes_equal"] = base_modes.to_json();
  j["extension_semitopological"] = semitop.to_json();
  j["semiregularity_transfer"] = semiregular.to_json();
  j["joint_continuity_lambda1"] = joint_lambda1.to_json();
  j["joint_continuity_lambda_ge_2"] = joint.to_json();
  return j;
}

Json suite_exploration(std::uint64_t seed, std::size_t samples, std::size_t max_lambda) {
  std::mt19937_64 rng(seed);
  Json runs = Json::array();
  for (const auto& [name, s] : corpus_monoids()) {
    const Index zero = s.require_zero();
    std::vector<FiniteTopology> pool;
    for (auto& t : semitopological(s, kDefaultTopologyCap))
      if (!zero_closed(t, zero)) pool.push_back(std::move(t));
    if (pool.empty()) continue;
    for (std::size_t k = 0; k < samples; ++k) {
      const FiniteTopology& tau = pool[rng() % pool.size()];
      const std::size_t lambda = 1 + rng() % max_lambda;
      const BrandtExtension ext(s, lambda);
      const Report r = verify_extension(ext, tau, extension_topology(ext, tau, BaseMode::FiniteBase));
      Json failing = Json::array();
      for (const auto& c : r.clauses)
        if (!c.passed()) failing.push_back(c.name);
      Json run;
      run["monoid"] = name;
      run["lambda"] = lambda;
      run["topology"] = to_json(tau);
      run["failing_clauses"] = std::move(failing);
      runs.push_back(std::move(run));
    }
  }
  Json j;
  j["seed"] = seed;
  j["samples_per_monoid"] = samples;
  j["runs"] = std::move(runs);
  return j;
}

Json suite_uniqueness(std::size_t cap) {
  const BrandtExtension ext(chain(2), 2);
  const FiniteTopology tau = FiniteTopology::discrete(2);
  Json j;
  bool passed = true;
  for (ClassFilter filter : {ClassFilter::HausdorffSemitop, ClassFilter::Semitop}) {
    const auto r = uniqueness_search(ext, tau, filter, cap);
    Json e;
    e["enumerated"] = r.enumerated;
    e["survivors"] = r.survivors.size();
    Json list = Json::array();
    for (const auto& t : r.survivors) list.push_back(to_json(t));
    e["topologies"] = std::move(list);
    if (filter == ClassFilter::HausdorffSemitop) passed = r.survivors.size() == 1;
    j[std::string(to_string(filter))] = std::move(e);
  }
  j["passed"] = passed;
  return j;
}

Json suite_homs() {
  const std::vector<std::pair<NamedMonoid, NamedMonoid>> pairs = {
      {{"chain3", chain(3)}, {"chain3", chain(3)}},
      {{"chain2", chain(2)}, {"chain3", chain(3)}},
      {{"Z2^0", cyclic_group_with_zero(2)}, {"Z2^0", cyclic_group_with_zero(2)}},
  };
  Json runs = Json::array();
  bool all = true;
  for (const auto& [s, t] : pairs)
    for (std::size_t l1 = 1; l1 <= 2; ++l1)
      for (std::size_t l2 = l1; l2 <= 2; ++l2) {
        const auto r = completeness_check(s.s, t.s, l1, l2);
        Json e = to_json(r);
        e["source"] = s.name;
        e["target"] = t.name;
        all = all && (!r.hypotheses() || r.equal());
        runs.push_back(std::move(e));
      }
  Json j;
  j["passed"] = all;
  j["runs"] = std::move(runs);
  return j;
}

Json suite_category() {
  const auto corpus = category_corpus();
  const Report laws = verify_category_laws(corpus);
  const Report functor = verify_functor_laws(corpus);
  const Report full = verify_fullness(corpus);
  Json j;
  j["passed"] = laws.passed() && functor.passed() && full.passed();
  j["laws"] = to_json(laws);
  j["functor"] = to_json(functor);
  j["fullness"] = to_json(full);
  return j;
}

Json run_suite(const SuiteOptions& options) {
  Json j;
  j["seed"] = options.seed;
  j["structure"] = suite_structure(options.structure_lambda);
  j["topology"] = suite_topology(options.topology_lambda);
  j["exploration"] = suite_exploration(options.seed, options.samples, options.topology_lambda);
  j["uniqueness"] = suite_uniqueness(options.cap);
  j["homs"] = suite_homs();
  j["category"] = suite_category();
  bool all = true;
  for (const char* key : {"structure", "topology", "uniqueness", "homs", "category"})
    all = all && j[key]["passed"].get<bool>();
  j["passed"] = all;
  return j;
}

}  // namespace brandt
