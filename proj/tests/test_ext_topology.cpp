#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brandt/error.hpp"
#include "brandt/ext_topology.hpp"
#include "brandt/suite.hpp"
#include "oracles.hpp"

using namespace brandt;
using oracle::Mask;

namespace {

Mask to_mask(const IndexSet& a) {
  Mask m = 0;
  a.for_each([&](std::size_t i) { m |= oracle::bit(i); });
  return m;
}

oracle::Minimal minimal(const FiniteTopology& t) {
  oracle::Minimal u;
  for (const auto& x : t.minimal_opens()) u.push_back(to_mask(x));
  return u;
}

oracle::Family family(const FiniteTopology& t) {
  oracle::Family f;
  for (const auto& u : t.opens()) f.push_back(to_mask(u));
  std::sort(f.begin(), f.end());
  return f;
}

const Clause& clause(const Report& r, const std::string& name) {
  const Clause* c = r.find(name);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("mode names round-trip") {
  for (BaseMode m : {BaseMode::FiniteBase, BaseMode::CofiniteBase}) CHECK(parse_base_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_base_mode("nope"), Error);
  CHECK(to_string(ClassFilter::Semitop) == "semitop");
}

TEST_CASE("the generated topology equals the one generated by the oracle's base") {
  for (const auto& [name, s] : corpus_monoids()) {
    if (s.size() > 4) continue;
    for (const auto& tau : corpus_topologies(s))
      for (std::size_t lambda = 1; lambda <= 2; ++lambda) {
        const BrandtExtension ext(s, lambda);
        const auto base = oracle::extension_base(ext, family(tau));
        const auto expected = oracle::minimal_opens_of_base(ext.size(), base);
        for (BaseMode mode : {BaseMode::FiniteBase, BaseMode::CofiniteBase})
          CHECK(minimal(extension_topology(ext, tau, mode)) == expected);
        // The library's base family generates the same opens as the oracle's.
        for (const auto& b : extension_base(ext, tau, BaseMode::FiniteBase))
          CHECK(oracle::open_in_base(base, to_mask(b)));
      }
  }
}

TEST_CASE("discrete S gives a discrete extension") {
  for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
    const BrandtExtension ext(chain(3), lambda);
    CHECK(extension_topology(ext, FiniteTopology::discrete(3), BaseMode::FiniteBase).is_discrete());
  }
}

TEST_CASE("Sierpinski 2-chain at lambda 2") {
  const BrandtExtension ext(chain(2), 2);
  const auto t = extension_topology(ext, FiniteTopology::sierpinski(), BaseMode::FiniteBase);
  for (Index x = 1; x < 5; ++x) CHECK(t.minimal_open(x) == IndexSet(5, {x}));
  CHECK(t.minimal_open(ext.zero()).is_full());
  CHECK(t.opens().size() == 17);  // every set of non-zero points, plus the whole space
  const Report r = verify_extension(ext, FiniteTopology::sierpinski(), t);
  for (const char* name : {"diagonal_restriction", "blocks_open_closed", "block_homeomorphisms", "lift_open_without_zero",
                           "lift_open_with_zero", "lift_closed_without_zero", "lift_closed_with_zero",
                           "local_base_nonzero", "local_base_zero", "semitopological"})
    CHECK_MESSAGE(clause(r, name).passed(), name);
  CHECK(clause(r, "hausdorff_transfer").passed());
  CHECK(clause(r, "hausdorff_transfer").note == "extension=false base=false");
  CHECK(clause(r, "blocks_open_closed").note.find("construction") != std::string::npos);
}

TEST_CASE("lambda 1 reproduces tau when the zero is closed") {
  for (const auto& tau : enumerate_topologies(3)) {
    if (!tau.is_closed(IndexSet(3, {0}))) continue;
    const BrandtExtension ext(chain(3), 1);
    const auto t = extension_topology(ext, tau, BaseMode::FiniteBase);
    // Positions: the zero is at 0 in both; non-zero points keep their order.
    CHECK(t == tau);
  }
}

TEST_CASE("verify_extension passes on discrete data and reports a removed block") {
  const BrandtExtension ext(chain(2), 2);
  const auto tau = FiniteTopology::discrete(2);
  CHECK(verify_extension(ext, tau, FiniteTopology::discrete(5)).passed());

  // Glue (1,1,2) to the zero: S*_{1,2} stops being open.
  std::vector<IndexSet> u;
  for (Index x = 0; x < 5; ++x) u.push_back(IndexSet(5, {x}));
  const Index p = ext.index(0, 1, 1);
  u[p] = IndexSet(5, {p, ext.zero()});
  const auto broken = FiniteTopology::from_minimal_neighborhoods(u);
  const Report r = verify_extension(ext, tau, broken);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(clause(r, "blocks_open_closed").passed());
  CHECK_FALSE(clause(r, "blocks_open_closed").witness.empty());
  CHECK_FALSE(broken.is_open(ext.block_star(0, 1)));
  CHECK_THROWS_AS(verify_extension(ext, tau, FiniteTopology::discrete(4)), Error);
}

TEST_CASE("verify_extension verdicts agree with mask oracles on the corpus") {
  for (const auto& [name, s] : corpus_monoids()) {
    if (s.size() > 4) continue;
    for (const auto& tau : corpus_topologies(s))
      for (std::size_t lambda = 1; lambda <= 2; ++lambda) {
        const BrandtExtension ext(s, lambda);
        const auto tb = extension_topology(ext, tau, BaseMode::FiniteBase);
        const auto u = minimal(tb);
        const Report r = verify_extension(ext, tau, tb);
        bool blocks = true;
        for (std::size_t a = 0; a < lambda; ++a)
          for (std::size_t b = 0; b < lambda; ++b)
            blocks = blocks && oracle::open_by_minimal(u, to_mask(ext.block_star(a, b))) &&
                     oracle::closed_by_minimal(u, to_mask(ext.block(a, b)));
        CHECK(clause(r, "blocks_open_closed").passed() == blocks);
        CHECK(clause(r, "semitopological").passed() ==
              oracle::semitopological_by_minimal(ext.semigroup().rows(), u));
        const auto f = family(tau);
        CHECK(clause(r, "hausdorff_transfer").note ==
              std::string("extension=") + (oracle::hausdorff_by_minimal(u) ? "true" : "false") +
                  " base=" + (oracle::hausdorff(s.size(), f) ? "true" : "false"));
        CHECK(r.passed());
      }
  }
}

TEST_CASE("restriction to a diagonal block") {
  const BrandtExtension ext(chain(2), 2);
  const auto tb = extension_topology(ext, FiniteTopology::sierpinski(), BaseMode::FiniteBase);
  CHECK(restricts_to(ext, FiniteTopology::sierpinski(), tb, 0));
  CHECK(restricts_to(ext, FiniteTopology::sierpinski(), tb, 1));
  CHECK_FALSE(restricts_to(ext, FiniteTopology::discrete(2), tb, 0));
}

TEST_CASE("uniqueness search at lambda 1") {
  const BrandtExtension ext(chain(2), 1);
  const auto r = uniqueness_search(ext, FiniteTopology::discrete(2), ClassFilter::HausdorffSemitop);
  CHECK(r.enumerated == 4);
  REQUIRE(r.survivors.size() == 1);
  CHECK(r.survivors[0].is_discrete());
}

TEST_CASE("uniqueness search rejects a carrier above the cap") {
  const BrandtExtension ext(chain(3), 2);
  try {
    uniqueness_search(ext, FiniteTopology::discrete(3), ClassFilter::Semitop);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("cofinite base is capped at sixteen blocks") {
  const BrandtExtension ext(chain(2), 5);
  CHECK_THROWS_AS(extension_topology(ext, FiniteTopology::sierpinski(), BaseMode::CofiniteBase), Error);
  CHECK_NOTHROW(extension_topology(ext, FiniteTopology::sierpinski(), BaseMode::FiniteBase));
}

TEST_CASE("uniqueness without the Hausdorff filter: regression value 1, confirmed by brute force") {
  const BrandtExtension ext(chain(2), 2);
  const auto lib = uniqueness_search(ext, FiniteTopology::discrete(2), ClassFilter::Semitop);
  CHECK(lib.enumerated == 6942);
  CHECK(lib.survivors.size() == 1);

  std::size_t survivors = 0;
  for (const auto& f : oracle::all_topologies_by_preorders(5)) {
    if (!oracle::semitopological(ext.semigroup().rows(), f)) continue;
    const auto u = oracle::minimal_of_family(5, f);
    bool restricts = false;
    for (std::size_t a = 0; a < 2; ++a) {
      const Mask block = to_mask(ext.block(a, a));
      bool isolated = true;
      for (std::size_t x = 0; x < 5; ++x)
        if (oracle::has(block, x)) isolated = isolated && (u[x] & block) == oracle::bit(x);
      restricts = restricts || isolated;
    }
    survivors += restricts;
  }
  CHECK(survivors == 1);
}
