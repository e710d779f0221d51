#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brandt/error.hpp"
#include "brandt/topology.hpp"
#include "oracles.hpp"

using namespace brandt;
using oracle::Mask;

namespace {

Mask to_mask(const IndexSet& a) {
  Mask m = 0;
  a.for_each([&](std::size_t i) { m |= oracle::bit(i); });
  return m;
}

IndexSet from_mask(std::size_t n, Mask m) {
  IndexSet a(n);
  for (std::size_t i = 0; i < n; ++i)
    if (oracle::has(m, i)) a.set(i);
  return a;
}

oracle::Family family(const FiniteTopology& t) {
  oracle::Family f;
  for (const auto& u : t.opens()) f.push_back(to_mask(u));
  std::sort(f.begin(), f.end());
  return f;
}

std::set<oracle::Family> as_set(const std::vector<FiniteTopology>& ts) {
  std::set<oracle::Family> out;
  for (const auto& t : ts) out.insert(family(t));
  return out;
}

std::set<oracle::Family> as_set(const std::vector<oracle::Family>& fs) { return {fs.begin(), fs.end()}; }

}  // namespace

TEST_CASE("oracle counts: open-family search and preorder search agree") {
  const std::vector<std::size_t> expected{1, 1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto by_families = oracle::all_topologies_by_families(n);
    CHECK(by_families.size() == expected[n]);
    CHECK(as_set(by_families) == as_set(oracle::all_topologies_by_preorders(n)));
  }
}

TEST_CASE("enumerator produces exactly the oracle's topologies") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ts = enumerate_topologies(n);
    const auto library = as_set(ts);
    CHECK(library.size() == ts.size());
    CHECK(library == as_set(oracle::all_topologies_by_families(n)));
  }
}

TEST_CASE("enumerator on 5 points matches the brute-force preorder scan") {
  const auto ts = enumerate_topologies(5);
  CHECK(ts.size() == 6942);
  CHECK(as_set(ts) == as_set(oracle::all_topologies_by_preorders(5)));
}

TEST_CASE("enumerator is deterministic and seekable") {
  TopologyEnumerator a(4), b(4);
  b.seek(100);
  for (std::size_t i = 0; i < 100; ++i) a.next();
  CHECK(a.cursor() == 100);
  CHECK(*a.next() == *b.next());
  CHECK_THROWS_AS(TopologyEnumerator(7), Error);
}

TEST_CASE("from_opens validates") {
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {IndexSet(2), IndexSet(2, {0})}), Error);
  CHECK_THROWS_AS(
      FiniteTopology::from_opens(3, {IndexSet(3), IndexSet(3, {0}), IndexSet(3, {1}), IndexSet::full(3)}), Error);
  const auto t = FiniteTopology::from_opens(2, {IndexSet(2), IndexSet(2, {1}), IndexSet::full(2)});
  CHECK(t == FiniteTopology::sierpinski());
}

TEST_CASE("generate_from_base") {
  {
    const auto g = generate_from_base(3, {IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})});
    CHECK(g.topology.is_discrete());
    CHECK(g.topology.opens().size() == 8);
    CHECK(g.mode == GenerationMode::Base);
  }
  CHECK(generate_from_base(2, {IndexSet(2, {0, 1})}).topology.opens().size() == 2);
  CHECK(generate_from_base(2, {IndexSet(2, {1}), IndexSet(2, {0, 1})}).topology == FiniteTopology::sierpinski());
  const auto sub = generate_from_base(3, {IndexSet(3, {0, 1}), IndexSet(3, {1, 2})});
  CHECK(sub.mode == GenerationMode::Subbase);
  CHECK(sub.topology.is_open(IndexSet(3, {1})));
  try {
    generate_from_base(3, {IndexSet(3, {0})});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyCover);
  }
}

TEST_CASE("closure, interior and regular opens agree with the oracle on all 4-point spaces") {
  const std::size_t n = 4;
  for (const auto& t : enumerate_topologies(n)) {
    const auto f = family(t);
    for (Mask a = 0; a < 16; ++a) {
      const IndexSet s = from_mask(n, a);
      REQUIRE(to_mask(closure(t, s)) == oracle::closure(n, f, a));
      REQUIRE(to_mask(interior(t, s)) == oracle::interior(f, a));
      REQUIRE(t.is_open(s) == oracle::contains(f, a));
    }
    oracle::Family r;
    for (const auto& u : regular_opens(t)) r.push_back(to_mask(u));
    std::sort(r.begin(), r.end());
    CHECK(r == oracle::regular_opens(n, f));
    CHECK(is_semiregular(t).semiregular == oracle::semiregular(n, f));
    const auto sep = separation(t);
    CHECK(sep.hausdorff == oracle::hausdorff(n, f));
    CHECK(sep.regular == oracle::regular(n, f));
    CHECK(sep.normal == oracle::normal(n, f));
  }
}

TEST_CASE("regular opens and semiregularity on the standard examples") {
  const auto s = FiniteTopology::sierpinski();
  CHECK_FALSE(is_regular_open(s, IndexSet(2, {1})));
  const auto sr = is_semiregular(s);
  CHECK_FALSE(sr.semiregular);
  CHECK(sr.witness == IndexSet(2, {1}));
  CHECK(is_semiregular(FiniteTopology::discrete(3)).semiregular);
  CHECK(is_semiregular(FiniteTopology::indiscrete(3)).semiregular);
  const auto d = FiniteTopology::discrete(3);
  for (Mask a = 0; a < 8; ++a) CHECK(is_regular_open(d, from_mask(3, a)));
}

TEST_CASE("separation axioms") {
  const auto ind = separation(FiniteTopology::indiscrete(3));
  CHECK(ind.regular);
  CHECK(ind.normal);
  CHECK_FALSE(ind.t0);
  const auto sier = separation(FiniteTopology::sierpinski());
  CHECK(sier.t0);
  CHECK_FALSE(sier.t1);
  CHECK(separation(FiniteTopology::discrete(4)).hausdorff);
}

TEST_CASE("continuity") {
  const auto s = FiniteTopology::sierpinski();
  const auto ind = FiniteTopology::indiscrete(2);
  CHECK(is_continuous({0, 1}, s, s).continuous);
  CHECK(is_continuous({1, 1}, ind, s).continuous);
  const auto r = is_continuous({0, 1}, ind, s);
  CHECK_FALSE(r.continuous);
  CHECK(r.witness == IndexSet(2, {1}));

  // Against preimages of every open set, for all maps between 3-point spaces.
  const auto ts = enumerate_topologies(3);
  for (std::size_t i = 0; i < ts.size(); i += 4)
    for (std::size_t j = 0; j < ts.size(); j += 3)
      for (std::size_t code = 0; code < 27; ++code) {
        oracle::Map g{code % 3, (code / 3) % 3, code / 9};
        CHECK(is_continuous(g, ts[i], ts[j]).continuous == oracle::continuous(family(ts[i]), family(ts[j]), g));
      }
}

TEST_CASE("semitopological semigroups") {
  const auto c2 = chain(2);
  CHECK(is_semitopological(c2, FiniteTopology::discrete(2)).holds);
  CHECK(is_topological(c2, FiniteTopology::discrete(2)).holds);
  CHECK(is_semitopological(c2, FiniteTopology::sierpinski()).holds);
  CHECK(is_topological(c2, FiniteTopology::sierpinski()).holds);

  // Every topology on the 3-chain against the naive translation check.
  const auto c3 = chain(3);
  bool found_failure = false;
  for (const auto& t : enumerate_topologies(3)) {
    const auto r = is_semitopological(c3, t);
    CHECK(r.holds == oracle::semitopological(c3.rows(), family(t)));
    if (!r.holds) {
      found_failure = true;
      REQUIRE(r.translation_witness);
      const auto [a, right] = *r.translation_witness;
      oracle::Map m(3);
      for (Index x = 0; x < 3; ++x) m[x] = right ? c3.mul(x, a) : c3.mul(a, x);
      CHECK_FALSE(oracle::continuous(family(t), family(t), m));
    }
  }
  CHECK(found_failure);
}

TEST_CASE("joint continuity via the product topology") {
  // Naive: for each (x, y) and each open W around xy, some U(x) x U(y) maps into W.
  const auto c3 = chain(3);
  for (const auto& t : enumerate_topologies(3)) {
    const auto f = family(t);
    bool naive = true;
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y) {
        const Mask ux = to_mask(t.minimal_open(x));
        const Mask uy = to_mask(t.minimal_open(y));
        const Mask w = to_mask(t.minimal_open(c3.mul(x, y)));
        for (Index p = 0; p < 3; ++p)
          for (Index q = 0; q < 3; ++q)
            if (oracle::has(ux, p) && oracle::has(uy, q) && !oracle::has(w, c3.mul(p, q))) naive = false;
      }
    CHECK(is_topological(c3, t).holds == naive);
  }
}

TEST_CASE("subspaces and homeomorphisms") {
  const auto s = FiniteTopology::sierpinski();
  const auto d = FiniteTopology::discrete(4);
  const auto sub = subspace(d, IndexSet(4, {1, 3}));
  CHECK(sub.is_discrete());
  CHECK(sub.size() == 2);
  CHECK(is_homeomorphism_between({1, 0, 3, 2}, {1, 0, 3, 2}, d, IndexSet(4, {0, 1}), IndexSet(4, {0, 1})));
  const auto t = FiniteTopology::from_minimal_neighborhoods(
      {IndexSet(4, {0, 1}), IndexSet(4, {1}), IndexSet(4, {2}), IndexSet(4, {3})});
  CHECK_FALSE(is_homeomorphism_between({2, 3, 0, 1}, {2, 3, 0, 1}, t, IndexSet(4, {0, 1}), IndexSet(4, {2, 3})));
  CHECK(s.open_hull(IndexSet(2, {0})) == IndexSet::full(2));
}

TEST_CASE("opens respects its cap") {
  CHECK_THROWS_AS(FiniteTopology::discrete(20).opens(), Error);
  CHECK(FiniteTopology::discrete(16).opens().size() == (std::size_t{1} << 16));
}

TEST_CASE("dot export lists covering edges") {
  const auto dot = to_dot(FiniteTopology::sierpinski(), {"0", "1"});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
