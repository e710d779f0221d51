#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brandt/category.hpp"
#include "brandt/error.hpp"
#include "brandt/suite.hpp"
#include "oracles.hpp"

using namespace brandt;

namespace {

// |H(e)| by brute force: x with ex = xe = x that has an inverse relative to e.
std::size_t group_order(const FiniteSemigroup& s, Index e) {
  auto local = [&](Index x) { return s.mul(e, x) == x && s.mul(x, e) == x; };
  std::size_t n = 0;
  for (Index x = 0; x < s.size(); ++x) {
    if (!local(x)) continue;
    for (Index y = 0; y < s.size(); ++y)
      if (local(y) && s.mul(x, y) == e && s.mul(y, x) == e) {
        ++n;
        break;
      }
  }
  return n;
}

std::size_t falling(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= n >= i ? n - i : 0;
  return out;
}

const Clause& clause(const Report& r, const std::string& name) {
  const Clause* c = r.find(name);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("object flags") {
  const auto c = make_object("chain3", chain(3), 2);
  CHECK(c.central_idempotents);
  CHECK(c.b_star);
  CHECK(c.semiregular);
  CHECK(c.pseudocompact);
  CHECK(c.admissible());
  const auto b = make_object("B2^1", adjoin_identity(matrix_units(2)), 2);
  CHECK_FALSE(b.central_idempotents);
  CHECK_FALSE(b.b_star);
  CHECK_FALSE(b.admissible());
  const auto s = make_object("chain2", chain(2), 1, FiniteTopology::sierpinski());
  CHECK_FALSE(s.semiregular);
  CHECK(same_object(c, make_object("other", chain(3), 2)));
  CHECK_FALSE(same_object(c, make_object("chain3", chain(3), 1)));
}

TEST_CASE("eligible units") {
  const auto c2 = make_object("chain2", chain(2), 1);
  const auto z2 = make_object("Z2^0", cyclic_group_with_zero(2), 1);
  CHECK(eligible_units(c2, c2) == std::vector<Index>{0, 1});
  CHECK(eligible_units(z2, c2) == std::vector<Index>{0, 1});
  for (const auto& a : category_corpus()) {
    const auto e = eligible_units(a, a);
    CHECK(std::find(e.begin(), e.end(), *a.s.one()) != e.end());
  }
}

TEST_CASE("morphism counts match a direct count") {
  const auto corpus = category_corpus();
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      std::size_t expected = 0;
      for (const auto& h : oracle::homs(a.s.rows(), b.s.rows(), {{*a.s.zero(), *b.s.zero()}})) {
        const Index e = h[*a.s.one()];
        std::size_t units = 1;
        for (std::size_t k = 0; k < a.lambda; ++k) units *= group_order(b.s, e);
        expected += units * falling(b.lambda, a.lambda);
      }
      CHECK(enumerate_morphisms(a, b).size() == expected);
    }
}

TEST_CASE("composition follows the written formula") {
  const auto z2 = make_object("Z2^0", cyclic_group_with_zero(2), 1);
  const Index one = 1, a = 2;
  const TpcbMorphism f{{0, 1, 2}, {a}, {0}, one};
  const TpcbMorphism g{{0, 1, 2}, {a}, {0}, one};
  const auto fg = compose(z2, z2, z2, f, g);
  CHECK(fg.u == std::vector<Index>{one});
  CHECK(fg.h == HomMap{0, 1, 2});

  const auto unit = identity_morphism(z2);
  const auto uu = compose(z2, z2, z2, unit, unit);
  CHECK(uu.u == std::vector<Index>{one});

  const auto corpus = category_corpus();
  for (const auto& x : corpus)
    for (const auto& y : corpus)
      for (const auto& z : corpus) {
        if (x.lambda > y.lambda || y.lambda > z.lambda) continue;
        const auto fs = enumerate_morphisms(x, y);
        const auto gs = enumerate_morphisms(y, z);
        for (std::size_t i = 0; i < fs.size(); i += 3)
          for (std::size_t j = 0; j < gs.size(); j += 3) {
            const auto& p = fs[i];
            const auto& q = gs[j];
            const auto c = compose(x, y, z, p, q);
            for (Index s = 0; s < x.s.size(); ++s) CHECK(c.h[s] == q.h[p.h[s]]);
            for (std::size_t k = 0; k < x.lambda; ++k) {
              CHECK(c.phi[k] == q.phi[p.phi[k]]);
              CHECK(c.u[k] == z.s.mul(q.u[p.phi[k]], q.h[p.u[k]]));
            }
          }
      }
}

TEST_CASE("compose rejects mismatched shapes") {
  const auto a = make_object("chain2", chain(2), 2);
  const auto b = make_object("chain2", chain(2), 1);
  // phi of the identity on a reaches block 2, which b does not have.
  try {
    compose(a, b, b, identity_morphism(a), identity_morphism(b));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("the functor sends the gauge morphism to the gauge sigma") {
  const auto z2 = make_object("Z2^0", cyclic_group_with_zero(2), 2);
  const TpcbMorphism m{{0, 1, 2}, {1, 2}, {0, 1}, 1};
  const auto ext = functor_obj(z2);
  CHECK(functor_mor(ext, ext, m) == sigma_construct(ext, ext, {{0, 1, 2}, {1, 2}, {0, 1}, 1}));
  const TpcbMorphism ann{annihilator(z2.s, z2.s), {0, 0}, {0, 1}, 0};
  CHECK(functor_mor(ext, ext, ann) == annihilator(ext.semigroup(), ext.semigroup()));
}

TEST_CASE("laws on the corpus") {
  const auto corpus = category_corpus();
  const Report laws = verify_category_laws(corpus);
  CHECK(laws.passed());
  for (const char* name : {"identity_enumerated", "left_identity", "right_identity", "associativity",
                           "composition_closed", "bracket_in_single_subgroup"})
    CHECK_MESSAGE(clause(laws, name).status == ClauseStatus::Pass, name);
  CHECK(verify_functor_laws(corpus).passed());
  CHECK(verify_fullness(corpus).passed());
}

TEST_CASE("a single object with its identity passes") {
  const std::vector<TpcbObject> one{make_object("trivial", trivial_with_zero(), 1)};
  CHECK(verify_category_laws(one).passed());
  CHECK(verify_functor_laws(one).passed());
}

TEST_CASE("the unrestricted unit choice breaks the left identity law") {
  const std::vector<TpcbObject> corpus{make_object("chain2", chain(2), 1)};
  CHECK(enumerate_morphisms(corpus[0], corpus[0], UnitChoice::AnyEligible).size() >
        enumerate_morphisms(corpus[0], corpus[0]).size());
  const Report r = verify_category_laws(corpus, UnitChoice::AnyEligible);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(clause(r, "left_identity").passed());
}

TEST_CASE("fullness skips targets outside the admissible class") {
  const std::vector<TpcbObject> corpus{make_object("chain2", chain(2), 1),
                                       make_object("B2^1", adjoin_identity(matrix_units(2)), 1)};
  const Report r = verify_fullness(corpus);
  std::size_t skipped = 0;
  for (const auto& c : r.clauses)
    if (c.name.find("->B2^1") != std::string::npos) {
      CHECK(c.status == ClauseStatus::Skipped);
      CHECK(c.note.find("B*-property fails") != std::string::npos);
      ++skipped;
    }
  CHECK(skipped == 2);
  CHECK(r.passed());
}
