#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brandt/error.hpp"
#include "brandt/extension.hpp"
#include "oracles.hpp"

using namespace brandt;

namespace {

std::vector<FiniteSemigroup> monoids() {
  return {chain(2), chain(3), chain(4), cyclic_group_with_zero(2), cyclic_group_with_zero(3),
          adjoin_identity(adjoin_zero(left_zero_band(2)))};
}

}  // namespace

TEST_CASE("the product agrees with the glossary formula on labels") {
  for (const auto& s : monoids())
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      const BrandtExtension ext(s, lambda);
      CHECK(ext.size() == lambda * lambda * (s.size() - 1) + 1);
      for (Index x = 0; x < ext.size(); ++x)
        for (Index y = 0; y < ext.size(); ++y)
          REQUIRE(ext.label(ext.semigroup().mul(x, y)) == oracle::brandt_mul(s, ext.label(x), ext.label(y)));
      CHECK(oracle::associative(ext.semigroup().rows()));
    }
}

TEST_CASE("labels enumerate the carrier once, zero first") {
  const BrandtExtension ext(chain(3), 2);
  CHECK(ext.label(0).is_zero);
  std::set<BrandtLabel> seen(ext.labels().begin(), ext.labels().end());
  CHECK(seen.size() == ext.size());
  for (Index i = 1; i < ext.size(); ++i) {
    if (i > 1) CHECK(ext.labels()[i - 1] < ext.labels()[i]);
    CHECK(ext.index(ext.label(i)) == i);
  }
  CHECK(ext.index(0, 0, 1) == ext.zero());
  CHECK(ext.render(ext.index(0, 2, 1)) == "(1,1,2)");
}

TEST_CASE("B^0_2 of the 2-chain is the 5-element matrix-unit semigroup") {
  const BrandtExtension ext(trivial_with_zero(), 2);
  CHECK(ext.size() == 5);
  CHECK(oracle::isomorphism(ext.semigroup().rows(), matrix_units(2).rows()).has_value());
}

TEST_CASE("B^0_1(S) is isomorphic to S") {
  for (const auto& s : monoids()) {
    const BrandtExtension ext(s, 1);
    CHECK(oracle::isomorphism(ext.semigroup().rows(), s.rows()).has_value());
    CHECK(ext.semigroup().one().has_value());
  }
}

TEST_CASE("B^0_2(Z2^0) products") {
  const auto z2 = cyclic_group_with_zero(2);
  const Index a = *z2.index_of("a");
  const Index one = *z2.index_of("1");
  const BrandtExtension ext(z2, 2);
  CHECK(ext.size() == 9);
  const auto& b = ext.semigroup();
  CHECK(b.mul(ext.index(0, a, 1), ext.index(1, a, 0)) == ext.index(0, one, 0));
  CHECK(b.mul(ext.index(0, a, 1), ext.index(0, a, 1)) == ext.zero());
  CHECK_FALSE(find_identity(b));
  CHECK(find_zero(b) == ext.zero());
}

TEST_CASE("extension needs a monoid with zero") {
  CHECK_THROWS_AS(BrandtExtension(cyclic_group(2), 2), Error);
  CHECK_THROWS_AS(BrandtExtension(matrix_units(2), 2), Error);
  try {
    brandt_lambda_extension(left_zero_band(2), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoZero);
  }
}

TEST_CASE("Rees quotients") {
  const auto c3 = chain(3);
  const auto q = rees_quotient(c3, IndexSet(3, {0, 1}));
  CHECK(q.quotient.size() == 2);
  CHECK(oracle::isomorphism(q.quotient.rows(), chain(2).rows()).has_value());
  CHECK(q.projection == std::vector<Index>{0, 0, 1});
  for (const auto& s : monoids()) {
    const auto r = rees_quotient(s, IndexSet(s.size(), {s.require_zero()}));
    CHECK(oracle::isomorphism(r.quotient.rows(), s.rows()).has_value());
  }
  try {
    rees_quotient(c3, IndexSet(3, {0, 2}));
    FAIL("accepted a non-ideal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnIdeal);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("the full extension modulo its ideal is the Brandt extension") {
  for (const auto& s : monoids())
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      const auto full = brandt_full_extension(s, lambda);
      CHECK(full.semigroup.size() == lambda * lambda * s.size() + 1);
      const auto q = rees_quotient(full.semigroup, full.ideal);
      CHECK(oracle::isomorphism(q.quotient.rows(), BrandtExtension(s, lambda).semigroup().rows()).has_value());
    }
}

TEST_CASE("lifts and blocks") {
  const BrandtExtension ext(trivial_with_zero(), 2);
  CHECK(ext.lift(IndexSet(2, {1}), 0, 1) == IndexSet(5, {ext.index(0, 1, 1)}));
  CHECK(ext.lift(IndexSet(2, {0, 1}), 0, 0) == IndexSet(5, {ext.zero(), ext.index(0, 1, 0)}));
  CHECK(ext.lift(IndexSet(2, {0, 1}), 0, 0, true) == IndexSet(5, {ext.index(0, 1, 0)}));

  const BrandtExtension e3(chain(3), 3);
  std::size_t covered = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(e3.block(a, b).count() == 3);
      CHECK(e3.block_star(a, b) == e3.block(a, b) - IndexSet(e3.size(), {e3.zero()}));
      covered += e3.block_star(a, b).count();
      // The block map is an isomorphism of S onto the block.
      const auto m = e3.block_map(a, b);
      if (a == b) CHECK(oracle::is_hom(chain(3).rows(), e3.semigroup().rows(), m));
    }
  CHECK(covered + 1 == e3.size());
}

TEST_CASE("translations carry one block onto another") {
  const BrandtExtension ext(cyclic_group_with_zero(3), 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t d = 0; d < 3; ++d) {
          const auto t = ext.translation(a, b, g, d);
          IndexSet image(ext.size());
          ext.block(a, b).for_each([&](Index x) { image.set(t[x]); });
          CHECK(image == ext.block(g, d));
          ext.block_star(a, b).for_each([&](Index x) {
            CHECK(ext.label(t[x]).element == ext.label(x).element);
          });
        }
}
