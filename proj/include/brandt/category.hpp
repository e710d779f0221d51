#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brandt/homomorphism.hpp"
#include "brandt/report.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/topology.hpp"

namespace brandt {

/// An object (S, lambda): a finite monoid with zero and a block count.
///
/// The flags record membership of S in the admissible class: central
/// idempotents, the B*-property for lambda, and semiregularity of the
/// attached topology (discrete when none is given). Every finite space is
/// pseudocompact, so that qualifier is always true.
struct TpcbObject {
  std::string name;
  FiniteSemigroup s;
  std::size_t lambda = 1;
  FiniteTopology tau;
  bool central_idempotents = false;
  bool b_star = false;
  bool semiregular = false;
  bool pseudocompact = true;

  bool admissible() const { return central_idempotents && b_star && semiregular; }
  /// True when S is the one-element monoid; all such objects are identified.
  bool trivial() const { return s.size() == 1; }
};

TpcbObject make_object(std::string name, FiniteSemigroup s, std::size_t lambda);
TpcbObject make_object(std::string name, FiniteSemigroup s, std::size_t lambda, FiniteTopology tau);

bool same_object(const TpcbObject& a, const TpcbObject& b);

/// (h, u, phi): h zero preserving S -> S', u: lambda -> H(e) for one idempotent e
/// of S', phi: lambda -> lambda' injective. Equality ignores `e`, which u determines.
struct TpcbMorphism {
  HomMap h;
  std::vector<Index> u;
  std::vector<std::size_t> phi;
  Index e = 0;

  friend bool operator==(const TpcbMorphism& a, const TpcbMorphism& b) {
    return a.h == b.h && a.u == b.u && a.phi == b.phi;
  }
  friend auto operator<=>(const TpcbMorphism& a, const TpcbMorphism& b) {
    if (auto c = a.h <=> b.h; c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.phi <=> b.phi;
  }
};

/// Idempotents e of S' with e = g(1_S) for some zero-preserving continuous g: S -> S'.
std::vector<Index> eligible_units(const TpcbObject& a, const TpcbObject& b);

TpcbMorphism identity_morphism(const TpcbObject& a);

/// f: a -> b followed by g: b -> c, i.e. (hh', [u, phi, h', u'], phi phi') with
/// [u, phi, h', u'](x) = u'(phi(x)) h'(u(x)). Throws DomainMismatch when the
/// shapes do not line up and BracketOutsideSubgroup when the bracket values do
/// not lie in a single maximal subgroup.
TpcbMorphism compose(const TpcbObject& a,
                     const TpcbObject& b,
                     const TpcbObject& c,
                     const TpcbMorphism& f,
                     const TpcbMorphism& g);

/// Which maximal subgroup a morphism's u may land in.
///
/// HomImage: H(h(1_S)), one subgroup per h. AnyEligible: H(e) for every e in
/// eligible_units, independently of h; with this choice the identity laws
/// fail (u(a) h(1_S) != u(a) when h(1_S) != e).
enum class UnitChoice { HomImage, AnyEligible };

/// Every morphism a -> b: h over continuous zero-preserving homs, u over
/// H(e)^lambda for the e allowed by `choice`, phi over injections. Sorted.
std::vector<TpcbMorphism> enumerate_morphisms(const TpcbObject& a,
                                              const TpcbObject& b,
                                              UnitChoice choice = UnitChoice::HomImage);

/// B(S, lambda) = B^0_lambda(S).
BrandtExtension functor_obj(const TpcbObject& a);
/// B(h, u, phi): the sigma map, or the annihilator when e = 0.
HomMap functor_mor(const BrandtExtension& src, const BrandtExtension& dst, const TpcbMorphism& m);

/// Identity and associativity laws on every composable pair and triple of
/// enumerated morphisms, plus closure of composites in the enumerated sets.
Report verify_category_laws(const std::vector<TpcbObject>& corpus, UnitChoice choice = UnitChoice::HomImage);
/// B(id) = id and B(f then g) = B(g) o B(f) on every composable pair.
Report verify_functor_laws(const std::vector<TpcbObject>& corpus);
/// For every ordered pair with an admissible target: each non-annihilating
/// continuous zero-preserving hom between the extensions is B(m) for an
/// enumerated m, and decomposes.
Report verify_fullness(const std::vector<TpcbObject>& corpus);

}  // namespace brandt
