#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "brandt/extension.hpp"
#include "brandt/report.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/topology.hpp"

namespace brandt {

/// A total map between carriers, source index -> target index.
using HomMap = std::vector<Index>;

struct HomCheck {
  bool hom = true;
  std::optional<std::pair<Index, Index>> witness;  // (x, y) with f(xy) != f(x) f(y)
};

/// Throws ShapeMismatch / IndexOutOfRange when `f` is not a total map.
HomCheck is_hom(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomMap& f);
bool is_continuous_hom(const FiniteSemigroup& src,
                       const FiniteSemigroup& dst,
                       const HomMap& f,
                       const FiniteTopology& tau_src,
                       const FiniteTopology& tau_dst);

/// x -> 0_T.
HomMap annihilator(const FiniteSemigroup& src, const FiniteSemigroup& dst);
bool is_annihilating(const FiniteSemigroup& dst, const HomMap& f);

struct HomConstraints {
  bool zero_preserving = false;
  /// When both are set, only continuous maps are kept.
  const FiniteTopology* source_topology = nullptr;
  const FiniteTopology* target_topology = nullptr;
  double max_search_space = 2e8;
};

/// Every homomorphism src -> dst meeting the constraints, in increasing
/// lexicographic order. Throws SearchSpaceTooLarge.
std::vector<HomMap> enumerate_homs(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomConstraints& c = {});

/// The data (h, u, phi, e) of the sigma construction between B^0_{l1}(S) and B^0_{l2}(T).
struct SigmaData {
  HomMap h;                       // S -> T, zero preserving
  std::vector<Index> u;           // lambda_1 -> H(e)
  std::vector<std::size_t> phi;   // lambda_1 -> lambda_2, injective
  Index e = 0;                    // non-zero idempotent of T

  friend auto operator<=>(const SigmaData&, const SigmaData&) = default;
};

/// sigma(a, s, b) = (phi(a), u(a) h(s) u(b)^-1, phi(b)), and the zero when h(s)
/// or the dressed middle is 0_T. The result is re-validated as a homomorphism.
/// Throws NotZeroPreserving, NotIdempotent, UOutsideSubgroup, PhiNotInjective,
/// ShapeMismatch and NotAHomomorphism.
HomMap sigma_construct(const BrandtExtension& src, const BrandtExtension& dst, const SigmaData& data);

/// I_h, the preimage of 0_T. Throws NotZeroPreserving, and NotAnIdeal if the
/// preimage is not a two-sided ideal (impossible for a homomorphism).
IndexSet kernel_ideal(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomMap& h);

/// Lexicographically least (h, u, phi, e) whose sigma equals `sigma`, or
/// nullopt. Annihilating maps never decompose. `homs` may supply the
/// zero-preserving homomorphisms S -> T to avoid recomputing them.
std::optional<SigmaData> decompose(const BrandtExtension& src,
                                   const BrandtExtension& dst,
                                   const HomMap& sigma,
                                   const std::vector<HomMap>* homs = nullptr);

/// Checks that the image of a non-annihilating sigma is a subsemigroup
/// isomorphic to B^0_lambda(sigma(S_{1,1})), and, when `tau` is given, that
/// the image blocks sigma(S_{a,b}) are pairwise homeomorphic via translations.
Report image_structure(const BrandtExtension& src,
                       const BrandtExtension& dst,
                       const HomMap& sigma,
                       const FiniteTopology* tau = nullptr);

/// Outcome of comparing the sigma constructions with a direct enumeration of
/// zero-preserving homomorphisms between the two extensions.
struct CompletenessResult {
  std::size_t lambda1 = 0;
  std::size_t lambda2 = 0;
  bool idempotents_central = false;
  bool b_star = false;
  std::size_t tuples = 0;          // (h, u, phi, e) tried
  std::size_t rejected = 0;        // tuples whose sigma is not a homomorphism
  std::size_t constructed = 0;     // distinct sigma maps, annihilator included
  std::size_t enumerated = 0;      // zero-preserving homs between the extensions
  std::vector<HomMap> missing;     // enumerated but not constructed
  std::vector<HomMap> extra;       // constructed but not enumerated

  bool hypotheses() const { return idempotents_central && b_star; }
  bool equal() const { return missing.empty() && extra.empty(); }
};

CompletenessResult completeness_check(const FiniteSemigroup& s,
                                      const FiniteSemigroup& t,
                                      std::size_t lambda1,
                                      std::size_t lambda2);

/// All injections [0, m) -> [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> injections(std::size_t m, std::size_t n);

}  // namespace brandt
