#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brandt/index_set.hpp"

namespace brandt {

using Index = std::size_t;

/// Largest carrier accepted by the exhaustive embedding oracles.
inline constexpr std::size_t kDefaultMaxOrder = 16;

/// A finite semigroup given by a dense, validated Cayley table.
///
/// Instances can only be obtained through `validate`, so every live value is
/// associative and its declared zero / identity obey their laws. Element
/// names are labels only; all algorithms work on indices, and the canonical
/// element order is the order the names were supplied in.
class FiniteSemigroup {
 public:
  static FiniteSemigroup validate(std::vector<std::string> elements,
                                  const std::vector<std::vector<Index>>& table,
                                  std::optional<Index> zero = std::nullopt,
                                  std::optional<Index> one = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  Index mul(Index a, Index b) const { return table_[a * names_.size() + b]; }

  const std::vector<std::string>& elements() const noexcept { return names_; }
  const std::string& name(Index i) const { return names_.at(i); }
  std::optional<Index> index_of(std::string_view name) const;

  std::optional<Index> zero() const noexcept { return zero_; }
  std::optional<Index> one() const noexcept { return one_; }

  /// Throws NoZero / NoOne when the element is not declared.
  Index require_zero() const;
  Index require_one() const;

  std::vector<std::vector<Index>> rows() const;

  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;

 private:
  FiniteSemigroup() = default;

  std::vector<std::string> names_;
  std::vector<Index> table_;
  std::optional<Index> zero_;
  std::optional<Index> one_;
};

/// The maximal subgroup H(e): units of the local monoid eSe.
struct GroupView {
  std::vector<Index> members;   // sorted parent indices
  std::vector<Index> inverses;  // inverses[i] is the inverse of members[i]
  Index unit = 0;

  bool contains(Index x) const;
  Index inverse(Index x) const;
  std::size_t order() const noexcept { return members.size(); }
};

struct InverseCheck {
  bool inverse = false;
  std::vector<Index> inversion;  // x -> x^{-1}, filled when inverse
  std::optional<Index> witness;  // element with zero or several inverses
};

struct CentralityCheck {
  bool central = true;
  std::optional<std::pair<Index, Index>> witness;  // (idempotent e, x) with ex != xe
};

struct BStarCheck {
  bool holds = true;
  bool no_matrix_units = true;        // no copy of B_lambda at all
  bool no_zero_sharing_b2 = true;     // no copy of B_2 whose zero is 0_S
  std::optional<std::vector<Index>> witness;  // offending embedding of B_lambda or B_2
};

// --- queries -----------------------------------------------------------------

std::vector<Index> idempotents(const FiniteSemigroup& s);
bool is_idempotent(const FiniteSemigroup& s, Index x);
GroupView maximal_subgroup(const FiniteSemigroup& s, Index e);
InverseCheck is_inverse(const FiniteSemigroup& s);
CentralityCheck idempotents_central(const FiniteSemigroup& s);
bool is_commutative(const FiniteSemigroup& s);

/// Scans for a two-sided zero / identity regardless of what was declared.
std::optional<Index> find_zero(const FiniteSemigroup& s);
std::optional<Index> find_identity(const FiniteSemigroup& s);

/// Returns a pair (x, y) with x in I, y in S and xy or yx outside I.
std::optional<std::pair<Index, Index>> ideal_violation(const FiniteSemigroup& s, const IndexSet& ideal);
bool is_subsemigroup(const FiniteSemigroup& s, const IndexSet& members);

/// Smallest subsemigroup containing `seed`.
IndexSet closure(const FiniteSemigroup& s, const IndexSet& seed);

/// A generating set: indecomposable elements first, then greedy choices by closure growth, with redundant ones dropped.
std::vector<Index> generators(const FiniteSemigroup& s);

/// (index, period) of the monogenic subsemigroup generated by x.
std::pair<std::size_t, std::size_t> index_period(const FiniteSemigroup& s, Index x);

/// The subsemigroup on `members` (in increasing parent order), plus the
/// parent index of each new element. Zero / one are carried over when they
/// are given and lie in `members`.
std::pair<FiniteSemigroup, std::vector<Index>> restrict_to(const FiniteSemigroup& s,
                                                           const IndexSet& members,
                                                           std::optional<Index> zero = std::nullopt,
                                                           std::optional<Index> one = std::nullopt);

// --- constructions -----------------------------------------------------------

/// B_n: {0} and the pairs (i,j), with (i,j)(k,l) = (i,l) when j = k and 0 otherwise.
FiniteSemigroup matrix_units(std::size_t n);
/// The n-element chain 0 < m1 < ... < 1 under min.
FiniteSemigroup chain(std::size_t n);
/// The cyclic group of order k with elements 1, a, a^2, ...
FiniteSemigroup cyclic_group(std::size_t k);
FiniteSemigroup cyclic_group_with_zero(std::size_t k);
/// Adds a fresh annihilating element in front of the carrier.
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);
/// Adds a fresh identity at the end of the carrier; a declared zero is kept.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);
/// {l1, ..., lk} with xy = x.
FiniteSemigroup left_zero_band(std::size_t k);
/// The two-element monoid with zero {0, 1}.
FiniteSemigroup trivial_with_zero();

// --- embedding search ----------------------------------------------------------

using Anchor = std::pair<Index, Index>;

struct MapSearchOptions {
  bool injective = false;
  std::vector<Anchor> anchors;
  /// Optional filter on candidate images of generators.
  std::function<bool(Index src, Index dst)> admissible;
  /// Upper bound on the naive generator-image search space.
  double max_search_space = 2e8;
};

/// Calls `visit` for every homomorphism src -> dst meeting `options`, in the
/// order of the generator-image search. `visit` returns false to stop early.
void search_homomorphisms(const FiniteSemigroup& src,
                          const FiniteSemigroup& dst,
                          const MapSearchOptions& options,
                          const std::function<bool(const std::vector<Index>&)>& visit);

/// Lexicographically least injective homomorphism a -> s respecting anchors.
std::optional<std::vector<Index>> find_embedding(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& s,
                                                 const std::vector<Anchor>& anchors = {},
                                                 std::size_t max_order = kDefaultMaxOrder);

std::optional<std::vector<Index>> find_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b);

/// Direct re-check of an index map: total, product preserving and (optionally) injective.
bool verify_map(const FiniteSemigroup& src,
                const FiniteSemigroup& dst,
                const std::vector<Index>& map,
                bool injective);

BStarCheck has_B_star_property(const FiniteSemigroup& s, std::size_t lambda);

}  // namespace brandt
