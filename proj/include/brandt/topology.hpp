#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brandt/index_set.hpp"
#include "brandt/semigroup.hpp"

namespace brandt {

/// Largest carrier accepted by `enumerate_topologies`.
inline constexpr std::size_t kDefaultTopologyCap = 6;
/// Largest open-set family `opens()` will materialise.
inline constexpr std::size_t kDefaultOpenListCap = std::size_t{1} << 16;

/// A topology on the finite carrier [0, n).
///
/// A finite topology is determined by the smallest open set U(x) containing
/// each point; the open sets are exactly the unions of these. That form is
/// what is stored, so carriers far beyond what an explicit open-set list
/// could hold are fine. `opens()` expands the family on demand.
class FiniteTopology {
 public:
  /// Validates an explicit open-set family: contains the empty set and the
  /// carrier, closed under pairwise union and intersection.
  static FiniteTopology from_opens(std::size_t n, const std::vector<IndexSet>& opens);
  /// Requires x in U(x) and U(y) inside U(x) whenever y is in U(x).
  static FiniteTopology from_minimal_neighborhoods(std::vector<IndexSet> neighborhoods);
  /// From a preorder given as `leq[x][y]` meaning x <= y (x lies in the closure of y).
  static FiniteTopology from_preorder(const std::vector<std::vector<bool>>& leq);

  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology indiscrete(std::size_t n);
  /// Two points; {1} is the only non-trivial open set.
  static FiniteTopology sierpinski();

  std::size_t size() const noexcept { return nbhd_.size(); }
  const IndexSet& minimal_open(std::size_t x) const { return nbhd_.at(x); }
  const std::vector<IndexSet>& minimal_opens() const noexcept { return nbhd_; }

  bool is_open(const IndexSet& a) const;
  bool is_closed(const IndexSet& a) const { return is_open(a.complement()); }
  bool is_discrete() const;

  /// Smallest open set containing `a`.
  IndexSet open_hull(const IndexSet& a) const;

  /// Every open set, canonically ordered (size, then lexicographic).
  /// Throws CapExceeded when the family is larger than `cap`.
  std::vector<IndexSet> opens(std::size_t cap = kDefaultOpenListCap) const;
  /// Open sets containing x, canonically ordered.
  std::vector<IndexSet> open_neighborhoods(std::size_t x, std::size_t cap = kDefaultOpenListCap) const;

  /// Specialisation preorder: x <= y iff x is in the closure of {y}.
  bool specializes(std::size_t x, std::size_t y) const { return nbhd_[x].test(y); }

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  explicit FiniteTopology(std::vector<IndexSet> nbhd) : nbhd_(std::move(nbhd)) {}
  std::vector<IndexSet> nbhd_;
};

IndexSet closure(const FiniteTopology& t, const IndexSet& a);
IndexSet interior(const FiniteTopology& t, const IndexSet& a);

bool is_regular_open(const FiniteTopology& t, const IndexSet& a);
std::vector<IndexSet> regular_opens(const FiniteTopology& t, std::size_t cap = kDefaultOpenListCap);

struct SemiregularCheck {
  bool semiregular = true;
  std::optional<IndexSet> witness;  // an open set not covered by regular opens inside it
};
SemiregularCheck is_semiregular(const FiniteTopology& t);

struct SeparationReport {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  bool regular = false;  // without T1
  bool normal = false;   // without T1
};
SeparationReport separation(const FiniteTopology& t);

/// Subspace topology on `subset`, indexed by the increasing members of `subset`.
FiniteTopology subspace(const FiniteTopology& t, const IndexSet& subset);

/// Witness is an open set of the codomain whose preimage is not open.
struct ContinuityCheck {
  bool continuous = true;
  std::optional<IndexSet> witness;
};
ContinuityCheck is_continuous(const std::vector<std::size_t>& f, const FiniteTopology& dom, const FiniteTopology& cod);

/// Continuity of f restricted to `from`, into the subspace `to` of `cod`.
bool is_continuous_between(const std::vector<std::size_t>& f,
                           const FiniteTopology& dom,
                           const IndexSet& from,
                           const FiniteTopology& cod,
                           const IndexSet& to);

/// f maps `from` bijectively onto `to`, `g` inverts it on `to`, and both are continuous.
bool is_homeomorphism_between(const std::vector<std::size_t>& f,
                              const std::vector<std::size_t>& g,
                              const FiniteTopology& t,
                              const IndexSet& from,
                              const IndexSet& to);

/// Witness: (a, is_right) for a discontinuous translation x -> ax (or x -> xa),
/// or the pair (x, y) at which the product map fails to be continuous.
struct SemitopCheck {
  bool holds = true;
  std::optional<std::pair<Index, bool>> translation_witness;
  std::optional<std::pair<Index, Index>> product_witness;
};
SemitopCheck is_semitopological(const FiniteSemigroup& s, const FiniteTopology& t);
/// Joint continuity of the product map for the product topology on carrier x carrier.
SemitopCheck is_topological(const FiniteSemigroup& s, const FiniteTopology& t);

enum class GenerationMode { Base, Subbase };

struct GeneratedTopology {
  FiniteTopology topology;
  GenerationMode mode;
};

/// Smallest topology containing `base`. The family is checked for the base
/// axiom; when it fails the family is treated as a subbase (closed under
/// finite intersections first) and `mode` says so. Throws EmptyCover if some
/// point lies in no member.
GeneratedTopology generate_from_base(std::size_t n, const std::vector<IndexSet>& base);

/// Deterministic stream over every topology on n labelled points, each exactly
/// once, via the preorders on [0, n). The order is canonical: topologies on
/// n points extend those on n-1 points by the down-set and up-set of the new
/// point, both iterated in increasing bitmask order.
class TopologyEnumerator {
 public:
  explicit TopologyEnumerator(std::size_t n, std::size_t cap = kDefaultTopologyCap);

  /// Next topology, or nullopt when exhausted.
  std::optional<FiniteTopology> next();
  /// Position of the next topology to be produced.
  std::size_t cursor() const noexcept { return cursor_; }
  /// Restart from the beginning and skip to `cursor`.
  void seek(std::size_t cursor);

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> levels_;  // preorders on n points, one up-set bitmask per point
  std::size_t cursor_ = 0;
};

std::vector<FiniteTopology> enumerate_topologies(std::size_t n, std::size_t cap = kDefaultTopologyCap);

/// Graphviz rendering of the specialisation preorder (covering edges only).
std::string to_dot(const FiniteTopology& t, const std::vector<std::string>& names = {});

}  // namespace brandt
