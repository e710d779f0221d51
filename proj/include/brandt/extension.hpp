#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "brandt/index_set.hpp"
#include "brandt/semigroup.hpp"

namespace brandt {

/// Structured identity of an element of B^0_lambda(S): the zero, or a triple
/// (alpha, s, beta) with s a non-zero element of S. Block indices are 0-based.
struct BrandtLabel {
  bool is_zero = true;
  std::size_t alpha = 0;
  Index element = 0;
  std::size_t beta = 0;

  static BrandtLabel zero() { return {}; }
  static BrandtLabel triple(std::size_t alpha, Index s, std::size_t beta) { return {false, alpha, s, beta}; }

  friend auto operator<=>(const BrandtLabel&, const BrandtLabel&) = default;
};

/// B^0_lambda(S) for a finite monoid S with zero, together with the bijection
/// between labels and positions in the flat Cayley table.
///
/// Carrier order: zero first, then triples in lexicographic (alpha, s, beta)
/// order with s running over the non-zero elements of S in S's order.
class BrandtExtension {
 public:
  BrandtExtension(FiniteSemigroup base, std::size_t lambda);

  const FiniteSemigroup& base() const noexcept { return base_; }
  const FiniteSemigroup& semigroup() const noexcept { return ext_; }
  std::size_t lambda() const noexcept { return lambda_; }
  std::size_t size() const noexcept { return ext_.size(); }

  Index zero() const noexcept { return 0; }
  const BrandtLabel& label(Index i) const { return labels_.at(i); }
  const std::vector<BrandtLabel>& labels() const noexcept { return labels_; }

  /// Position of (alpha, s, beta); the zero when s is the zero of S.
  Index index(std::size_t alpha, Index s, std::size_t beta) const;
  Index index(const BrandtLabel& label) const;

  /// S_{alpha,beta}: the block together with the zero.
  IndexSet block(std::size_t alpha, std::size_t beta) const;
  /// S*_{alpha,beta}: the block without the zero.
  IndexSet block_star(std::size_t alpha, std::size_t beta) const;

  /// A_{alpha,beta} (or A*_{alpha,beta} when `starred`) for A a subset of S.
  IndexSet lift(const IndexSet& subset, std::size_t alpha, std::size_t beta, bool starred = false) const;

  /// s -> (alpha, s, beta), with 0_S sent to the zero.
  std::vector<Index> block_map(std::size_t alpha, std::size_t beta) const;

  /// x -> (gamma,1,alpha) x (beta,1,delta): carries S_{alpha,beta} onto S_{gamma,delta}.
  std::vector<Index> translation(std::size_t alpha, std::size_t beta, std::size_t gamma, std::size_t delta) const;

  std::string render(Index i) const { return ext_.name(i); }

 private:
  FiniteSemigroup base_;
  std::size_t lambda_;
  Index base_zero_;
  Index base_one_;
  std::vector<Index> nonzero_;        // non-zero elements of S in order
  std::vector<Index> rank_in_nonzero_;  // S index -> position in nonzero_
  std::vector<BrandtLabel> labels_;
  FiniteSemigroup ext_;
};

/// B^0_lambda(S); throws NoZero / NoOne when S is not a monoid with zero.
BrandtExtension brandt_lambda_extension(const FiniteSemigroup& s, std::size_t lambda);

/// B_lambda(S) = {0} and lambda x S x lambda without collapsing (alpha,0_S,beta),
/// plus the ideal J = {0} and all (alpha,0_S,beta). Used as an independent route
/// to B^0_lambda(S) through `rees_quotient`.
struct FullBrandtExtension {
  FiniteSemigroup semigroup;
  IndexSet ideal;
};
FullBrandtExtension brandt_full_extension(const FiniteSemigroup& s, std::size_t lambda);

struct ReesQuotient {
  FiniteSemigroup quotient;
  std::vector<Index> projection;  // S index -> quotient index
};

/// S / I. The ideal collapses onto a single element placed at the position of
/// its first member. Throws NotAnIdeal with an (x, y) witness.
ReesQuotient rees_quotient(const FiniteSemigroup& s, const IndexSet& ideal);

}  // namespace brandt
