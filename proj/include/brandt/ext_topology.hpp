#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "brandt/extension.hpp"
#include "brandt/report.hpp"
#include "brandt/topology.hpp"

namespace brandt {

/// How the neighbourhoods of the zero of B^0_lambda(S) are described.
///
/// FiniteBase: the union over all blocks of the lifts of an open U containing 0_S.
/// CofiniteBase: for a subset A of lambda x lambda, whole blocks S_{a,b} off A
/// and lifts of U on A. For finite lambda both describe the same topology.
enum class BaseMode { FiniteBase, CofiniteBase };

std::string_view to_string(BaseMode mode);
BaseMode parse_base_mode(std::string_view text);

/// The explicit base family, before generation. Non-zero points get the
/// punctured lifts (U)_{a,b} \ {0} of every open U containing the point.
std::vector<IndexSet> extension_base(const BrandtExtension& ext, const FiniteTopology& tau, BaseMode mode);

/// The topology on B^0_lambda(S) generated by `extension_base`.
FiniteTopology extension_topology(const BrandtExtension& ext, const FiniteTopology& tau, BaseMode mode);

/// Clause-by-clause check of a candidate topology on the extension:
/// diagonal restriction, open/closed blocks, homeomorphic blocks, the lifting
/// and local-base statements for finite lambda, separate continuity and the
/// transfer of Hausdorff / regular / normal.
Report verify_extension(const BrandtExtension& ext, const FiniteTopology& tau, const FiniteTopology& tau_b);

/// Does the restriction of `tau_b` to S_{alpha,alpha} coincide with `tau`?
bool restricts_to(const BrandtExtension& ext, const FiniteTopology& tau, const FiniteTopology& tau_b, std::size_t alpha);

enum class ClassFilter { HausdorffSemitop, Semitop };

std::string_view to_string(ClassFilter filter);

struct UniquenessResult {
  std::size_t enumerated = 0;
  std::vector<FiniteTopology> survivors;
};

/// Enumerates every topology on the extension carrier and keeps those making
/// it a semitopological semigroup whose restriction to some diagonal block is
/// tau (and Hausdorff, when asked).
UniquenessResult uniqueness_search(const BrandtExtension& ext,
                                   const FiniteTopology& tau,
                                   ClassFilter filter,
                                   std::size_t cap = kDefaultTopologyCap);

}  // namespace brandt
