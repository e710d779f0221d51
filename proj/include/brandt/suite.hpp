#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "brandt/category.hpp"
#include "brandt/json_io.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/topology.hpp"

namespace brandt {

struct NamedMonoid {
  std::string name;
  FiniteSemigroup s;
};

/// The monoids with zero of order at most 5 that the suites run over:
/// chains, cyclic groups with zero, and a left-zero band with identity and zero.
std::vector<NamedMonoid> corpus_monoids();

/// Topologies on S that make it a semitopological semigroup in which {0_S} is closed.
std::vector<FiniteTopology> corpus_topologies(const FiniteSemigroup& s, std::size_t cap = kDefaultTopologyCap);

/// {2-chain, 3-chain, Z2^0} x {1, 2} with discrete topologies.
std::vector<TpcbObject> category_corpus();

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 8;         // random non-corpus topologies in the exploration
  std::size_t structure_lambda = 4;
  std::size_t topology_lambda = 3;
  std::size_t cap = kDefaultTopologyCap;
};

/// Cardinality, associativity and Rees-quotient agreement of every corpus extension.
Json suite_structure(std::size_t max_lambda);
/// Clause tallies of verify_extension over every corpus pair (S, tau) and lambda,
/// plus base-mode agreement, semiregularity and joint-continuity transfer.
Json suite_topology(std::size_t max_lambda);
/// Seeded sample of semitopological tau in which {0_S} is not closed, with the
/// clauses that fail for each.
Json suite_exploration(std::uint64_t seed, std::size_t samples, std::size_t max_lambda);
Json suite_uniqueness(std::size_t cap);
Json suite_homs();
Json suite_category();

/// Every suite above; byte-identical for identical options.
Json run_suite(const SuiteOptions& options);

}  // namespace brandt
