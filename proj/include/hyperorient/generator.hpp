#ifndef HYPERORIENT_GENERATOR_HPP_
#define HYPERORIENT_GENERATOR_HPP_

#include <cstdint>
#include <random>

#include "hyperorient/hypergraph.hpp"

namespace hyperorient {

/// Parameters of a guaranteed (k,k)-partition-connected instance.
struct GenSpec {
  int n = 3;
  int k = 1;
  int extra_edges = 0;
  int max_edge_size = 2;
  std::uint64_t seed = 0;
};

/// Throws InvalidArgument unless n >= 3, k >= 1, extra_edges >= 0 and
/// 2 <= max_edge_size <= n.
void validate(const GenSpec& spec);

/// k Hamiltonian cycles over independent random permutations, followed by
/// extra_edges random hyperedges of size 2..max_edge_size.
///
/// The sampling is portable: std::mt19937_64 seeded with `seed`, bounded
/// draws by rejection sampling, permutations by Fisher-Yates.
Hypergraph gen_instance(const GenSpec& spec);

/// Independent uniform head per hyperedge from a seeded std::mt19937_64.
Orientation gen_orientation(const Hypergraph& h, std::uint64_t seed);

/// Every hyperedge points at its smallest vertex.
Orientation adversarial_orientation(const Hypergraph& h);

/// Uniform integer in [0, bound) with no modulo bias. bound must be > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace hyperorient

#endif  // HYPERORIENT_GENERATOR_HPP_
