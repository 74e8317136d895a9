#ifndef HYPERORIENT_ORACLE_HPP_
#define HYPERORIENT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperorient/families.hpp"
#include "hyperorient/hypergraph.hpp"

// Brute-force reference implementations. Every function enumerates subsets,
// partitions, or orientations directly from the definitions and never calls
// the flow-based code.

namespace hyperorient::oracle {

struct Limits {
  int max_vertices = 12;
  int max_partition_vertices = 8;
  std::uint64_t max_orientations = std::uint64_t{1} << 20;
};

enum class Side { kIn, kOut };

/// Minimum out-degree over all nonempty proper subsets.
Count bf_lambda(const Hypergraph& h, const Orientation& o, const Limits& limits = {});

/// Every nonempty X avoiding the root with d-(X) = k (resp. d+). V excluded.
std::vector<VertexSet> bf_tight_in(const Hypergraph& h, const Orientation& o, Count k,
                                   VertexId root = 0, const Limits& limits = {});
std::vector<VertexSet> bf_tight_out(const Hypergraph& h, const Orientation& o, Count k,
                                    VertexId root = 0, const Limits& limits = {});

/// Families at level k = bf_lambda, straight from the definitions.
CutFamilies bf_families(const Hypergraph& h, const Orientation& o, VertexId root = 0,
                        const Limits& limits = {});
CutFamilies bf_families(const Hypergraph& h, const Orientation& o, Count k, VertexId root,
                        const Limits& limits = {});

struct BruteSeparator {
  Count value = 0;
  std::vector<VertexSet> minimizers;
  VertexSet minimal;
};

/// Minimum of d+ (kOut) or d- (kIn) over X containing `inside` and avoiding
/// `outside`. Throws InvariantViolation if the intersection of all
/// minimizers is not itself a minimizer.
BruteSeparator bf_min_separator(const Hypergraph& h, const Orientation& o,
                                const VertexSet& inside, const VertexSet& outside, Side side,
                                const Limits& limits = {});
BruteSeparator bf_min_separator(const Hypergraph& h, const Orientation& o, VertexId s,
                                const VertexSet& outside, Side side, const Limits& limits = {});

struct PartitionCheck {
  bool connected = true;
  std::optional<Partition> witness;
};

/// e_H(P) >= k |P| for every partition P, by enumerating all partitions.
PartitionCheck bf_partition_connected(const Hypergraph& h, Count k, const Limits& limits = {});

struct OrientationSearch {
  bool exists = false;
  std::optional<Orientation> witness;
};

/// Tries every orientation until one is k-hyperarc-connected.
OrientationSearch bf_orientation_exists(const Hypergraph& h, Count k, const Limits& limits = {});

/// Literal safe-source test, quantifying over every X avoiding the root.
bool bf_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                    const VertexSet& s_set, VertexId u, const Limits& limits = {});
bool bf_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& t_set, VertexId u, const Limits& limits = {});

}  // namespace hyperorient::oracle

#endif  // HYPERORIENT_ORACLE_HPP_
