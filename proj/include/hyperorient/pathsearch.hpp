#ifndef HYPERORIENT_PATHSEARCH_HPP_
#define HYPERORIENT_PATHSEARCH_HPP_

#include <optional>
#include <vector>

#include "hyperorient/families.hpp"
#include "hyperorient/hypergraph.hpp"

namespace hyperorient {

/// Which tight family the region R belongs to.
enum class TightSide {
  kIn,   // d-(R) = k: search forward from a safe source.
  kOut,  // d+(R) = k: search backward from a safe sink.
};

const char* to_string(TightSide side);

/// Exploration state of the forward or backward search.
struct SearchState {
  struct Link {
    /// The other endpoint of the trimmed arc: parent for the forward search,
    /// successor for the backward one.
    VertexId vertex;
    EdgeId edge;
  };

  VertexSet explored;
  /// Indexed by vertex; empty for the origin and unexplored vertices.
  std::vector<std::optional<Link>> links;
  VertexSet region;
};

struct AdmissiblePath {
  TightSide side;
  VertexSet region;
  VertexSet source_set;
  VertexSet sink_set;
  VertexId source;
  VertexId sink;
  Hyperpath path;
  std::vector<VertexId> trimming;
  SearchState search;
};

/// Forward search from a safe source for R in-tight. Throws
/// InvariantViolation when the search does not settle on a minimal out-tight
/// set with an explored safe sink.
AdmissiblePath admissible_path_in_tminus(const Hypergraph& h, const Orientation& o,
                                         const CutFamilies& fam, const VertexSet& region);

/// Backward search from a safe sink for R out-tight.
AdmissiblePath admissible_path_in_tplus(const Hypergraph& h, const Orientation& o,
                                        const CutFamilies& fam, const VertexSet& region);

/// For kOut: every vertex of q_plus(v) is reachable from v by a hyperpath
/// that stays inside q_plus(v). For kIn: every vertex of q_minus(v) reaches v
/// inside q_minus(v).
bool reachability_check(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                        VertexId v, TightSide side);

}  // namespace hyperorient

#endif  // HYPERORIENT_PATHSEARCH_HPP_
