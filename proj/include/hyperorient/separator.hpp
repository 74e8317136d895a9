#ifndef HYPERORIENT_SEPARATOR_HPP_
#define HYPERORIENT_SEPARATOR_HPP_

#include <span>
#include <vector>

#include "hyperorient/hypergraph.hpp"
#include "hyperorient/vertex_set.hpp"

namespace hyperorient {

/// Capacitated digraph with shortest-augmenting-path (Edmonds-Karp) max flow.
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Count capacity;
  };

  struct MinCut {
    Count value = 0;
    /// Nodes reachable from the sources in the final residual network: the
    /// source side of the inclusion-minimal minimum cut.
    std::vector<bool> source_side;
  };

  explicit FlowNetwork(int num_nodes) : num_nodes_(num_nodes) {}

  int num_nodes() const { return num_nodes_; }
  std::span<const Arc> arcs() const { return arcs_; }
  void add_arc(int from, int to, Count capacity);

  /// Sources and sinks act as merged super-terminals. They must be nonempty
  /// and disjoint. BFS visits neighbours in ascending node id.
  MinCut max_flow_min_cut(std::span<const int> sources, std::span<const int> sinks) const;
  MinCut max_flow_min_cut(int source, int sink) const;

 private:
  int num_nodes_;
  std::vector<Arc> arcs_;
};

/// Bipartite incidence digraph of an oriented hypergraph. Node v < n is
/// vertex v and node n + e stands for hyperarc e. Each hyperarc contributes
/// w_e -> head with capacity 1 and x -> w_e with capacity m + 1 for every tail
/// vertex x, so tail arcs can never be part of a minimum cut.
class IncidenceDigraph {
 public:
  enum class Direction { kForward, kReversed };

  IncidenceDigraph(const Hypergraph& h, const Orientation& o,
                   Direction direction = Direction::kForward);

  int num_vertices() const { return num_vertices_; }
  int edge_node(EdgeId e) const { return num_vertices_ + e; }
  Count tail_capacity() const { return tail_capacity_; }
  Direction direction() const { return direction_; }
  const FlowNetwork& network() const { return network_; }

 private:
  int num_vertices_;
  Count tail_capacity_;
  Direction direction_;
  FlowNetwork network_;
};

struct SeparatorResult {
  Count value = 0;
  /// The unique inclusion-minimal minimizer.
  VertexSet separator;
};

/// Answers minimum-degree separator queries on one fixed oriented hypergraph.
/// Both incidence digraphs are built once; queries are const and independent.
class SeparatorSolver {
 public:
  SeparatorSolver(const Hypergraph& h, const Orientation& o);

  /// min d+(X) over X with sources subset of X and X disjoint from sinks.
  SeparatorResult min_out(const VertexSet& sources, const VertexSet& sinks) const;
  /// min d-(X) over X with targets subset of X and X disjoint from sources.
  SeparatorResult min_in(const VertexSet& targets, const VertexSet& sources) const;

  SeparatorResult min_out(VertexId s, const VertexSet& sinks) const;
  SeparatorResult min_in(VertexId t, const VertexSet& sources) const;

  /// Hyperarc-connectivity, via vertex 0 in both directions against every
  /// other vertex.
  Count lambda() const;

  int num_vertices() const { return forward_.num_vertices(); }

 private:
  SeparatorResult solve(const IncidenceDigraph& g, const VertexSet& inside,
                        const VertexSet& outside) const;

  IncidenceDigraph forward_;
  IncidenceDigraph reversed_;
};

SeparatorResult min_out_separator(const Hypergraph& h, const Orientation& o, VertexId s,
                                  const VertexSet& sinks);
SeparatorResult min_in_separator(const Hypergraph& h, const Orientation& o, VertexId t,
                                 const VertexSet& sources);
Count lambda(const Hypergraph& h, const Orientation& o);

}  // namespace hyperorient

#endif  // HYPERORIENT_SEPARATOR_HPP_
