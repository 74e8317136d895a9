#ifndef HYPERORIENT_HYPERGRAPH_HPP_
#define HYPERORIENT_HYPERGRAPH_HPP_

#include <span>
#include <vector>

#include "hyperorient/vertex_set.hpp"

namespace hyperorient {

/// Undirected hypergraph on vertices 0..n-1 with a multiset of hyperedges.
/// Hyperedge ids are positions in the input order.
class Hypergraph {
 public:
  /// Throws InvalidArgument if n < 2, a hyperedge has fewer than two vertices
  /// or lives on a different universe, or the edge count would overflow flow
  /// capacities.
  Hypergraph(int num_vertices, std::vector<VertexSet> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const VertexSet& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const VertexSet> edges() const { return edges_; }
  VertexSet all_vertices() const { return VertexSet::full(num_vertices_); }

  bool operator==(const Hypergraph&) const = default;

 private:
  int num_vertices_;
  std::vector<VertexSet> edges_;
};

/// Head assignment for every hyperedge. Hyperedge e becomes the hyperarc
/// (edge(e) - head(e), head(e)).
class Orientation {
 public:
  Orientation() = default;
  /// Throws InvalidArgument unless heads.size() == h.num_edges() and every
  /// head belongs to its hyperedge.
  Orientation(const Hypergraph& h, std::vector<VertexId> heads);

  VertexId head(EdgeId e) const { return heads_[static_cast<std::size_t>(e)]; }
  std::span<const VertexId> heads() const { return heads_; }
  int num_edges() const { return static_cast<int>(heads_.size()); }

  bool operator==(const Orientation&) const = default;

 private:
  friend Orientation reorient(const Hypergraph&, const Orientation&, EdgeId, VertexId);
  std::vector<VertexId> heads_;
};

/// Tail set of the hyperarc built from edge e.
VertexSet tail(const Hypergraph& h, const Orientation& o, EdgeId e);

/// A partition of the vertex set into nonempty, pairwise-disjoint classes.
class Partition {
 public:
  /// Throws InvalidArgument on empty, overlapping, or non-covering classes.
  Partition(int num_vertices, std::vector<VertexSet> classes);

  int num_vertices() const { return num_vertices_; }
  std::span<const VertexSet> classes() const { return classes_; }
  int size() const { return static_cast<int>(classes_.size()); }

 private:
  int num_vertices_;
  std::vector<VertexSet> classes_;
};

// Cut functions. Each rejects x empty or equal to V with InvalidArgument.

/// Number of hyperedges meeting both x and V - x.
Count degree(const Hypergraph& h, const VertexSet& x);
/// Number of hyperarcs whose head lies in x and whose tail leaves x.
Count in_degree(const Hypergraph& h, const Orientation& o, const VertexSet& x);
/// Number of hyperarcs whose head lies outside x and whose tail meets x.
Count out_degree(const Hypergraph& h, const Orientation& o, const VertexSet& x);

/// Copy of `o` with edge e pointing at u instead. Throws InvalidReorientation
/// if u is not in the hyperedge or is already its head.
Orientation reorient(const Hypergraph& h, const Orientation& o, EdgeId e, VertexId u);

/// Number of hyperedges that meet at least two classes of p.
Count crossing_edges(const Hypergraph& h, const Partition& p);

struct HyperpathArc {
  EdgeId edge;
  /// Tail vertex this hyperarc is trimmed to.
  VertexId tail;

  bool operator==(const HyperpathArc&) const = default;
};

/// (source, target)-hyperpath with one recorded tail per hyperarc. The tail
/// of the first arc is the source and every later tail is the previous head.
struct Hyperpath {
  VertexId source = -1;
  VertexId target = -1;
  std::vector<HyperpathArc> arcs;

  bool operator==(const Hyperpath&) const = default;
};

/// Throws InvalidArgument describing the first broken hyperpath condition.
void validate_hyperpath(const Hypergraph& h, const Orientation& o, const Hyperpath& path);

/// Vertex sequence source, a_1, ..., a_{l-1}, target of the trimmed path.
/// Validates first.
std::vector<VertexId> trim(const Hypergraph& h, const Orientation& o, const Hyperpath& path);

}  // namespace hyperorient

#endif  // HYPERORIENT_HYPERGRAPH_HPP_
