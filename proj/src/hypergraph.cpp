#include "hyperorient/hypergraph.hpp"

#include <limits>
#include <string>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

void check_proper_cut(const VertexSet& x, int n, const char* what) {
  if (x.universe() != n) {
    throw InvalidArgument(std::string(what) + ": set over universe " +
                          std::to_string(x.universe()) + ", hypergraph has " +
                          std::to_string(n) + " vertices");
  }
  if (x.empty() || x.is_full()) {
    throw InvalidArgument(std::string(what) + ": set must be nonempty and proper, got " +
                          x.to_string());
  }
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<VertexSet> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 2) throw InvalidArgument("a hypergraph needs at least 2 vertices");
  // Flow values reach m * (m + 1); keep that representable.
  const auto m = static_cast<long double>(edges_.size());
  if (m * (m + 1) > static_cast<long double>(std::numeric_limits<Count>::max())) {
    throw InvalidArgument("too many hyperedges for exact flow capacities");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].universe() != num_vertices) {
      throw InvalidArgument("hyperedge " + std::to_string(e) + " is over the wrong universe");
    }
    if (edges_[e].size() < 2) {
      throw InvalidArgument("hyperedge " + std::to_string(e) + " has fewer than 2 vertices");
    }
  }
}

Orientation::Orientation(const Hypergraph& h, std::vector<VertexId> heads)
    : heads_(std::move(heads)) {
  if (static_cast<int>(heads_.size()) != h.num_edges()) {
    throw InvalidArgument("orientation has " + std::to_string(heads_.size()) +
                          " heads for " + std::to_string(h.num_edges()) + " hyperedges");
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const VertexId v = head(e);
    if (v < 0 || v >= h.num_vertices() || !h.edge(e).contains(v)) {
      throw InvalidArgument("head " + std::to_string(v) + " of hyperedge " + std::to_string(e) +
                            " is not one of its vertices");
    }
  }
}

VertexSet tail(const Hypergraph& h, const Orientation& o, EdgeId e) {
  VertexSet t = h.edge(e);
  t.erase(o.head(e));
  return t;
}

Partition::Partition(int num_vertices, std::vector<VertexSet> classes)
    : num_vertices_(num_vertices), classes_(std::move(classes)) {
  VertexSet covered(num_vertices);
  for (const VertexSet& c : classes_) {
    if (c.universe() != num_vertices) throw InvalidArgument("partition class over wrong universe");
    if (c.empty()) throw InvalidArgument("partition has an empty class");
    if (c.intersects(covered)) throw InvalidArgument("partition classes overlap");
    covered |= c;
  }
  if (!covered.is_full()) throw InvalidArgument("partition does not cover every vertex");
}

Count degree(const Hypergraph& h, const VertexSet& x) {
  check_proper_cut(x, h.num_vertices(), "degree");
  const VertexSet rest = x.complement();
  Count d = 0;
  for (const VertexSet& z : h.edges()) {
    if (z.intersects(x) && z.intersects(rest)) ++d;
  }
  return d;
}

Count in_degree(const Hypergraph& h, const Orientation& o, const VertexSet& x) {
  check_proper_cut(x, h.num_vertices(), "in_degree");
  Count d = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (x.contains(o.head(e)) && !h.edge(e).is_subset_of(x)) ++d;
  }
  return d;
}

Count out_degree(const Hypergraph& h, const Orientation& o, const VertexSet& x) {
  check_proper_cut(x, h.num_vertices(), "out_degree");
  Count d = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    // The head is outside x, so the tail meets x iff the edge does.
    if (!x.contains(o.head(e)) && h.edge(e).intersects(x)) ++d;
  }
  return d;
}

Orientation reorient(const Hypergraph& h, const Orientation& o, EdgeId e, VertexId u) {
  if (e < 0 || e >= h.num_edges()) {
    throw InvalidReorientation("no hyperedge " + std::to_string(e));
  }
  if (u < 0 || u >= h.num_vertices() || !h.edge(e).contains(u)) {
    throw InvalidReorientation("vertex " + std::to_string(u) + " is not in hyperedge " +
                               std::to_string(e));
  }
  if (o.head(e) == u) {
    throw InvalidReorientation("hyperedge " + std::to_string(e) + " already points at " +
                               std::to_string(u));
  }
  Orientation next = o;
  next.heads_[static_cast<std::size_t>(e)] = u;
  return next;
}

Count crossing_edges(const Hypergraph& h, const Partition& p) {
  if (p.num_vertices() != h.num_vertices()) {
    throw InvalidArgument("partition and hypergraph disagree on vertex count");
  }
  Count crossing = 0;
  for (const VertexSet& z : h.edges()) {
    int touched = 0;
    for (const VertexSet& c : p.classes()) {
      if (z.intersects(c) && ++touched == 2) break;
    }
    if (touched >= 2) ++crossing;
  }
  return crossing;
}

void validate_hyperpath(const Hypergraph& h, const Orientation& o, const Hyperpath& path) {
  const int n = h.num_vertices();
  if (path.arcs.empty()) throw InvalidArgument("hyperpath has no hyperarcs");
  if (path.source < 0 || path.source >= n || path.target < 0 || path.target >= n) {
    throw InvalidArgument("hyperpath endpoints outside the vertex range");
  }
  VertexSet heads(n);
  VertexId expected_tail = path.source;
  for (std::size_t i = 0; i < path.arcs.size(); ++i) {
    const HyperpathArc& arc = path.arcs[i];
    const std::string where = "hyperpath arc " + std::to_string(i + 1);
    if (arc.edge < 0 || arc.edge >= h.num_edges()) {
      throw InvalidArgument(where + ": no hyperedge " + std::to_string(arc.edge));
    }
    const VertexId head = o.head(arc.edge);
    if (arc.tail != expected_tail) {
      throw InvalidArgument(where + ": trimmed tail " + std::to_string(arc.tail) +
                            ", expected " + std::to_string(expected_tail));
    }
    if (arc.tail == head || !h.edge(arc.edge).contains(arc.tail)) {
      throw InvalidArgument(where + ": vertex " + std::to_string(arc.tail) +
                            " is not a tail of hyperedge " + std::to_string(arc.edge));
    }
    if (heads.contains(head)) {
      throw InvalidArgument(where + ": head " + std::to_string(head) + " repeats");
    }
    heads.insert(head);
    expected_tail = head;
  }
  if (expected_tail != path.target) {
    throw InvalidArgument("hyperpath ends at " + std::to_string(expected_tail) +
                          ", expected " + std::to_string(path.target));
  }
}

std::vector<VertexId> trim(const Hypergraph& h, const Orientation& o, const Hyperpath& path) {
  validate_hyperpath(h, o, path);
  std::vector<VertexId> vertices;
  vertices.reserve(path.arcs.size() + 1);
  vertices.push_back(path.source);
  for (const HyperpathArc& arc : path.arcs) vertices.push_back(o.head(arc.edge));
  return vertices;
}

}  // namespace hyperorient
