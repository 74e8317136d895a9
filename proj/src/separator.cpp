#include "hyperorient/separator.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "hyperorient/errors.hpp"

namespace hyperorient {

void FlowNetwork::add_arc(int from, int to, Count capacity) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw InvalidArgument("flow arc endpoint out of range");
  }
  if (capacity < 0) throw InvalidArgument("negative flow capacity");
  arcs_.push_back({from, to, capacity});
}

FlowNetwork::MinCut FlowNetwork::max_flow_min_cut(int source, int sink) const {
  const int sources[] = {source};
  const int sinks[] = {sink};
  return max_flow_min_cut(sources, sinks);
}

FlowNetwork::MinCut FlowNetwork::max_flow_min_cut(std::span<const int> sources,
                                                  std::span<const int> sinks) const {
  if (sources.empty() || sinks.empty()) throw InvalidArgument("flow needs a source and a sink");
  std::vector<char> is_source(static_cast<std::size_t>(num_nodes_), 0);
  std::vector<char> is_sink(static_cast<std::size_t>(num_nodes_), 0);
  for (int node : sources) is_source.at(static_cast<std::size_t>(node)) = 1;
  for (int node : sinks) {
    if (is_source.at(static_cast<std::size_t>(node))) {
      throw InvalidArgument("node " + std::to_string(node) + " is both source and sink");
    }
    is_sink[static_cast<std::size_t>(node)] = 1;
  }

  // Residual arcs come in pairs: 2i is arc i, 2i+1 its reverse.
  struct Residual {
    int to;
    Count capacity;
  };
  std::vector<Residual> residual;
  residual.reserve(arcs_.size() * 2);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(num_nodes_));
  for (const Arc& a : arcs_) {
    const int id = static_cast<int>(residual.size());
    residual.push_back({a.to, a.capacity});
    residual.push_back({a.from, 0});
    adjacency[static_cast<std::size_t>(a.from)].push_back(id);
    adjacency[static_cast<std::size_t>(a.to)].push_back(id + 1);
  }
  for (auto& list : adjacency) {
    std::stable_sort(list.begin(), list.end(),
                     [&](int a, int b) { return residual[a].to < residual[b].to; });
  }

  std::vector<int> parent_arc(static_cast<std::size_t>(num_nodes_));
  std::vector<char> seen(static_cast<std::size_t>(num_nodes_));
  // Breadth-first search from all sources; returns the sink reached or -1.
  auto bfs = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::queue<int> queue;
    std::vector<int> ordered_sources(sources.begin(), sources.end());
    std::sort(ordered_sources.begin(), ordered_sources.end());
    for (int node : ordered_sources) {
      if (!seen[static_cast<std::size_t>(node)]) {
        seen[static_cast<std::size_t>(node)] = 1;
        queue.push(node);
      }
    }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int id : adjacency[static_cast<std::size_t>(v)]) {
        const Residual& r = residual[static_cast<std::size_t>(id)];
        if (r.capacity <= 0 || seen[static_cast<std::size_t>(r.to)]) continue;
        seen[static_cast<std::size_t>(r.to)] = 1;
        parent_arc[static_cast<std::size_t>(r.to)] = id;
        if (is_sink[static_cast<std::size_t>(r.to)]) return r.to;
        queue.push(r.to);
      }
    }
    return -1;
  };

  MinCut cut;
  for (int sink = bfs(); sink != -1; sink = bfs()) {
    Count bottleneck = std::numeric_limits<Count>::max();
    for (int v = sink; parent_arc[static_cast<std::size_t>(v)] != -1;) {
      const int id = parent_arc[static_cast<std::size_t>(v)];
      bottleneck = std::min(bottleneck, residual[static_cast<std::size_t>(id)].capacity);
      v = residual[static_cast<std::size_t>(id ^ 1)].to;
    }
    for (int v = sink; parent_arc[static_cast<std::size_t>(v)] != -1;) {
      const int id = parent_arc[static_cast<std::size_t>(v)];
      residual[static_cast<std::size_t>(id)].capacity -= bottleneck;
      residual[static_cast<std::size_t>(id ^ 1)].capacity += bottleneck;
      v = residual[static_cast<std::size_t>(id ^ 1)].to;
    }
    cut.value += bottleneck;
  }
  // The final failed search left `seen` as the residual-reachable set.
  cut.source_side.assign(seen.begin(), seen.end());
  return cut;
}

IncidenceDigraph::IncidenceDigraph(const Hypergraph& h, const Orientation& o,
                                   Direction direction)
    : num_vertices_(h.num_vertices()),
      tail_capacity_(static_cast<Count>(h.num_edges()) + 1),
      direction_(direction),
      network_(h.num_vertices() + h.num_edges()) {
  const bool forward = direction == Direction::kForward;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const int w = edge_node(e);
    const VertexId head = o.head(e);
    if (forward) {
      network_.add_arc(w, head, 1);
    } else {
      network_.add_arc(head, w, 1);
    }
    h.edge(e).for_each([&](VertexId x) {
      if (x == head) return;
      if (forward) {
        network_.add_arc(x, w, tail_capacity_);
      } else {
        network_.add_arc(w, x, tail_capacity_);
      }
    });
  }
}

SeparatorSolver::SeparatorSolver(const Hypergraph& h, const Orientation& o)
    : forward_(h, o, IncidenceDigraph::Direction::kForward),
      reversed_(h, o, IncidenceDigraph::Direction::kReversed) {}

SeparatorResult SeparatorSolver::solve(const IncidenceDigraph& g, const VertexSet& inside,
                                       const VertexSet& outside) const {
  const int n = g.num_vertices();
  if (inside.universe() != n || outside.universe() != n) {
    throw InvalidArgument("separator terminals over the wrong universe");
  }
  if (inside.empty() || outside.empty()) {
    throw InvalidArgument("separator needs nonempty terminal sets");
  }
  if (inside.intersects(outside)) {
    throw InvalidArgument("separator terminals overlap: " + inside.to_string() + " and " +
                          outside.to_string());
  }
  const std::vector<VertexId> sources = inside.elements();
  const std::vector<VertexId> sinks = outside.elements();
  const FlowNetwork::MinCut cut = g.network().max_flow_min_cut(sources, sinks);
  SeparatorResult result{cut.value, VertexSet(n)};
  for (VertexId v = 0; v < n; ++v) {
    if (cut.source_side[static_cast<std::size_t>(v)]) result.separator.insert(v);
  }
  return result;
}

SeparatorResult SeparatorSolver::min_out(const VertexSet& sources, const VertexSet& sinks) const {
  return solve(forward_, sources, sinks);
}

SeparatorResult SeparatorSolver::min_in(const VertexSet& targets, const VertexSet& sources) const {
  // Entering X in the hypergraph is leaving X in the reversed incidence digraph.
  return solve(reversed_, targets, sources);
}

SeparatorResult SeparatorSolver::min_out(VertexId s, const VertexSet& sinks) const {
  if (s < 0 || s >= num_vertices()) throw InvalidArgument("separator source out of range");
  return min_out(VertexSet::singleton(num_vertices(), s), sinks);
}

SeparatorResult SeparatorSolver::min_in(VertexId t, const VertexSet& sources) const {
  if (t < 0 || t >= num_vertices()) throw InvalidArgument("separator target out of range");
  return min_in(VertexSet::singleton(num_vertices(), t), sources);
}

Count SeparatorSolver::lambda() const {
  const int n = num_vertices();
  Count best = std::numeric_limits<Count>::max();
  const VertexSet root = VertexSet::singleton(n, 0);
  for (VertexId v = 1; v < n; ++v) {
    const VertexSet other = VertexSet::singleton(n, v);
    best = std::min(best, min_out(root, other).value);
    best = std::min(best, min_out(other, root).value);
    if (best == 0) break;
  }
  return best;
}

SeparatorResult min_out_separator(const Hypergraph& h, const Orientation& o, VertexId s,
                                  const VertexSet& sinks) {
  return SeparatorSolver(h, o).min_out(s, sinks);
}

SeparatorResult min_in_separator(const Hypergraph& h, const Orientation& o, VertexId t,
                                 const VertexSet& sources) {
  return SeparatorSolver(h, o).min_in(t, sources);
}

Count lambda(const Hypergraph& h, const Orientation& o) { return SeparatorSolver(h, o).lambda(); }

}  // namespace hyperorient
