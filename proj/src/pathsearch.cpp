#include "hyperorient/pathsearch.hpp"

#include <algorithm>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

const VertexSet& first_member_inside(const std::vector<VertexSet>& family,
                                     const VertexSet& region, const char* what) {
  for (const VertexSet& x : family) {
    if (x.is_subset_of(region)) return x;
  }
  throw InvariantViolation(std::string("no minimal ") + what + " set inside " +
                               region.to_string(),
                           region.to_string());
}

void check_region(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& region, TightSide side) {
  if (std::find(fam.r_family.begin(), fam.r_family.end(), region) == fam.r_family.end()) {
    throw InvalidArgument(region.to_string() + " is not a member of the R family");
  }
  if (region.is_full()) return;
  const Count d = side == TightSide::kIn ? in_degree(h, o, region) : out_degree(h, o, region);
  if (d != fam.k) {
    throw InvalidArgument(region.to_string() + " is not " +
                          (side == TightSide::kIn ? "in" : "out") + "-tight");
  }
}

SearchState start_search(int n, VertexId origin, const VertexSet& region) {
  SearchState state;
  state.explored = VertexSet::singleton(n, origin);
  state.links.assign(static_cast<std::size_t>(n), std::nullopt);
  state.region = region;
  return state;
}

std::vector<VertexId> vertices_of(const Hyperpath& path, const Orientation& o) {
  std::vector<VertexId> out{path.source};
  for (const HyperpathArc& arc : path.arcs) out.push_back(o.head(arc.edge));
  return out;
}

}  // namespace

const char* to_string(TightSide side) { return side == TightSide::kIn ? "in" : "out"; }

AdmissiblePath admissible_path_in_tminus(const Hypergraph& h, const Orientation& o,
                                         const CutFamilies& fam, const VertexSet& region) {
  check_region(h, o, fam, region, TightSide::kIn);
  const int n = h.num_vertices();
  const VertexSet& s_set = first_member_inside(fam.m_minus, region, "in-tight");
  const VertexId source = find_safe_source(h, o, fam, s_set);

  SearchState state = start_search(n, source, region);
  for (bool grew = true; grew;) {
    grew = false;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const VertexId v = o.head(e);
      if (!state.region.contains(v) || state.explored.contains(v)) continue;
      const VertexSet reached = tail(h, o, e) & state.explored;
      if (reached.empty()) continue;
      state.explored.insert(v);
      state.links[static_cast<std::size_t>(v)] = SearchState::Link{reached.min_element(), e};
      const VertexSet& q = fam.q_plus[static_cast<std::size_t>(v)];
      if (q.is_proper_subset_of(state.region)) state.region = q;
      grew = true;
      break;
    }
  }

  const VertexSet t_set = state.region;
  if (std::find(fam.m_plus.begin(), fam.m_plus.end(), t_set) == fam.m_plus.end() ||
      !t_set.is_proper_subset_of(region)) {
    throw InvariantViolation("forward search from " + std::to_string(source) + " in " +
                                 region.to_string() + " settled on " + t_set.to_string() +
                                 ", which is not a minimal out-tight proper subset",
                             region.to_string());
  }
  if (!t_set.is_subset_of(state.explored)) {
    throw InvariantViolation("forward search left part of " + t_set.to_string() + " unexplored",
                             t_set.to_string());
  }
  const VertexId sink = find_safe_sink(h, o, fam, t_set);
  if (fam.q_minus[static_cast<std::size_t>(sink)] != region) {
    throw InvariantViolation("safe sink " + std::to_string(sink) + " has smallest in-tight set " +
                                 fam.q_minus[static_cast<std::size_t>(sink)].to_string() +
                                 " instead of " + region.to_string(),
                             region.to_string());
  }

  Hyperpath path{source, sink, {}};
  for (VertexId v = sink; v != source;) {
    const auto& link = state.links[static_cast<std::size_t>(v)];
    path.arcs.push_back({link->edge, link->vertex});
    v = link->vertex;
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  validate_hyperpath(h, o, path);

  AdmissiblePath result{TightSide::kIn, region, s_set, t_set, source, sink, path, {}, std::move(state)};
  result.trimming = vertices_of(result.path, o);
  return result;
}

AdmissiblePath admissible_path_in_tplus(const Hypergraph& h, const Orientation& o,
                                        const CutFamilies& fam, const VertexSet& region) {
  check_region(h, o, fam, region, TightSide::kOut);
  const int n = h.num_vertices();
  const VertexSet& t_set = first_member_inside(fam.m_plus, region, "out-tight");
  const VertexId sink = find_safe_sink(h, o, fam, t_set);

  SearchState state = start_search(n, sink, region);
  for (bool grew = true; grew;) {
    grew = false;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const VertexId v = o.head(e);
      if (!state.explored.contains(v)) continue;
      const VertexSet tail_set = tail(h, o, e);
      if ((tail_set & (state.region - state.explored)).empty()) continue;
      // The region can shrink while this hyperarc is being expanded.
      for (VertexSet fresh = tail_set & (state.region - state.explored); !fresh.empty();
           fresh = tail_set & (state.region - state.explored)) {
        const VertexId u = fresh.min_element();
        state.explored.insert(u);
        state.links[static_cast<std::size_t>(u)] = SearchState::Link{v, e};
        const VertexSet& q = fam.q_minus[static_cast<std::size_t>(u)];
        if (q.is_proper_subset_of(state.region)) state.region = q;
      }
      grew = true;
      break;
    }
  }

  const VertexSet s_set = state.region;
  if (std::find(fam.m_minus.begin(), fam.m_minus.end(), s_set) == fam.m_minus.end() ||
      !s_set.is_proper_subset_of(region)) {
    throw InvariantViolation("backward search from " + std::to_string(sink) + " in " +
                                 region.to_string() + " settled on " + s_set.to_string() +
                                 ", which is not a minimal in-tight proper subset",
                             region.to_string());
  }
  if (!s_set.is_subset_of(state.explored)) {
    throw InvariantViolation("backward search left part of " + s_set.to_string() + " unexplored",
                             s_set.to_string());
  }
  const VertexId source = find_safe_source(h, o, fam, s_set);
  if (fam.q_plus[static_cast<std::size_t>(source)] != region) {
    throw InvariantViolation("safe source " + std::to_string(source) + " has smallest out-tight set " +
                                 fam.q_plus[static_cast<std::size_t>(source)].to_string() +
                                 " instead of " + region.to_string(),
                             region.to_string());
  }

  Hyperpath path{source, sink, {}};
  for (VertexId u = source; u != sink;) {
    const auto& link = state.links[static_cast<std::size_t>(u)];
    path.arcs.push_back({link->edge, u});
    u = link->vertex;
  }
  validate_hyperpath(h, o, path);

  AdmissiblePath result{TightSide::kOut, region, s_set, t_set, source, sink, path, {}, std::move(state)};
  result.trimming = vertices_of(result.path, o);
  return result;
}

bool reachability_check(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                        VertexId v, TightSide side) {
  if (v < 0 || v >= h.num_vertices()) throw InvalidArgument("vertex out of range");
  const bool forward = side == TightSide::kOut;
  const VertexSet& region =
      forward ? fam.q_plus[static_cast<std::size_t>(v)] : fam.q_minus[static_cast<std::size_t>(v)];
  VertexSet reached = VertexSet::singleton(h.num_vertices(), v);
  for (bool grew = true; grew;) {
    grew = false;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const VertexId head = o.head(e);
      const VertexSet tail_set = tail(h, o, e);
      if (forward) {
        if (region.contains(head) && !reached.contains(head) && tail_set.intersects(reached)) {
          reached.insert(head);
          grew = true;
        }
      } else if (reached.contains(head)) {
        const VertexSet fresh = tail_set & (region - reached);
        if (!fresh.empty()) {
          reached |= fresh;
          grew = true;
        }
      }
    }
  }
  return region.is_subset_of(reached);
}

}  // namespace hyperorient
