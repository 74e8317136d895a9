#ifndef HYPERORIENT_FAMILIES_HPP_
#define HYPERORIENT_FAMILIES_HPP_

#include <vector>

#include "hyperorient/hypergraph.hpp"
#include "hyperorient/separator.hpp"
#include "hyperorient/vertex_set.hpp"

namespace hyperorient {

/// Tight-set structure of an oriented hypergraph at connectivity level k,
/// relative to root r = 0.
///
/// A set X with r not in X is in-tight when d-(X) = k and out-tight when
/// d+(X) = k; V counts as both. Families are canonically sorted.
struct CutFamilies {
  Count k = 0;
  VertexId root = 0;
  /// Inclusion-minimal in-tight sets ({V} when there is none besides V).
  std::vector<VertexSet> m_minus;
  /// Inclusion-minimal out-tight sets.
  std::vector<VertexSet> m_plus;
  /// Inclusion-minimal members of m_minus and m_plus together.
  std::vector<VertexSet> m_all;
  /// Inclusion-minimal sets that are in-tight and contain an out-tight set,
  /// or out-tight and contain an in-tight set. Since V is tight on both
  /// sides this is {V} exactly when no proper set qualifies.
  std::vector<VertexSet> r_family;
  /// Per vertex: the smallest in-tight (resp. out-tight) set containing it.
  std::vector<VertexSet> q_minus;
  std::vector<VertexSet> q_plus;

  /// No proper tight set remains: the orientation is (k+1)-connected.
  bool is_terminal() const;

  bool operator==(const CutFamilies&) const = default;
};

/// Smallest in-tight set containing v, V if no proper one exists. The
/// orientation must have connectivity at least k.
VertexSet q_minus(const Hypergraph& h, const Orientation& o, Count k, VertexId v);
VertexSet q_plus(const Hypergraph& h, const Orientation& o, Count k, VertexId v);

/// Families at level k = lambda(h, o).
CutFamilies compute_families(const Hypergraph& h, const Orientation& o);
/// Families at an explicit level. Requires lambda(h, o) >= k.
CutFamilies compute_families(const Hypergraph& h, const Orientation& o, Count k);

/// Distinct members of q_minus and q_plus across all vertices.
std::vector<VertexSet> q_family(const CutFamilies& fam);

bool is_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                    const VertexSet& s_set, VertexId u);
bool is_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& t_set, VertexId u);

/// Smallest safe vertex of the set; InvariantViolation if there is none.
VertexId find_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                          const VertexSet& s_set);
VertexId find_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                        const VertexSet& t_set);

}  // namespace hyperorient

#endif  // HYPERORIENT_FAMILIES_HPP_
