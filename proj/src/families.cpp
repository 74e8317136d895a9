#include "hyperorient/families.hpp"

#include <algorithm>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

constexpr VertexId kRoot = 0;

VertexSet smallest_tight(const SeparatorSolver& solver, Count k, VertexId v, bool in_side) {
  const int n = solver.num_vertices();
  if (v == kRoot) return VertexSet::full(n);
  const VertexSet root = VertexSet::singleton(n, kRoot);
  const SeparatorResult sep = in_side ? solver.min_in(v, root) : solver.min_out(v, root);
  return sep.value == k ? sep.separator : VertexSet::full(n);
}

std::vector<VertexSet> minimal_or_full(const std::vector<VertexSet>& q, int n) {
  std::vector<VertexSet> proper;
  for (const VertexSet& x : q) {
    if (!x.is_full()) proper.push_back(x);
  }
  if (proper.empty()) return {VertexSet::full(n)};
  return inclusion_minimal(std::move(proper));
}

bool is_member(const std::vector<VertexSet>& family, const VertexSet& x) {
  return std::find(family.begin(), family.end(), x) != family.end();
}

/// Some proper tight set (per `q`) fits inside `w`.
bool contains_tight_set(const std::vector<VertexSet>& q, const VertexSet& w) {
  bool found = false;
  w.for_each([&](VertexId x) {
    const VertexSet& qx = q[static_cast<std::size_t>(x)];
    if (!found && !qx.is_full() && qx.is_subset_of(w)) found = true;
  });
  return found;
}

enum class Role { kSource, kSink };

// A vertex u of S is unsafe iff some v in S - u has a minimal {v, r}-avoiding
// separator around u that is tight, or dangerous with no tight set avoiding u
// inside it. S itself being tight on the opposite side also disqualifies every
// vertex; that case is impossible on partition-connected inputs but is checked
// so the test agrees with the definition everywhere.
bool is_safe(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
             const VertexSet& set, VertexId u, Role role) {
  const bool source = role == Role::kSource;
  const auto& family = source ? fam.m_minus : fam.m_plus;
  if (!is_member(family, set)) {
    throw InvalidArgument(std::string(source ? "safe-source" : "safe-sink") + " query on " +
                          set.to_string() + ", which is not a minimal tight set");
  }
  if (u < 0 || u >= h.num_vertices() || !set.contains(u)) {
    throw InvalidArgument("vertex " + std::to_string(u) + " is not in " + set.to_string());
  }
  if (u == fam.root) return true;  // only when set = V; no candidate X contains r
  if (!set.is_full()) {
    const Count opposite = source ? out_degree(h, o, set) : in_degree(h, o, set);
    if (opposite == fam.k) return false;
  }

  const int n = h.num_vertices();
  const SeparatorSolver solver(h, o);
  const auto& q = source ? fam.q_plus : fam.q_minus;
  bool safe = true;
  set.for_each([&](VertexId v) {
    if (!safe || v == u) return;
    VertexSet avoid = VertexSet::singleton(n, v);
    avoid.insert(fam.root);
    const SeparatorResult sep = source ? solver.min_out(u, avoid) : solver.min_in(u, avoid);
    if (sep.value == fam.k) {
      safe = false;
    } else if (sep.value == fam.k + 1) {
      VertexSet without_u = sep.separator;
      without_u.erase(u);
      if (!contains_tight_set(q, without_u)) safe = false;
    }
  });
  return safe;
}

VertexId find_safe(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                   const VertexSet& set, Role role) {
  VertexId found = -1;
  set.for_each([&](VertexId u) {
    if (found == -1 && is_safe(h, o, fam, set, u, role)) found = u;
  });
  if (found == -1) {
    const char* what = role == Role::kSource ? "safe source" : "safe sink";
    throw InvariantViolation(std::string("no ") + what + " in " + set.to_string() +
                                 "; the hypergraph is not (k+1,k+1)-partition-connected for k = " +
                                 std::to_string(fam.k),
                             set.to_string());
  }
  return found;
}

}  // namespace

bool CutFamilies::is_terminal() const {
  return m_minus.size() == 1 && m_minus.front().is_full() && m_plus.size() == 1 &&
         m_plus.front().is_full();
}

VertexSet q_minus(const Hypergraph& h, const Orientation& o, Count k, VertexId v) {
  return smallest_tight(SeparatorSolver(h, o), k, v, true);
}

VertexSet q_plus(const Hypergraph& h, const Orientation& o, Count k, VertexId v) {
  return smallest_tight(SeparatorSolver(h, o), k, v, false);
}

CutFamilies compute_families(const Hypergraph& h, const Orientation& o) {
  return compute_families(h, o, lambda(h, o));
}

CutFamilies compute_families(const Hypergraph& h, const Orientation& o, Count k) {
  const SeparatorSolver solver(h, o);
  const Count connectivity = solver.lambda();
  if (connectivity < k) {
    throw InvalidArgument("families at level " + std::to_string(k) +
                          " need connectivity at least that, found " +
                          std::to_string(connectivity));
  }
  const int n = h.num_vertices();
  CutFamilies fam;
  fam.k = k;
  fam.root = kRoot;
  for (VertexId v = 0; v < n; ++v) {
    fam.q_minus.push_back(smallest_tight(solver, k, v, true));
    fam.q_plus.push_back(smallest_tight(solver, k, v, false));
  }
  fam.m_minus = minimal_or_full(fam.q_minus, n);
  fam.m_plus = minimal_or_full(fam.q_plus, n);

  std::vector<VertexSet> both = fam.m_minus;
  both.insert(both.end(), fam.m_plus.begin(), fam.m_plus.end());
  fam.m_all = inclusion_minimal(std::move(both));

  // Every minimal member of the R family is the smallest in-tight superset of
  // some minimal out-tight set, or the reverse. V belongs to both tight
  // families, so it is the fallback when no proper set qualifies.
  const VertexSet root = VertexSet::singleton(n, kRoot);
  std::vector<VertexSet> candidates{VertexSet::full(n)};
  for (const VertexSet& t : fam.m_plus) {
    if (t.is_full()) continue;
    const SeparatorResult closure = solver.min_in(t, root);
    if (closure.value == k) candidates.push_back(closure.separator);
  }
  for (const VertexSet& s : fam.m_minus) {
    if (s.is_full()) continue;
    const SeparatorResult closure = solver.min_out(s, root);
    if (closure.value == k) candidates.push_back(closure.separator);
  }
  fam.r_family = inclusion_minimal(std::move(candidates));
  return fam;
}

std::vector<VertexSet> q_family(const CutFamilies& fam) {
  std::vector<VertexSet> q = fam.q_minus;
  q.insert(q.end(), fam.q_plus.begin(), fam.q_plus.end());
  canonicalize(q);
  return q;
}

bool is_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                    const VertexSet& s_set, VertexId u) {
  return is_safe(h, o, fam, s_set, u, Role::kSource);
}

bool is_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& t_set, VertexId u) {
  return is_safe(h, o, fam, t_set, u, Role::kSink);
}

VertexId find_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                          const VertexSet& s_set) {
  return find_safe(h, o, fam, s_set, Role::kSource);
}

VertexId find_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                        const VertexSet& t_set) {
  return find_safe(h, o, fam, t_set, Role::kSink);
}

}  // namespace hyperorient
