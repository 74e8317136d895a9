#include "hyperorient/oracle.hpp"

#include <algorithm>
#include <limits>

#include "hyperorient/errors.hpp"

namespace hyperorient::oracle {

namespace {

void guard_vertices(int n, int bound, const char* what) {
  if (n > bound) {
    throw OracleLimitExceeded(std::string(what) + ": " + std::to_string(n) +
                              " vertices exceed the oracle bound of " + std::to_string(bound));
  }
}

/// Calls f on every nonempty proper subset, in increasing mask order.
template <typename F>
void for_each_proper_subset(int n, F&& f) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) f(VertexSet::from_mask(n, mask));
}

std::vector<VertexSet> tight_sets(const Hypergraph& h, const Orientation& o, Count k,
                                  VertexId root, Side side, const Limits& limits) {
  const int n = h.num_vertices();
  guard_vertices(n, limits.max_vertices, "tight-set enumeration");
  std::vector<VertexSet> out;
  for_each_proper_subset(n, [&](const VertexSet& x) {
    if (x.contains(root)) return;
    const Count d = side == Side::kIn ? in_degree(h, o, x) : out_degree(h, o, x);
    if (d == k) out.push_back(x);
  });
  canonicalize(out);
  return out;
}

std::vector<VertexSet> with_full(std::vector<VertexSet> family, int n) {
  family.push_back(VertexSet::full(n));
  return inclusion_minimal(std::move(family));
}

bool has_subset_in(const std::vector<VertexSet>& family, const VertexSet& x) {
  return std::any_of(family.begin(), family.end(),
                     [&](const VertexSet& y) { return y.is_subset_of(x); });
}

/// Intersection of every member containing v; V when there is none.
VertexSet smallest_containing(const std::vector<VertexSet>& tight, int n, VertexId v) {
  VertexSet meet = VertexSet::full(n);
  for (const VertexSet& x : tight) {
    if (x.contains(v)) meet &= x;
  }
  if (!meet.is_full() && std::find(tight.begin(), tight.end(), meet) == tight.end()) {
    throw InvariantViolation("tight sets containing " + std::to_string(v) +
                                 " intersect in the non-tight set " + meet.to_string(),
                             meet.to_string());
  }
  return meet;
}

/// d+(X) >= k for every nonempty proper X; stops at the first violation.
bool connected_at_least(const Hypergraph& h, const Orientation& o, Count k) {
  const int n = h.num_vertices();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (out_degree(h, o, VertexSet::from_mask(n, mask)) < k) return false;
  }
  return true;
}

bool literal_safe(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& set, VertexId u, Side role, const Limits& limits) {
  const bool source = role == Side::kIn;  // sources live in in-tight sets
  const auto& family = source ? fam.m_minus : fam.m_plus;
  if (std::find(family.begin(), family.end(), set) == family.end()) {
    throw InvalidArgument(set.to_string() + " is not a minimal tight set");
  }
  if (u < 0 || u >= h.num_vertices() || !set.contains(u)) {
    throw InvalidArgument("vertex " + std::to_string(u) + " is not in " + set.to_string());
  }
  const int n = h.num_vertices();
  guard_vertices(n, limits.max_vertices, "safe-vertex definition");
  // Tight and dangerous sets on the side opposite to the set's own.
  std::vector<VertexSet> tight;
  std::vector<VertexSet> dangerous;
  for_each_proper_subset(n, [&](const VertexSet& x) {
    if (x.contains(fam.root)) return;
    const Count d = source ? out_degree(h, o, x) : in_degree(h, o, x);
    if (d == fam.k) tight.push_back(x);
    if (d == fam.k + 1) dangerous.push_back(x);
  });
  for (const VertexSet& x : tight) {
    if (x.contains(u) && !set.is_proper_subset_of(x)) return false;
  }
  for (const VertexSet& x : dangerous) {
    if (!x.contains(u) || (set - x).empty()) continue;
    VertexSet without_u = x;
    without_u.erase(u);
    if (!has_subset_in(tight, without_u)) return false;
  }
  return true;
}

}  // namespace

Count bf_lambda(const Hypergraph& h, const Orientation& o, const Limits& limits) {
  const int n = h.num_vertices();
  guard_vertices(n, limits.max_vertices, "bf_lambda");
  Count best = std::numeric_limits<Count>::max();
  for_each_proper_subset(n, [&](const VertexSet& x) { best = std::min(best, out_degree(h, o, x)); });
  return best;
}

std::vector<VertexSet> bf_tight_in(const Hypergraph& h, const Orientation& o, Count k,
                                   VertexId root, const Limits& limits) {
  return tight_sets(h, o, k, root, Side::kIn, limits);
}

std::vector<VertexSet> bf_tight_out(const Hypergraph& h, const Orientation& o, Count k,
                                    VertexId root, const Limits& limits) {
  return tight_sets(h, o, k, root, Side::kOut, limits);
}

CutFamilies bf_families(const Hypergraph& h, const Orientation& o, VertexId root,
                        const Limits& limits) {
  return bf_families(h, o, bf_lambda(h, o, limits), root, limits);
}

CutFamilies bf_families(const Hypergraph& h, const Orientation& o, Count k, VertexId root,
                        const Limits& limits) {
  const int n = h.num_vertices();
  if (root < 0 || root >= n) throw InvalidArgument("root out of range");
  const Count connectivity = bf_lambda(h, o, limits);
  if (connectivity < k) {
    throw InvalidArgument("families at level " + std::to_string(k) +
                          " need connectivity at least that, found " +
                          std::to_string(connectivity));
  }
  const std::vector<VertexSet> t_minus = bf_tight_in(h, o, k, root, limits);
  const std::vector<VertexSet> t_plus = bf_tight_out(h, o, k, root, limits);

  CutFamilies fam;
  fam.k = k;
  fam.root = root;
  fam.m_minus = with_full(t_minus, n);
  fam.m_plus = with_full(t_plus, n);
  std::vector<VertexSet> both = fam.m_minus;
  both.insert(both.end(), fam.m_plus.begin(), fam.m_plus.end());
  fam.m_all = inclusion_minimal(std::move(both));

  // V is tight on both sides and contains everything.
  std::vector<VertexSet> candidates{VertexSet::full(n)};
  for (const VertexSet& x : t_minus) {
    if (has_subset_in(t_plus, x)) candidates.push_back(x);
  }
  for (const VertexSet& x : t_plus) {
    if (has_subset_in(t_minus, x)) candidates.push_back(x);
  }
  fam.r_family = inclusion_minimal(std::move(candidates));

  for (VertexId v = 0; v < n; ++v) {
    fam.q_minus.push_back(smallest_containing(t_minus, n, v));
    fam.q_plus.push_back(smallest_containing(t_plus, n, v));
  }
  return fam;
}

BruteSeparator bf_min_separator(const Hypergraph& h, const Orientation& o,
                                const VertexSet& inside, const VertexSet& outside, Side side,
                                const Limits& limits) {
  const int n = h.num_vertices();
  guard_vertices(n, limits.max_vertices, "bf_min_separator");
  if (inside.universe() != n || outside.universe() != n) {
    throw InvalidArgument("separator terminals over the wrong universe");
  }
  if (inside.empty() || outside.empty() || inside.intersects(outside)) {
    throw InvalidArgument("separator terminals must be nonempty and disjoint");
  }
  BruteSeparator result{std::numeric_limits<Count>::max(), {}, VertexSet::full(n)};
  for_each_proper_subset(n, [&](const VertexSet& x) {
    if (!inside.is_subset_of(x) || x.intersects(outside)) return;
    const Count d = side == Side::kIn ? in_degree(h, o, x) : out_degree(h, o, x);
    if (d < result.value) {
      result.value = d;
      result.minimizers.clear();
    }
    if (d == result.value) result.minimizers.push_back(x);
  });
  for (const VertexSet& x : result.minimizers) result.minimal &= x;
  canonicalize(result.minimizers);
  if (std::find(result.minimizers.begin(), result.minimizers.end(), result.minimal) ==
      result.minimizers.end()) {
    throw InvariantViolation("intersection of minimum separators " + result.minimal.to_string() +
                                 " is not itself minimum",
                             result.minimal.to_string());
  }
  return result;
}

BruteSeparator bf_min_separator(const Hypergraph& h, const Orientation& o, VertexId s,
                                const VertexSet& outside, Side side, const Limits& limits) {
  if (s < 0 || s >= h.num_vertices()) throw InvalidArgument("separator source out of range");
  return bf_min_separator(h, o, VertexSet::singleton(h.num_vertices(), s), outside, side, limits);
}

PartitionCheck bf_partition_connected(const Hypergraph& h, Count k, const Limits& limits) {
  const int n = h.num_vertices();
  guard_vertices(n, limits.max_partition_vertices, "bf_partition_connected");
  PartitionCheck check;
  if (k <= 0) return check;

  // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    const int classes = prefix_max.back() + 1;
    if (classes >= 2) {
      std::vector<VertexSet> parts(static_cast<std::size_t>(classes), VertexSet(n));
      for (VertexId v = 0; v < n; ++v) parts[static_cast<std::size_t>(label[v])].insert(v);
      Partition p(n, std::move(parts));
      if (crossing_edges(h, p) < k * classes) {
        check.connected = false;
        check.witness = std::move(p);
        return check;
      }
    }
    int i = n - 1;
    while (i > 0 && label[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) {
      --i;
    }
    if (i == 0) break;
    ++label[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], label[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      label[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
  return check;
}

OrientationSearch bf_orientation_exists(const Hypergraph& h, Count k, const Limits& limits) {
  const int m = h.num_edges();
  std::vector<std::vector<VertexId>> choices;
  long double total = 1;
  for (EdgeId e = 0; e < m; ++e) {
    choices.push_back(h.edge(e).elements());
    total *= static_cast<long double>(choices.back().size());
  }
  if (total > static_cast<long double>(limits.max_orientations)) {
    throw OracleLimitExceeded("bf_orientation_exists: " + std::to_string(static_cast<double>(total)) +
                              " orientations exceed the oracle bound");
  }
  guard_vertices(h.num_vertices(), limits.max_vertices, "bf_orientation_exists");

  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  std::vector<VertexId> heads(static_cast<std::size_t>(m));
  while (true) {
    for (std::size_t e = 0; e < pick.size(); ++e) heads[e] = choices[e][pick[e]];
    Orientation o(h, heads);
    if (connected_at_least(h, o, k)) return {true, std::move(o)};
    std::size_t e = 0;
    while (e < pick.size() && ++pick[e] == choices[e].size()) pick[e++] = 0;
    if (e == pick.size()) break;
  }
  return {};
}

bool bf_safe_source(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                    const VertexSet& s_set, VertexId u, const Limits& limits) {
  return literal_safe(h, o, fam, s_set, u, Side::kIn, limits);
}

bool bf_safe_sink(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& t_set, VertexId u, const Limits& limits) {
  return literal_safe(h, o, fam, t_set, u, Side::kOut, limits);
}

}  // namespace hyperorient::oracle
