#include "checks.hpp"

#include <algorithm>
#include <sstream>

#include "hyperorient/errors.hpp"
#include "hyperorient/families.hpp"
#include "hyperorient/io.hpp"
#include "hyperorient/oracle.hpp"
#include "hyperorient/separator.hpp"

namespace hyperorient::testing {

namespace {

std::string family_string(const std::vector<VertexSet>& family) {
  std::string out = "[";
  for (const VertexSet& x : family) out += x.to_string();
  return out + "]";
}

bool member(const std::vector<VertexSet>& family, const VertexSet& x) {
  return std::find(family.begin(), family.end(), x) != family.end();
}

bool crossing(const VertexSet& x, const VertexSet& y) {
  return x.intersects(y) && !(x - y).empty() && !(y - x).empty() && !(x | y).is_full();
}

}  // namespace

std::string describe(const Hypergraph& h, const Orientation& o) {
  std::ostringstream out;
  out << "n=" << h.num_vertices() << " edges=";
  for (EdgeId e = 0; e < h.num_edges(); ++e) out << h.edge(e).to_string() << "->" << o.head(e) << ' ';
  return out.str();
}

Failures check_separators(const Hypergraph& h, const Orientation& o) {
  Failures failures;
  const int n = h.num_vertices();
  const SeparatorSolver solver(h, o);
  if (solver.lambda() != oracle::bf_lambda(h, o)) {
    failures.push_back("lambda mismatch on " + describe(h, o));
  }
  // Base-3 digits: 0 free, 1 inside, 2 outside.
  std::uint64_t combos = 1;
  for (int i = 0; i < n; ++i) combos *= 3;
  for (std::uint64_t code = 0; code < combos; ++code) {
    VertexSet inside(n);
    VertexSet outside(n);
    std::uint64_t rest = code;
    for (VertexId v = 0; v < n; ++v, rest /= 3) {
      if (rest % 3 == 1) inside.insert(v);
      if (rest % 3 == 2) outside.insert(v);
    }
    if (inside.empty() || outside.empty()) continue;
    const SeparatorResult out_fast = solver.min_out(inside, outside);
    const SeparatorResult in_fast = solver.min_in(inside, outside);
    const auto out_slow = oracle::bf_min_separator(h, o, inside, outside, oracle::Side::kOut);
    const auto in_slow = oracle::bf_min_separator(h, o, inside, outside, oracle::Side::kIn);
    if (out_fast.value != out_slow.value || out_fast.separator != out_slow.minimal) {
      failures.push_back("min_out " + inside.to_string() + "|" + outside.to_string() + " gave (" +
                         std::to_string(out_fast.value) + "," + out_fast.separator.to_string() +
                         "), oracle (" + std::to_string(out_slow.value) + "," +
                         out_slow.minimal.to_string() + ") on " + describe(h, o));
    }
    if (in_fast.value != in_slow.value || in_fast.separator != in_slow.minimal) {
      failures.push_back("min_in " + inside.to_string() + "|" + outside.to_string() + " gave (" +
                         std::to_string(in_fast.value) + "," + in_fast.separator.to_string() +
                         "), oracle (" + std::to_string(in_slow.value) + "," +
                         in_slow.minimal.to_string() + ") on " + describe(h, o));
    }
  }
  return failures;
}

Failures check_families(const Hypergraph& h, const Orientation& o) {
  const CutFamilies fast = compute_families(h, o);
  const CutFamilies slow = oracle::bf_families(h, o);
  Failures failures;
  auto compare = [&](const char* name, const std::vector<VertexSet>& a,
                     const std::vector<VertexSet>& b) {
    if (a != b) {
      failures.push_back(std::string(name) + " " + family_string(a) + " vs oracle " +
                         family_string(b) + " on " + describe(h, o));
    }
  };
  if (fast.k != slow.k) failures.push_back("level mismatch on " + describe(h, o));
  compare("m_minus", fast.m_minus, slow.m_minus);
  compare("m_plus", fast.m_plus, slow.m_plus);
  compare("m_all", fast.m_all, slow.m_all);
  compare("r_family", fast.r_family, slow.r_family);
  compare("q_minus", fast.q_minus, slow.q_minus);
  compare("q_plus", fast.q_plus, slow.q_plus);
  return failures;
}

Failures check_safe(const Hypergraph& h, const Orientation& o, bool require_existence) {
  const CutFamilies fast = compute_families(h, o);
  const CutFamilies slow = oracle::bf_families(h, o);
  Failures failures;
  auto scan = [&](const std::vector<VertexSet>& family, bool source) {
    const char* what = source ? "source" : "sink";
    for (const VertexSet& x : family) {
      bool any = false;
      x.for_each([&](VertexId u) {
        const bool quick = source ? is_safe_source(h, o, fast, x, u) : is_safe_sink(h, o, fast, x, u);
        const bool literal =
            source ? oracle::bf_safe_source(h, o, slow, x, u) : oracle::bf_safe_sink(h, o, slow, x, u);
        any = any || literal;
        if (quick != literal) {
          failures.push_back(std::string("safe ") + what + " " + std::to_string(u) + " in " +
                             x.to_string() + ": test says " + (quick ? "safe" : "unsafe") +
                             ", definition says " + (literal ? "safe" : "unsafe") + " on " +
                             describe(h, o));
        }
      });
      if (require_existence && !any) {
        failures.push_back(std::string("no safe ") + what + " in " + x.to_string() + " on " +
                           describe(h, o));
      }
    }
  };
  scan(fast.m_minus, true);
  scan(fast.m_plus, false);
  return failures;
}

Failures check_claims(const Hypergraph& h, const Orientation& o) {
  const int n = h.num_vertices();
  const Count level = oracle::bf_lambda(h, o);
  Failures failures;
  auto fail = [&](const std::string& what, const VertexSet& x, const VertexSet& y) {
    failures.push_back(what + " for " + x.to_string() + ", " + y.to_string() + " at k=" +
                       std::to_string(level) + " on " + describe(h, o));
  };

  std::vector<VertexSet> proper;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    proper.push_back(VertexSet::from_mask(n, mask));
  }
  for (const VertexSet& x : proper) {
    for (const VertexSet& y : proper) {
      if (!x.intersects(y) || (x | y).is_full()) continue;
      const VertexSet meet = x & y;
      const VertexSet join = x | y;
      if (in_degree(h, o, x) + in_degree(h, o, y) < in_degree(h, o, meet) + in_degree(h, o, join)) {
        fail("in-degree not submodular", x, y);
      }
      if (out_degree(h, o, x) + out_degree(h, o, y) <
          out_degree(h, o, meet) + out_degree(h, o, join)) {
        fail("out-degree not submodular", x, y);
      }
    }
  }

  const VertexId root = 0;
  std::vector<VertexSet> t_minus, t_plus, d_minus, d_plus;
  for (const VertexSet& x : proper) {
    if (x.contains(root)) continue;
    const Count din = in_degree(h, o, x);
    const Count dout = out_degree(h, o, x);
    if (din == level) t_minus.push_back(x);
    if (din == level + 1) d_minus.push_back(x);
    if (dout == level) t_plus.push_back(x);
    if (dout == level + 1) d_plus.push_back(x);
  }
  const std::vector<VertexSet> m_minus = inclusion_minimal(t_minus);
  const std::vector<VertexSet> m_plus = inclusion_minimal(t_plus);
  std::vector<VertexSet> relevant;
  for (const auto* family : {&t_minus, &t_plus, &d_minus, &d_plus}) {
    relevant.insert(relevant.end(), family->begin(), family->end());
  }
  canonicalize(relevant);

  for (const VertexSet& x : relevant) {
    for (const VertexSet& y : relevant) {
      if (!crossing(x, y)) continue;
      const bool x_in = member(t_minus, x), y_in = member(t_minus, y);
      const bool x_out = member(t_plus, x), y_out = member(t_plus, y);
      if (x_in && y_in && !(member(t_minus, x | y) && member(t_minus, x & y))) {
        fail("claim (a)", x, y);
      }
      if (x_out && y_out && !(member(t_plus, x | y) && member(t_plus, x & y))) {
        fail("claim (b)", x, y);
      }
      if (x_in && y_out && !(member(t_minus, x - y) && member(t_plus, y - x))) {
        fail("claim (c)", x, y);
      }
      if (member(m_minus, x) && (y_out || member(d_plus, y)) &&
          !(member(d_plus, y) && member(t_plus, y - x))) {
        fail("claim (d)", x, y);
      }
      if ((x_in || member(d_minus, x)) && member(m_plus, y) &&
          !(member(d_minus, x) && member(t_minus, x - y))) {
        fail("claim (e)", x, y);
      }
    }
  }
  return failures;
}

Failures check_path(const Hypergraph& h, const AugmentRound& round) {
  Failures failures;
  const AdmissiblePath& p = round.path;
  const int n = h.num_vertices();
  const std::string where = " in region " + p.region.to_string() + " on " + describe(h, round.before);
  try {
    validate_hyperpath(h, round.before, p.path);
  } catch (const Error& e) {
    failures.push_back(std::string("invalid hyperpath: ") + e.what() + where);
    return failures;
  }
  const std::vector<VertexId> trimming = trim(h, round.before, p.path);
  if (trimming != p.trimming) failures.push_back("recorded trimming differs" + where);
  for (VertexId v : trimming) {
    if (!p.region.contains(v)) failures.push_back("trimming leaves the region" + where);
  }
  if (static_cast<int>(p.path.arcs.size()) >= n) failures.push_back("path has n or more hyperarcs" + where);
  if (!p.source_set.is_subset_of(p.region) || !p.sink_set.is_subset_of(p.region)) {
    failures.push_back("source or sink set outside the region" + where);
  }
  if (n > 6) return failures;

  // No trimmed arc leaves an out-tight set (in-tight region) or enters an
  // in-tight set (out-tight region) that avoids both ends.
  const bool in_region = p.side == TightSide::kIn;
  const auto tight = in_region ? oracle::bf_tight_out(h, round.before, round.level)
                               : oracle::bf_tight_in(h, round.before, round.level);
  for (const VertexSet& x : tight) {
    if (x.contains(p.source) || x.contains(p.sink)) continue;
    for (std::size_t i = 0; i + 1 < trimming.size(); ++i) {
      const bool from_inside = x.contains(trimming[i]);
      const bool to_inside = x.contains(trimming[i + 1]);
      if (in_region ? (from_inside && !to_inside) : (!from_inside && to_inside)) {
        failures.push_back(std::string("trimmed arc ") + (in_region ? "leaves" : "enters") +
                           " tight set " + x.to_string() + where);
      }
    }
  }
  return failures;
}

Failures AugmentCheck::all() const {
  Failures out = trace;
  out.insert(out.end(), paths.begin(), paths.end());
  out.insert(out.end(), potential.begin(), potential.end());
  return out;
}

AugmentCheck check_augmentation(const Hypergraph& h, const Orientation& o, Count k_target,
                                AugmentStats* stats) {
  AugmentCheck check;
  Failures& failures = check.trace;
  const int n = h.num_vertices();
  AugmentResult result;
  try {
    result = augment_to(h, o, k_target);
  } catch (const Error& e) {
    failures.push_back(std::string("augment_to threw: ") + e.what() + " on " + describe(h, o));
    return check;
  }
  const ReorientationTrace& trace = result.trace;
  const std::string where = " on " + describe(h, o);

  const Count start = oracle::bf_lambda(h, o);
  if (trace.lambda_initial != start) failures.push_back("wrong initial connectivity" + where);
  Orientation current = o;
  Count previous = start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReorientationStep& step = trace.steps[i];
    if (current.head(step.edge) != step.old_head) {
      failures.push_back("step " + std::to_string(i + 1) + " has a stale old head" + where);
    }
    current = reorient(h, current, step.edge, step.new_head);
    const Count now = oracle::bf_lambda(h, current);
    if (now != step.lambda_after) {
      failures.push_back("step " + std::to_string(i + 1) + " records the wrong connectivity" + where);
    }
    if (now < previous) {
      failures.push_back("connectivity decreased at step " + std::to_string(i + 1) + where);
    }
    previous = now;
  }
  if (current != result.orientation) failures.push_back("replay does not reach the result" + where);
  if (previous != k_target || trace.lambda_final != k_target) {
    failures.push_back("final connectivity " + std::to_string(previous) + " instead of " +
                       std::to_string(k_target) + where);
  }
  if (static_cast<Count>(trace.steps.size()) > step_budget(n, start, k_target)) {
    failures.push_back("step count over (k - lambda0) n^3" + where);
  }
  const TraceReport report = verify_trace(h, trace);
  for (const TraceFailure& f : report.failures) {
    failures.push_back("verify_trace step " + std::to_string(f.step) + ": " + f.message + where);
  }

  std::size_t per_level = 0;
  std::size_t max_per_level = 0;
  for (std::size_t r = 0; r < result.rounds.size(); ++r) {
    const AugmentRound& round = result.rounds[r];
    const Failures path_failures = check_path(h, round);
    check.paths.insert(check.paths.end(), path_failures.begin(), path_failures.end());

    // The steps of this round are the path's arcs in the prescribed order.
    std::vector<HyperpathArc> order = round.path.path.arcs;
    if (round.path.side == TightSide::kIn) std::reverse(order.begin(), order.end());
    for (std::size_t i = 0; i < round.num_steps; ++i) {
      const ReorientationStep& step = trace.steps[round.first_step + i];
      if (i >= order.size() || step.edge != order[i].edge || step.new_head != order[i].tail) {
        check.paths.push_back("round " + std::to_string(r) + " reorients out of order" + where);
        break;
      }
    }
    if (!round.potential_after.improves_on(round.potential_before)) {
      check.potential.push_back("potential did not decrease in round " + std::to_string(r) + where);
    }
    const bool same_level = r > 0 && result.rounds[r - 1].level == round.level;
    per_level = same_level ? per_level + 1 : 1;
    if (same_level && result.rounds[r - 1].potential_after != round.potential_before) {
      check.potential.push_back("potential changed between rounds " + std::to_string(r - 1) + " and " +
                         std::to_string(r) + where);
    }
    max_per_level = std::max(max_per_level, per_level);
    if (stats != nullptr && round.stopped_early) ++stats->early_stops;
  }
  if (max_per_level > static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    check.potential.push_back("more than n^2 paths for one increment" + where);
  }
  if (stats != nullptr) {
    stats->steps += trace.steps.size();
    stats->rounds += result.rounds.size();
    stats->max_rounds_per_level = std::max(stats->max_rounds_per_level, max_per_level);
  }
  return check;
}

}  // namespace hyperorient::testing
