#include "hyperorient/augment.hpp"

#include <algorithm>

#include "hyperorient/errors.hpp"
#include "hyperorient/families.hpp"
#include "hyperorient/separator.hpp"

namespace hyperorient {

namespace {

bool contains_member(const std::vector<VertexSet>& family, const VertexSet& region) {
  return std::any_of(family.begin(), family.end(), [&](const VertexSet& x) {
    return !x.is_full() && x.is_subset_of(region);
  });
}

// V counts as tight on both sides; the search has to shrink into a proper
// minimal set of the other side, so pick the side that has one.
TightSide side_of(const Hypergraph& h, const Orientation& o, const CutFamilies& fam,
                  const VertexSet& region) {
  if (region.is_full()) {
    return contains_member(fam.m_plus, region) ? TightSide::kIn : TightSide::kOut;
  }
  if (in_degree(h, o, region) == fam.k && contains_member(fam.m_plus, region)) {
    return TightSide::kIn;
  }
  if (out_degree(h, o, region) == fam.k && contains_member(fam.m_minus, region)) {
    return TightSide::kOut;
  }
  throw InvariantViolation(region.to_string() + " is in the R family but qualifies on neither side",
                           region.to_string());
}

AugmentResult augment_one_unchecked(const Hypergraph& h, const Orientation& o) {
  const int n = h.num_vertices();
  const Count level = lambda(h, o);
  const Count budget = step_budget(n, level, level + 1);

  AugmentResult result{o, ReorientationTrace{o, {}, level, level, level + 1}, {}};
  Orientation current = o;
  Count current_lambda = level;
  while (current_lambda == level) {
    const CutFamilies fam = compute_families(h, current, level);
    const VertexSet& region = fam.r_family.front();
    AdmissiblePath path = side_of(h, current, fam, region) == TightSide::kIn
                              ? admissible_path_in_tminus(h, current, fam, region)
                              : admissible_path_in_tplus(h, current, fam, region);

    AugmentRound round{level, current, path, result.trace.steps.size(), 0, false,
                       potential_of(fam), {}};
    // In-tight regions are reoriented from the sink back, out-tight ones
    // from the source forward.
    std::vector<HyperpathArc> order = path.path.arcs;
    if (path.side == TightSide::kIn) std::reverse(order.begin(), order.end());
    for (const HyperpathArc& arc : order) {
      if (static_cast<Count>(result.trace.steps.size()) >= budget) {
        throw NotPartitionConnected("step budget of " + std::to_string(budget) +
                                        " exhausted before connectivity rose above " +
                                        std::to_string(level),
                                    region.to_string());
      }
      const VertexId old_head = current.head(arc.edge);
      current = reorient(h, current, arc.edge, arc.tail);
      current_lambda = lambda(h, current);
      result.trace.steps.push_back({arc.edge, old_head, arc.tail, current_lambda});
      ++round.num_steps;
      if (current_lambda < level) {
        throw NotPartitionConnected("reorienting hyperedge " + std::to_string(arc.edge) +
                                        " toward " + std::to_string(arc.tail) +
                                        " dropped connectivity to " +
                                        std::to_string(current_lambda),
                                    region.to_string());
      }
      if (current_lambda > level) {
        round.stopped_early = round.num_steps < order.size();
        break;
      }
    }

    // Still measured at the starting level; once connectivity rose this is {V}.
    round.potential_after = potential_of(compute_families(h, current, level));
    if (!round.potential_after.improves_on(round.potential_before)) {
      throw NotPartitionConnected("admissible path in " + region.to_string() +
                                      " did not improve the minimal tight sets",
                                  region.to_string());
    }
    result.rounds.push_back(std::move(round));
  }
  result.orientation = current;
  result.trace.lambda_final = current_lambda;
  return result;
}

}  // namespace

Potential potential_of(const CutFamilies& fam) {
  Potential potential;
  potential.count = fam.m_all.size();
  for (const VertexSet& member : fam.m_all) potential.coverage += member.size();
  return potential;
}

AugmentResult augment_one(const Hypergraph& h, const Orientation& o) {
  try {
    return augment_one_unchecked(h, o);
  } catch (const NotPartitionConnected&) {
    throw;
  } catch (const InvariantViolation& e) {
    // Missing safe vertices and stalled searches have the same root cause.
    throw NotPartitionConnected(e.what(), e.certificate());
  }
}

AugmentResult augment_to(const Hypergraph& h, const Orientation& o, Count k_target) {
  const Count start = lambda(h, o);
  if (k_target < start) {
    throw InvalidArgument("target connectivity " + std::to_string(k_target) +
                          " is below the current " + std::to_string(start));
  }
  AugmentResult result{o, ReorientationTrace{o, {}, start, start, k_target}, {}};
  while (result.trace.lambda_final < k_target) {
    AugmentResult next = augment_one(h, result.orientation);
    const std::size_t offset = result.trace.steps.size();
    for (AugmentRound& round : next.rounds) {
      round.first_step += offset;
      result.rounds.push_back(std::move(round));
    }
    result.trace.steps.insert(result.trace.steps.end(), next.trace.steps.begin(),
                              next.trace.steps.end());
    result.trace.lambda_final = next.trace.lambda_final;
    result.orientation = std::move(next.orientation);
  }
  const Count budget = step_budget(h.num_vertices(), start, k_target);
  if (static_cast<Count>(result.trace.steps.size()) > budget) {
    throw InvariantViolation("trace has " + std::to_string(result.trace.steps.size()) +
                             " steps, over the budget of " + std::to_string(budget));
  }
  return result;
}

TraceReport verify_trace(const Hypergraph& h, const ReorientationTrace& trace) {
  TraceReport report;
  auto fail = [&](std::size_t step, std::string message) {
    report.failures.push_back({step, std::move(message)});
  };

  Orientation current = trace.initial;
  Count current_lambda = lambda(h, current);
  report.lambda_initial = current_lambda;
  if (current_lambda != trace.lambda_initial) {
    fail(0, "initial connectivity is " + std::to_string(current_lambda) + ", trace claims " +
                std::to_string(trace.lambda_initial));
  }

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReorientationStep& step = trace.steps[i];
    const std::size_t index = i + 1;
    if (step.edge < 0 || step.edge >= h.num_edges()) {
      fail(index, "no hyperedge " + std::to_string(step.edge));
      break;
    }
    if (current.head(step.edge) != step.old_head) {
      fail(index, "hyperedge " + std::to_string(step.edge) + " points at " +
                      std::to_string(current.head(step.edge)) + ", trace says " +
                      std::to_string(step.old_head));
    }
    try {
      current = reorient(h, current, step.edge, step.new_head);
    } catch (const InvalidReorientation& e) {
      fail(index, e.what());
      break;
    }
    const Count found = lambda(h, current);
    if (found != step.lambda_after) {
      fail(index, "connectivity after the step is " + std::to_string(found) +
                      ", trace says " + std::to_string(step.lambda_after));
    }
    if (found < current_lambda) {
      fail(index, "connectivity dropped from " + std::to_string(current_lambda) + " to " +
                      std::to_string(found));
    }
    current_lambda = found;
    ++report.steps_checked;
  }

  report.lambda_final = current_lambda;
  if (report.steps_checked == trace.steps.size()) {
    if (current_lambda != trace.lambda_final) {
      fail(0, "final connectivity is " + std::to_string(current_lambda) + ", trace claims " +
                  std::to_string(trace.lambda_final));
    }
    if (current_lambda < trace.k_target) {
      fail(0, "final connectivity " + std::to_string(current_lambda) + " is below the target " +
                  std::to_string(trace.k_target));
    }
  }
  const Count budget = step_budget(h.num_vertices(), report.lambda_initial, trace.k_target);
  if (static_cast<Count>(trace.steps.size()) > budget) {
    fail(0, std::to_string(trace.steps.size()) + " steps exceed the bound of " +
                std::to_string(budget));
  }
  return report;
}

Count step_budget(int num_vertices, Count lambda_initial, Count k_target) {
  if (k_target <= lambda_initial) return 0;
  const Count n = num_vertices;
  return (k_target - lambda_initial) * n * n * n;
}

}  // namespace hyperorient
