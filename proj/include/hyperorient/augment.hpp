#ifndef HYPERORIENT_AUGMENT_HPP_
#define HYPERORIENT_AUGMENT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hyperorient/hypergraph.hpp"
#include "hyperorient/pathsearch.hpp"

namespace hyperorient {

struct ReorientationStep {
  EdgeId edge;
  VertexId old_head;
  VertexId new_head;
  Count lambda_after;

  bool operator==(const ReorientationStep&) const = default;
};

struct ReorientationTrace {
  Orientation initial;
  std::vector<ReorientationStep> steps;
  Count lambda_initial = 0;
  Count lambda_final = 0;
  Count k_target = 0;

  bool operator==(const ReorientationTrace&) const = default;
};

/// (|M|, sum of |X| over M) for the minimal tight sets M. Progress means the
/// count drops, or stays and the covered size grows.
struct Potential {
  std::size_t count = 0;
  Count coverage = 0;

  bool improves_on(const Potential& before) const {
    return count < before.count || (count == before.count && coverage > before.coverage);
  }

  bool operator==(const Potential&) const = default;
};

Potential potential_of(const CutFamilies& fam);

/// One admissible path and what happened when it was applied.
struct AugmentRound {
  Count level;
  Orientation before;
  AdmissiblePath path;
  std::size_t first_step;
  std::size_t num_steps;
  /// The path was cut short because connectivity already reached level + 1.
  bool stopped_early;
  Potential potential_before;
  Potential potential_after;
};

struct AugmentResult {
  Orientation orientation;
  ReorientationTrace trace;
  std::vector<AugmentRound> rounds;
};

/// Raises connectivity from k = lambda(h, o) to k + 1 by single-hyperarc
/// reorientations. Throws NotPartitionConnected when the input cannot be
/// (k+1, k+1)-partition-connected.
AugmentResult augment_one(const Hypergraph& h, const Orientation& o);

/// Repeats augment_one until connectivity reaches k_target. Rejects
/// k_target < lambda(h, o).
AugmentResult augment_to(const Hypergraph& h, const Orientation& o, Count k_target);

struct TraceFailure {
  /// 1-based step index; 0 for checks on the trace as a whole.
  std::size_t step;
  std::string message;
};

struct TraceReport {
  std::vector<TraceFailure> failures;
  std::size_t steps_checked = 0;
  Count lambda_initial = 0;
  Count lambda_final = 0;

  bool ok() const { return failures.empty(); }
};

/// Replays the trace from its initial orientation, recomputing connectivity
/// after every step, and reports every violated contract.
TraceReport verify_trace(const Hypergraph& h, const ReorientationTrace& trace);

/// (k_target - lambda_initial) * n^3, or 0 when no increase is requested.
Count step_budget(int num_vertices, Count lambda_initial, Count k_target);

}  // namespace hyperorient

#endif  // HYPERORIENT_AUGMENT_HPP_
