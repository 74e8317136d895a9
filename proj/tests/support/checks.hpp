#ifndef HYPERORIENT_TESTS_CHECKS_HPP_
#define HYPERORIENT_TESTS_CHECKS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hyperorient/augment.hpp"
#include "hyperorient/hypergraph.hpp"

// Oracle comparisons shared by the property tests and the acceptance suite.
// Every check returns a description of each mismatch; empty means agreement.

namespace hyperorient::testing {

using Failures = std::vector<std::string>;

std::string describe(const Hypergraph& h, const Orientation& o);

/// min_out / min_in against bf_min_separator for every pair of disjoint
/// nonempty terminal sets, plus lambda against bf_lambda.
Failures check_separators(const Hypergraph& h, const Orientation& o);

/// compute_families against bf_families at the current connectivity.
Failures check_families(const Hypergraph& h, const Orientation& o);

/// is_safe_source / is_safe_sink against the literal definition for every
/// vertex of every minimal tight set. With require_existence, also demands a
/// safe vertex in each of those sets.
Failures check_safe(const Hypergraph& h, const Orientation& o, bool require_existence);

/// Submodularity of both degree functions and the five crossing-pair claims
/// on the oracle-enumerated tight and dangerous sets.
Failures check_claims(const Hypergraph& h, const Orientation& o);

/// Postconditions of one admissible path, checked against the orientation
/// it was found in.
Failures check_path(const Hypergraph& h, const AugmentRound& round);

struct AugmentStats {
  std::size_t steps = 0;
  std::size_t rounds = 0;
  std::size_t max_rounds_per_level = 0;
  std::size_t early_stops = 0;
};

/// Mismatches of one augment_to run, grouped by the contract they break.
struct AugmentCheck {
  /// Thrown errors, connectivity per step, step bound, verify_trace.
  Failures trace;
  /// Admissible-path postconditions.
  Failures paths;
  /// Potential decrease and the n^2 bound on paths per increment.
  Failures potential;

  bool ok() const { return trace.empty() && paths.empty() && potential.empty(); }
  Failures all() const;
};

/// Runs augment_to and certifies the result independently: brute-force
/// connectivity after every step, step bound, verify_trace, path
/// postconditions and strict potential decrease.
AugmentCheck check_augmentation(const Hypergraph& h, const Orientation& o, Count k_target,
                                AugmentStats* stats = nullptr);

}  // namespace hyperorient::testing

#endif  // HYPERORIENT_TESTS_CHECKS_HPP_
