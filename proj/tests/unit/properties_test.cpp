#include <gtest/gtest.h>

#include "checks.hpp"
#include "corpus.hpp"
#include "hyperorient/augment.hpp"
#include "hyperorient/errors.hpp"
#include "hyperorient/generator.hpp"
#include "hyperorient/oracle.hpp"

namespace hyperorient {
namespace {

using testing::Oriented;

std::vector<Oriented> generated(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Oriented> out;
  for (int i = 0; i < count; ++i) {
    GenSpec spec;
    spec.n = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 2)));
    spec.k = 1 + static_cast<int>(uniform_below(rng, 2));
    spec.extra_edges = static_cast<int>(uniform_below(rng, 4));
    spec.max_edge_size = 2 + static_cast<int>(uniform_below(rng, 2));
    spec.seed = rng();
    Hypergraph h = gen_instance(spec);
    Orientation o = gen_orientation(h, rng());
    out.push_back({std::move(h), std::move(o)});
  }
  return out;
}

bool pairwise_disjoint(const std::vector<VertexSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].intersects(family[j])) return false;
    }
  }
  return true;
}

TEST(Properties, MinimalTightSetsFormSubpartitions) {
  auto check = [](const Hypergraph& h, const Orientation& o) {
    const CutFamilies fam = compute_families(h, o);
    ASSERT_TRUE(pairwise_disjoint(fam.m_minus)) << testing::describe(h, o);
    ASSERT_TRUE(pairwise_disjoint(fam.m_plus)) << testing::describe(h, o);
    ASSERT_TRUE(pairwise_disjoint(fam.m_all)) << testing::describe(h, o);
    for (const VertexSet& x : fam.m_all) ASSERT_FALSE(x.contains(fam.root) && !x.is_full());
  };
  testing::for_each_oriented(3, 3, 3, check);
  for (const Oriented& x : generated(61, 200, 8)) check(x.h, x.o);
}

TEST(Properties, QSetsContainTheirVertexAndAreTight) {
  for (const Oriented& x : generated(62, 150, 8)) {
    const CutFamilies fam = compute_families(x.h, x.o);
    for (VertexId v = 0; v < x.h.num_vertices(); ++v) {
      const VertexSet& in = fam.q_minus[static_cast<std::size_t>(v)];
      const VertexSet& out = fam.q_plus[static_cast<std::size_t>(v)];
      ASSERT_TRUE(in.contains(v));
      ASSERT_TRUE(out.contains(v));
      if (!in.is_full()) {
        ASSERT_EQ(in_degree(x.h, x.o, in), fam.k);
      }
      if (!out.is_full()) {
        ASSERT_EQ(out_degree(x.h, x.o, out), fam.k);
      }
    }
  }
}

// Safe source and safe sink inside one R member are separated only by sets
// of degree at least k + 1.
TEST(Properties, SafeToSafeSeparation) {
  std::size_t checked = 0;
  for (const Oriented& x : generated(63, 300, 6)) {
    const CutFamilies fam = compute_families(x.h, x.o);
    if (fam.is_terminal() || !oracle::bf_partition_connected(x.h, fam.k + 1).connected) continue;
    const int n = x.h.num_vertices();
    for (const VertexSet& region : fam.r_family) {
      for (const VertexSet& s_set : fam.m_minus) {
        if (!s_set.is_subset_of(region)) continue;
        for (const VertexSet& t_set : fam.m_plus) {
          if (!t_set.is_subset_of(region)) continue;
          const VertexId source = find_safe_source(x.h, x.o, fam, s_set);
          const VertexId sink = find_safe_sink(x.h, x.o, fam, t_set);
          if (source == sink) continue;
          for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
            const VertexSet set = VertexSet::from_mask(n, mask);
            if (set.contains(fam.root)) continue;
            if (set.contains(source) && !set.contains(sink)) {
              ASSERT_GE(out_degree(x.h, x.o, set), fam.k + 1) << testing::describe(x.h, x.o);
            }
            if (set.contains(sink) && !set.contains(source)) {
              ASSERT_GE(in_degree(x.h, x.o, set), fam.k + 1) << testing::describe(x.h, x.o);
            }
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Properties, CrossingClaimsAndSubmodularity) {
  testing::for_each_oriented(3, 3, 3, [](const Hypergraph& h, const Orientation& o) {
    const auto failures = testing::check_claims(h, o);
    ASSERT_TRUE(failures.empty()) << failures.front();
  });
  for (const Oriented& x : generated(64, 100, 6)) {
    const auto failures = testing::check_claims(x.h, x.o);
    ASSERT_TRUE(failures.empty()) << failures.front();
  }
}

TEST(Properties, OrientabilityMatchesPartitionConnectivity) {
  testing::for_each_hypergraph(3, 4, 3, [](const Hypergraph& h) {
    for (Count level = 1; level <= 2; ++level) {
      ASSERT_EQ(oracle::bf_orientation_exists(h, level).exists,
                oracle::bf_partition_connected(h, level).connected)
          << testing::describe(h, adversarial_orientation(h)) << " k=" << level;
    }
  });
}

TEST(Properties, AugmentationIsDeterministic) {
  for (const Oriented& x : generated(65, 30, 8)) {
    const Count target = std::max<Count>(2, lambda(x.h, x.o));
    if (!oracle::bf_partition_connected(x.h, target).connected) continue;
    ASSERT_EQ(augment_to(x.h, x.o, target).trace, augment_to(x.h, x.o, target).trace);
    ASSERT_EQ(compute_families(x.h, x.o), compute_families(x.h, x.o));
  }
}

TEST(Properties, ArbitraryInputsEitherReachTheTargetOrAreRejected) {
  for (const Oriented& x : testing::random_corpus(66, 300, 3, 6, 8, 3)) {
    const Count target = lambda(x.h, x.o) + 1;
    const bool feasible = oracle::bf_partition_connected(x.h, target).connected;
    try {
      const AugmentResult r = augment_to(x.h, x.o, target);
      ASSERT_TRUE(feasible) << testing::describe(x.h, x.o);
      ASSERT_GE(lambda(x.h, r.orientation), target);
      ASSERT_TRUE(verify_trace(x.h, r.trace).ok());
    } catch (const NotPartitionConnected&) {
      ASSERT_FALSE(feasible) << testing::describe(x.h, x.o);
    }
  }
}

}  // namespace
}  // namespace hyperorient
