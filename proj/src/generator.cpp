#include "hyperorient/generator.hpp"

#include <numeric>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

std::vector<VertexId> identity(int n) {
  std::vector<VertexId> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

/// Moves a uniform random choice into each of the first `count` slots.
void partial_shuffle(std::vector<VertexId>& items, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, items.size() - i);
    std::swap(items[i], items[j]);
  }
}

}  // namespace

void validate(const GenSpec& spec) {
  if (spec.n < 3) throw InvalidArgument("generator needs n >= 3");
  if (spec.k < 1) throw InvalidArgument("generator needs k >= 1");
  if (spec.extra_edges < 0) throw InvalidArgument("extra_edges must be nonnegative");
  if (spec.max_edge_size < 2 || spec.max_edge_size > spec.n) {
    throw InvalidArgument("max_edge_size must lie in 2..n");
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below needs a positive bound");
  // Reject the low values that would make the top partial block overrepresented.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

Hypergraph gen_instance(const GenSpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);
  std::vector<VertexSet> edges;
  for (int c = 0; c < spec.k; ++c) {
    std::vector<VertexId> cycle = identity(n);
    // Fisher-Yates, high index first.
    for (std::size_t i = cycle.size() - 1; i > 0; --i) {
      std::swap(cycle[i], cycle[uniform_below(rng, i + 1)]);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edges.push_back(VertexSet(n, {cycle[i], cycle[(i + 1) % cycle.size()]}));
    }
  }
  for (int x = 0; x < spec.extra_edges; ++x) {
    const auto size = 2 + uniform_below(rng, static_cast<std::uint64_t>(spec.max_edge_size - 1));
    std::vector<VertexId> pool = identity(n);
    partial_shuffle(pool, size, rng);
    edges.push_back(VertexSet(n, std::span<const VertexId>(pool.data(), size)));
  }
  return Hypergraph(n, std::move(edges));
}

Orientation gen_orientation(const Hypergraph& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> heads;
  for (const VertexSet& z : h.edges()) {
    const std::vector<VertexId> members = z.elements();
    heads.push_back(members[uniform_below(rng, members.size())]);
  }
  return Orientation(h, std::move(heads));
}

Orientation adversarial_orientation(const Hypergraph& h) {
  std::vector<VertexId> heads;
  for (const VertexSet& z : h.edges()) heads.push_back(z.min_element());
  return Orientation(h, std::move(heads));
}

}  // namespace hyperorient
