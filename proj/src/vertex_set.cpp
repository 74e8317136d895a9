#include "hyperorient/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

std::size_t words_for(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw InvalidArgument("vertex set universe must be nonnegative");
}

VertexSet::VertexSet(int universe, std::initializer_list<VertexId> members)
    : VertexSet(universe, std::span<const VertexId>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) {
    if (v < 0 || v >= universe) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe));
    }
    insert(v);
  }
}

VertexSet VertexSet::full(int universe) {
  VertexSet x(universe);
  std::fill(x.words_.begin(), x.words_.end(), ~std::uint64_t{0});
  x.clear_padding();
  return x;
}

VertexSet VertexSet::singleton(int universe, VertexId v) { return VertexSet(universe, {v}); }

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidArgument("from_mask needs a universe of at most 64");
  VertexSet x(universe);
  if (universe > 0) x.words_[0] = mask;
  x.clear_padding();
  return x;
}

int VertexSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexId VertexSet::min_element() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<VertexId>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

std::vector<VertexId> VertexSet::elements() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw InvalidArgument("to_mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet x(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) x.words_[w] = ~words_[w];
  x.clear_padding();
  return x;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  if (auto c = size() <=> other.size(); c != 0) return c;
  // Same size: the set holding the smallest element of the symmetric
  // difference comes first in lexicographic order of sorted elements.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (words_[w] & lowest) != 0 ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](VertexId v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("vertex sets over different universes (" + std::to_string(universe_) +
                          " vs " + std::to_string(other.universe_) + ")");
  }
}

void VertexSet::clear_padding() {
  const int tail_bits = universe_ % 64;
  if (tail_bits != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail_bits) - 1;
  }
}

void canonicalize(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> family) {
  canonicalize(family);
  std::vector<VertexSet> out;
  // Canonical order lists smaller sets first, so any proper subset of a set
  // has already been kept or discarded in favour of its own subset.
  for (const VertexSet& x : family) {
    const bool dominated = std::any_of(out.begin(), out.end(),
                                       [&](const VertexSet& y) { return y.is_subset_of(x); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

}  // namespace hyperorient
