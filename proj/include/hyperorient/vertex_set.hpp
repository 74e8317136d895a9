#ifndef HYPERORIENT_VERTEX_SET_HPP_
#define HYPERORIENT_VERTEX_SET_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hyperorient {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Count = std::int64_t;

/// A subset of the vertex universe {0, ..., n-1}, stored as a packed bit vector.
///
/// Two sets are only comparable when they share the same universe size. The
/// three-way comparison is the canonical order used for every tie-break in the
/// library: smaller sets first, then lexicographic on the sorted elements.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<VertexId> members);
  VertexSet(int universe, std::span<const VertexId> members);

  static VertexSet full(int universe);
  static VertexSet singleton(int universe, VertexId v);
  /// Bit i of `mask` selects vertex i. Requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;
  bool is_full() const { return size() == universe_; }

  bool contains(VertexId v) const {
    return (words_[word_of(v)] >> bit_of(v)) & 1U;
  }
  void insert(VertexId v) { words_[word_of(v)] |= std::uint64_t{1} << bit_of(v); }
  void erase(VertexId v) { words_[word_of(v)] &= ~(std::uint64_t{1} << bit_of(v)); }

  /// Smallest member; -1 when empty.
  VertexId min_element() const;
  std::vector<VertexId> elements() const;
  /// Only valid for universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet complement() const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_proper_subset_of(const VertexSet& other) const {
    return is_subset_of(other) && *this != other;
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  /// "{0,2,5}"
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<VertexId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  static std::size_t word_of(VertexId v) { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit_of(VertexId v) { return static_cast<unsigned>(v) & 63U; }
  void check_universe(const VertexSet& other) const;
  void clear_padding();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Drops every member that strictly contains another member, removes
/// duplicates, and sorts the remainder canonically.
std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> family);

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<VertexSet>& family);

}  // namespace hyperorient

#endif  // HYPERORIENT_VERTEX_SET_HPP_
