#pragma once
// Finite posets over dense integer element indices 0..n-1. All subset-valued
// data is a Mask whose bit i stands for element i, so canonical forms are
// plain integer comparisons and unions/intersections are single ops.

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latram/config.hpp"

namespace latram {

using Mask = std::uint32_t;

inline constexpr int kMaxPosetElements = 30;

inline Mask bit(int i) { return Mask{1} << i; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

class Poset {
 public:
  Poset() = default;

  /// Builds the poset whose order is the reflexive-transitive closure of
  /// `pairs` (each (i,j) read as i <= j). Throws AntisymmetryViolation with
  /// the offending cycle if the closure is not antisymmetric. The empty
  /// poset is admitted only when allow_empty is set.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                          bool allow_empty = false);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return n_; }
  bool leq(int a, int b) const { return (up_[a] >> b) & 1; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  Mask down(int a) const { return down_[a]; }  // {b : b <= a}
  Mask up(int a) const { return up_[a]; }      // {b : a <= b}
  Mask all() const { return n_ == 0 ? 0 : (bit(n_) - 1); }

  bool is_down_set(Mask m) const;
  Mask down_closure(Mask m) const;

  /// Cover relation (the Hasse diagram edges), pairs (a,b) with b covering a.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Subposet on the given elements, reindexed 0..k-1 in list order.
  Poset induced(const std::vector<int>& elems) const;

  /// Full reflexive order as sorted pairs, for serialization.
  std::vector<std::pair<int, int>> leq_pairs() const;

  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> up_, down_;
};

/// A poset together with a strict total order extending it. positions[i] is
/// the rank of element i; ranks form a permutation of 0..n-1.
struct LinearOrderedPoset {
  Poset poset;
  std::vector<int> positions;

  bool before(int a, int b) const { return positions[a] < positions[b]; }
  std::vector<int> by_rank() const;

  bool operator==(const LinearOrderedPoset&) const = default;
};

/// Validates that positions describe a linear extension of p.
LinearOrderedPoset make_linear_ordered(Poset p, std::vector<int> positions);

/// An injective map that preserves and reflects the order; the ordered
/// variant additionally preserves the linear order.
struct PosetEmbedding {
  Poset source, target;
  std::vector<int> map;
};

struct OrderedPosetEmbedding {
  LinearOrderedPoset source, target;
  std::vector<int> map;
};

bool is_embedding_table(const Poset& a, const Poset& c,
                        const std::vector<int>& map);
bool is_ordered_embedding_table(const LinearOrderedPoset& a,
                                const LinearOrderedPoset& c,
                                const std::vector<int>& map);
PosetEmbedding make_poset_embedding(Poset a, Poset c, std::vector<int> map);
OrderedPosetEmbedding make_ordered_embedding(LinearOrderedPoset a,
                                             LinearOrderedPoset c,
                                             std::vector<int> map);

/// All down-sets, ascending by mask value; contains 0 and all().
std::vector<Mask> down_sets(const Poset& p);

/// All linear extensions, ascending lexicographically by position array.
std::vector<LinearOrderedPoset> linear_extensions(const Poset& p);

/// All embedding tables a -> c, ascending lexicographically.
std::vector<std::vector<int>> enumerate_embeddings(const Poset& a,
                                                   const Poset& c);
std::vector<std::vector<int>> enumerate_ordered_embeddings(
    const LinearOrderedPoset& a, const LinearOrderedPoset& c);

/// One representative per isomorphism class, each naturally labeled (indices
/// form a linear extension), ascending by canonical encoding. Counts for
/// n = 1..6 are 1, 2, 5, 16, 63, 318.
std::vector<Poset> enumerate_posets_up_to_iso(int n,
                                              int size_bound = -1);

std::optional<std::vector<int>> are_isomorphic(const Poset& a, const Poset& b);

/// Ordered-flavor isomorphism; unique when it exists since linearly ordered
/// posets are rigid.
std::optional<std::vector<int>> are_isomorphic(const LinearOrderedPoset& a,
                                               const LinearOrderedPoset& b);

}  // namespace latram
