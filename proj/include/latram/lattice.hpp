#pragma once
// Finite distributive lattices in canonical Birkhoff encoding: a lattice is
// the family of down-sets of its join-irreducible poset, so join is bitwise
// union, meet is bitwise intersection, and distributivity is structural.

#include <optional>
#include <utility>
#include <vector>

#include "latram/poset.hpp"

namespace latram {

class DistLattice {
 public:
  DistLattice() = default;

  /// The lattice of down-sets of `base` (bottom = empty set, top = all of
  /// base). A base of size 0 yields the one-element lattice with 0 = 1,
  /// admitted only when allow_trivial is set.
  static DistLattice down_set_lattice(Poset base, bool allow_trivial = false);

  int size() const { return static_cast<int>(elems_.size()); }
  const Poset& base() const { return base_; }
  Mask elem_mask(int x) const { return elems_[x]; }
  const std::vector<Mask>& elem_masks() const { return elems_; }

  /// Index of the element with the given down-set mask; -1 when absent.
  int index_of(Mask m) const;

  int join(int x, int y) const { return index_of(elems_[x] | elems_[y]); }
  int meet(int x, int y) const { return index_of(elems_[x] & elems_[y]); }
  bool leq(int x, int y) const {
    return (elems_[x] & elems_[y]) == elems_[x];
  }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool trivial() const { return size() == 1; }

  bool operator==(const DistLattice&) const = default;

 private:
  Poset base_;
  std::vector<Mask> elems_;  // ascending by mask value
};

/// A checked {0,1}-lattice homomorphism given by its full function table.
struct LatticeHom {
  DistLattice source, target;
  std::vector<int> map;
  bool surjective = false;

  int operator()(int x) const { return map[x]; }
};

/// A partition of the lattice compatible with join and meet. Blocks are
/// listed ascending by their minimum element; every block of a lattice
/// congruence has one.
struct Congruence {
  DistLattice lattice;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;
  std::vector<int> class_min;

  bool same(int x, int y) const { return block_of[x] == block_of[y]; }
};

/// Result of ingesting raw operation tables: the canonical lattice plus the
/// re-encoding bijection raw index -> canonical element index.
struct TableIngest {
  DistLattice lattice;
  std::vector<int> reindex;
};

/// Validates the lattice axioms, boundedness and distributivity of the given
/// operation tables by exhaustive check, then re-encodes canonically over
/// the join-irreducibles. Throws NotALattice / NotBounded / NotDistributive
/// with a witness.
TableIngest from_tables(int n, const std::vector<std::vector<int>>& join,
                        const std::vector<std::vector<int>>& meet, int bottom,
                        int top, bool allow_trivial = false);

/// Element indices with exactly one lower cover (bottom excluded), ascending.
std::vector<int> join_irreducible_elements(const DistLattice& l);

/// The poset of join-irreducibles, computed from covers. For a canonical
/// lattice this reproduces the base poset whenever the base is naturally
/// labeled.
Poset join_irreducibles(const DistLattice& l);

/// Bit i set iff the i-th join-irreducible lies below x; joining the flagged
/// irreducibles recovers x.
Mask canonical_representation(const DistLattice& l, int x);

LatticeHom validate_homomorphism(const std::vector<int>& map,
                                 const DistLattice& source,
                                 const DistLattice& target,
                                 bool require_surjective);

/// All surjective {0,1}-homomorphisms l -> k, tables ascending
/// lexicographically.
std::vector<LatticeHom> enumerate_surjective_homomorphisms(
    const DistLattice& l, const DistLattice& k);

LatticeHom compose(const LatticeHom& g, const LatticeHom& f);

Congruence make_congruence(DistLattice l,
                           const std::vector<std::vector<int>>& blocks);

Congruence kernel(const LatticeHom& f);

/// All congruences by pruned refinement search over partitions, in
/// restricted-growth order. Never assumes the 2^|J| count.
std::vector<Congruence> enumerate_congruences(const DistLattice& l,
                                              int size_bound = -1);

/// Psi refines phi, i.e. phi contains Psi as a relation.
bool refines(const Congruence& psi, const Congruence& phi);

struct Quotient {
  DistLattice lattice;    // canonical encoding of l / phi
  LatticeHom natural;     // x -> canonical index of [x]
};

/// Canonical quotient plus the natural surjection. Asserts that the minimum
/// of every join-irreducible class is join-irreducible in the source.
Quotient quotient(const DistLattice& l, const Congruence& phi);

}  // namespace latram
