#pragma once
// Natural linear orders on distributive lattices and the machinery built on
// them: residuals x - S, collapsed sets N(f) and N(Phi), positivity of
// surjections and congruences, quotient orders, and the order-aware
// functors between naturally ordered lattices and linearly ordered posets.
//
// A natural order is the antilexicographic extension of a linear order on
// the join-irreducibles: reading the canonical 0/1 representation of an
// element with the largest irreducible most significant turns comparison
// into an integer comparison of keys.

#include <optional>
#include <utility>
#include <vector>

#include "latram/duality.hpp"
#include "latram/lattice.hpp"
#include "latram/poset.hpp"

namespace latram {

struct NaturalOrder {
  DistLattice lattice;
  std::vector<int> irr_sequence;  // base elements in increasing irr order
  std::vector<Mask> keys;         // per element, the antilex comparison key
  std::vector<int> rank;          // per element, its position
  std::vector<int> by_rank;       // inverse of rank

  bool before(int x, int y) const { return keys[x] < keys[y]; }
  bool before_eq(int x, int y) const { return keys[x] <= keys[y]; }
};

/// Builds the natural order induced by the given linear order on the
/// join-irreducibles (base elements, listed smallest first). Throws
/// NotAnExtension when the sequence does not extend the base poset order.
NaturalOrder antilex_natural_order(DistLattice l,
                                   const std::vector<int>& irr_sequence);

/// All natural orders of l, one per linear extension of the base, in the
/// extension enumeration order.
std::vector<NaturalOrder> enumerate_natural_orders(const DistLattice& l);

/// Recovers the irreducible order if `elems_in_order` (all lattice elements,
/// smallest first) is a natural order; nullopt otherwise.
std::optional<std::vector<int>> is_natural_order(
    const DistLattice& l, const std::vector<int>& elems_in_order);

/// Join of the irreducibles below x that avoid S (S given per element).
int residual_minus(const DistLattice& l, int x, const std::vector<bool>& s);

/// N(f): elements sharing their image with some strictly smaller element.
std::vector<bool> collapsed_set_hom(const LatticeHom& f);

/// N(Phi): elements congruent to some strictly smaller element.
std::vector<bool> collapsed_set_congruence(const Congruence& phi);

struct PositivityReport {
  bool positive;
  // For homs: the violating (x, y). For congruences: (a, b, a2, b2) with the
  // two pairs oriented opposite ways across the same two blocks.
  std::vector<int> counterexample;
};

/// Checks x - N(f) <= y - N(f)  =>  f(x) <= f(y) over all element pairs.
/// Throws OrderMismatch when the orders do not belong to f's endpoints.
PositivityReport is_positive_homomorphism(const LatticeHom& f,
                                          const NaturalOrder& source_order,
                                          const NaturalOrder& target_order);

/// Checks that every pair of distinct blocks is uniformly oriented by
/// residuals modulo N(Phi).
PositivityReport is_positive_congruence(const Congruence& phi,
                                        const NaturalOrder& order);

struct PositiveHom {
  LatticeHom hom;  // surjective
  NaturalOrder source_order, target_order;
  std::vector<bool> collapsed;  // N(f)
};

/// Validates surjectivity and positivity; throws NotPositive / OrderMismatch.
PositiveHom make_positive_hom(LatticeHom hom, NaturalOrder source_order,
                              NaturalOrder target_order);

struct PositiveCongruence {
  Congruence congruence;
  NaturalOrder order;
  std::vector<bool> collapsed;  // N(Phi)
};

PositiveCongruence make_positive_congruence(Congruence phi,
                                            NaturalOrder order);

/// The natural order the quotient inherits: blocks compared by residuals
/// modulo N(Phi). The result always passes is_natural_order on the quotient.
NaturalOrder quotient_natural_order(const PositiveCongruence& phi);

/// Restriction of the natural order to the join-irreducibles: the linearly
/// ordered poset J'(L).
LinearOrderedPoset ordered_j(const NaturalOrder& lo);

/// O'(Q): the down-set lattice with the antilex order induced by Q's linear
/// order.
NaturalOrder ordered_o(const LinearOrderedPoset& q);

/// J'(f) for a positive surjection: the Birkhoff dual re-validated as an
/// embedding of the ordered irreducible posets.
OrderedPosetEmbedding j_prime_morphism(const PositiveHom& f);

/// O'(phi) for an embedding of linearly ordered posets: the preimage
/// homomorphism packaged with the induced antilex orders. Positivity here is
/// theorem-backed, so a failed check aborts rather than reporting an error.
PositiveHom o_prime_morphism(const OrderedPosetEmbedding& phi);

/// Positive surjections lo -> ko, the positivity filter over the surjective
/// homomorphism enumeration; deterministic order.
std::vector<PositiveHom> enumerate_positive_surjections(
    const NaturalOrder& lo, const NaturalOrder& ko);

/// True when a and b are isomorphic as naturally ordered lattices; by
/// rigidity the only candidate matches ranks.
bool ordered_lattices_isomorphic(const NaturalOrder& a, const NaturalOrder& b);

/// Positive congruences of `no` whose ordered quotient is isomorphic to
/// `ko`; congruence enumeration order.
std::vector<PositiveCongruence> con_plus(const NaturalOrder& no,
                                         const NaturalOrder& ko);

}  // namespace latram
