#pragma once
// The contravariant Birkhoff functors between finite posets and finite
// distributive lattices, on objects and morphisms, plus the unit
// isomorphisms eta (lattice side) and epsilon (poset side). Functor outputs
// are re-validated through the poset/lattice validators rather than trusted.

#include <vector>

#include "latram/lattice.hpp"
#include "latram/poset.hpp"

namespace latram {

/// Poset of join-irreducibles. Indices are positions in the ascending
/// irreducible-element list.
Poset j_object(const DistLattice& l);

/// Down-set lattice over q.
DistLattice o_object(const Poset& q);

/// Dual of a homomorphism f : L -> K. Entry y (a position in K's irreducible
/// list) is the position in L's irreducible list of the meet of the full
/// preimage of the up-set of the y-th irreducible. Always a monotone map
/// J(K) -> J(L); an embedding when f is surjective, in which case it agrees
/// with the meet of the plain fiber.
std::vector<int> j_morphism(const LatticeHom& f);

/// Dual of a monotone map phi : p -> q, the preimage homomorphism
/// O(q) -> O(p); surjective whenever phi is an embedding.
LatticeHom o_morphism(const Poset& p, const Poset& q,
                      const std::vector<int>& phi);

struct EtaWitness {
  DistLattice target;       // O(J(l))
  std::vector<int> table;   // element of l -> element of target
};

struct EpsilonWitness {
  Poset target;                      // J(O(q)) as a poset
  std::vector<int> table;            // element of q -> position in target
  std::vector<int> irreducible_elems;  // positions -> elements of O(q)
};

/// x -> down-set of join-irreducibles below x, verified to be a lattice
/// isomorphism l -> O(J(l)).
EtaWitness eta_iso(const DistLattice& l);

/// x -> principal down-set at x, verified to be a poset isomorphism
/// q -> J(O(q)).
EpsilonWitness epsilon_iso(const Poset& q);

}  // namespace latram
