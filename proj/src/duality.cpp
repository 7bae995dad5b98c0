#include "latram/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "latram/errors.hpp"

namespace latram {

Poset j_object(const DistLattice& l) { return join_irreducibles(l); }

DistLattice o_object(const Poset& q) {
  return DistLattice::down_set_lattice(q, q.size() == 0);
}

std::vector<int> j_morphism(const LatticeHom& f) {
  const DistLattice& l = f.source;
  const DistLattice& k = f.target;
  const std::vector<int> irr_l = join_irreducible_elements(l);
  const std::vector<int> irr_k = join_irreducible_elements(k);

  std::vector<int> table(irr_k.size(), -1);
  for (int yi = 0; yi < static_cast<int>(irr_k.size()); ++yi) {
    const int y = irr_k[yi];
    Mask acc = l.elem_mask(l.top());
    for (int x = 0; x < l.size(); ++x)
      if (k.leq(y, f.map[x])) acc &= l.elem_mask(x);
    int elem = l.index_of(acc);
    if (elem < 0) throw std::logic_error("preimage meet left the lattice");
    auto it = std::lower_bound(irr_l.begin(), irr_l.end(), elem);
    if (it == irr_l.end() || *it != elem)
      throw std::logic_error("dual of a homomorphism missed an irreducible");
    table[yi] = static_cast<int>(it - irr_l.begin());

    if (f.surjective) {
      // For surjections the up-set preimage meet equals the plain fiber meet.
      Mask fiber = l.elem_mask(l.top());
      for (int x = 0; x < l.size(); ++x)
        if (f.map[x] == y) fiber &= l.elem_mask(x);
      if (fiber != acc)
        throw std::logic_error("fiber meet disagrees with up-set meet");
    }
  }

  const Poset jk = join_irreducibles(k);
  const Poset jl = join_irreducibles(l);
  for (int a = 0; a < jk.size(); ++a)
    for (int b = 0; b < jk.size(); ++b)
      if (jk.leq(a, b) && !jl.leq(table[a], table[b]))
        throw std::logic_error("dual of a homomorphism is not monotone");
  if (f.surjective && !is_embedding_table(jk, jl, table))
    throw std::logic_error("dual of a surjection is not an embedding");
  return table;
}

LatticeHom o_morphism(const Poset& p, const Poset& q,
                      const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != p.size())
    throw ValidationError("map length does not match the source poset");
  for (int v : phi)
    if (v < 0 || v >= q.size())
      throw ValidationError("map value out of target range");
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(phi[a], phi[b]))
        throw ValidationError("map is not a poset homomorphism");

  DistLattice oq = o_object(q);
  DistLattice op = o_object(p);
  std::vector<int> table(oq.size());
  for (int u = 0; u < oq.size(); ++u) {
    Mask pre = 0;
    for (int a = 0; a < p.size(); ++a)
      if ((oq.elem_mask(u) >> phi[a]) & 1) pre |= bit(a);
    int idx = op.index_of(pre);
    if (idx < 0)
      throw std::logic_error("preimage of a down-set is not a down-set");
    table[u] = idx;
  }
  return validate_homomorphism(table, oq, op,
                               is_embedding_table(p, q, phi));
}

EtaWitness eta_iso(const DistLattice& l) {
  const std::vector<int> irr = join_irreducible_elements(l);
  DistLattice target = DistLattice::down_set_lattice(join_irreducibles(l),
                                                     l.trivial());
  std::vector<int> table(l.size(), -1);
  std::vector<char> hit(target.size(), 0);
  for (int x = 0; x < l.size(); ++x) {
    Mask m = 0;
    for (int i = 0; i < static_cast<int>(irr.size()); ++i)
      if (l.leq(irr[i], x)) m |= bit(i);
    int idx = target.index_of(m);
    if (idx < 0 || hit[idx])
      throw std::logic_error("eta is not a bijection");
    hit[idx] = 1;
    table[x] = idx;
  }
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (table[l.join(x, y)] != target.join(table[x], table[y]) ||
          table[l.meet(x, y)] != target.meet(table[x], table[y]))
        throw std::logic_error("eta does not preserve the operations");
  return EtaWitness{std::move(target), std::move(table)};
}

EpsilonWitness epsilon_iso(const Poset& q) {
  DistLattice oq = o_object(q);
  std::vector<int> irr = join_irreducible_elements(oq);
  Poset target = join_irreducibles(oq);
  std::vector<int> table(q.size(), -1);
  std::vector<char> hit(irr.size(), 0);
  for (int x = 0; x < q.size(); ++x) {
    int elem = oq.index_of(q.down(x));
    auto it = std::lower_bound(irr.begin(), irr.end(), elem);
    if (it == irr.end() || *it != elem)
      throw std::logic_error("principal down-set is not join-irreducible");
    int pos = static_cast<int>(it - irr.begin());
    if (hit[pos]) throw std::logic_error("epsilon is not injective");
    hit[pos] = 1;
    table[x] = pos;
  }
  if (static_cast<int>(irr.size()) != q.size())
    throw std::logic_error("epsilon is not surjective");
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.leq(a, b) != target.leq(table[a], table[b]))
        throw std::logic_error("epsilon is not an order isomorphism");
  return EpsilonWitness{std::move(target), std::move(table), std::move(irr)};
}

}  // namespace latram
