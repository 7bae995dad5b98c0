#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latram/duality.hpp"
#include "latram/errors.hpp"
#include "oracles.hpp"

using namespace latram;

namespace {

DistLattice boolean4() {
  return DistLattice::down_set_lattice(Poset::antichain(2));
}

DistLattice chain_lattice(int elements) {
  return DistLattice::down_set_lattice(Poset::chain(elements - 1));
}

Poset v_poset() { return Poset::from_pairs(3, {{0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("objects round through the functors") {
  CHECK(are_isomorphic(j_object(chain_lattice(2)), Poset::antichain(1))
            .has_value());
  CHECK(are_isomorphic(j_object(boolean4()), Poset::antichain(2))
            .has_value());
  CHECK(o_object(Poset::antichain(1)) == chain_lattice(2));
  CHECK(o_object(Poset::antichain(2)) == boolean4());
  CHECK(o_object(v_poset()).size() == 5);
  CHECK(are_isomorphic(j_object(o_object(v_poset())), v_poset()).has_value());
}

TEST_CASE("epsilon is a poset isomorphism for every poset up to size 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 5)) {
      EpsilonWitness eps = epsilon_iso(q);
      CHECK(eps.target.size() == q.size());
      for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
          CHECK(q.leq(a, b) == eps.target.leq(eps.table[a], eps.table[b]));
    }
}

TEST_CASE("eta is a lattice isomorphism for lattices from posets up to 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 5)) {
      DistLattice l = o_object(q);
      EtaWitness eta = eta_iso(l);
      CHECK(eta.target.size() == l.size());
      for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y) {
          CHECK(eta.table[l.join(x, y)] ==
                eta.target.join(eta.table[x], eta.table[y]));
          CHECK(eta.table[l.meet(x, y)] ==
                eta.target.meet(eta.table[x], eta.table[y]));
        }
    }
}

TEST_CASE("eta is identity-shaped on naturally labeled canonical lattices") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 4)) {
      DistLattice l = o_object(q);
      EtaWitness eta = eta_iso(l);
      for (int x = 0; x < l.size(); ++x) CHECK(eta.table[x] == x);
    }
}

TEST_CASE("epsilon on the V poset picks out the join-irreducibles") {
  Poset v = v_poset();
  EpsilonWitness eps = epsilon_iso(v);
  DistLattice ov = o_object(v);
  // Irreducibles of O(V) are {0}, {1} and the full set.
  CHECK(eps.irreducible_elems ==
        std::vector<int>{ov.index_of(0b001), ov.index_of(0b010),
                         ov.index_of(0b111)});
}

TEST_CASE("dual of a surjection picks the fiber meet") {
  DistLattice b = boolean4();
  DistLattice c2 = chain_lattice(2);
  // Collapse atom b (element 2): the 2-chain's irreducible pulls back to
  // atom a; collapsing atom a instead pulls back to atom b.
  LatticeHom collapse_b = validate_homomorphism({0, 1, 0, 1}, b, c2, true);
  CHECK(j_morphism(collapse_b) == std::vector<int>{0});  // atom a is irr #0
  LatticeHom collapse_a = validate_homomorphism({0, 0, 1, 1}, b, c2, true);
  CHECK(j_morphism(collapse_a) == std::vector<int>{1});
  LatticeHom identity = validate_homomorphism({0, 1, 2, 3}, b, b, true);
  CHECK(j_morphism(identity) == std::vector<int>{0, 1});
}

TEST_CASE("dual of a poset map is the preimage homomorphism") {
  // Identity embedding gives the identity hom.
  Poset pt = Poset::antichain(1);
  LatticeHom id = o_morphism(pt, pt, {0});
  CHECK(id.map == std::vector<int>{0, 1});
  // Bottom point into the 2-chain: preimages are {}, {0}, {0}.
  Poset c2 = Poset::chain(2);
  LatticeHom f = o_morphism(pt, c2, {0});
  CHECK(f.source == chain_lattice(3));
  CHECK(f.target == chain_lattice(2));
  CHECK(f.map == std::vector<int>{0, 1, 1});
  CHECK(f.surjective);
  // Two-antichain into V as its minimal points: onto the 4-Boolean.
  LatticeHom g = o_morphism(Poset::antichain(2), v_poset(), {0, 1});
  CHECK(g.source == o_object(v_poset()));
  CHECK(g.target == boolean4());
  CHECK(g.surjective);
  CHECK(g.map == std::vector<int>{0, 1, 2, 3, 3});
  // Non-monotone maps are rejected.
  CHECK_THROWS_AS(o_morphism(c2, c2, {1, 0}), ValidationError);
}

TEST_CASE("contravariant functoriality on morphisms") {
  // J(g . f) = J(f) . J(g) over all composable surjections at small sizes.
  for (int n1 = 1; n1 <= 3; ++n1)
    for (const Poset& q1 : enumerate_posets_up_to_iso(n1, 3))
      for (int n2 = 1; n2 <= 3; ++n2)
        for (const Poset& q2 : enumerate_posets_up_to_iso(n2, 3))
          for (int n3 = 1; n3 <= 3; ++n3)
            for (const Poset& q3 : enumerate_posets_up_to_iso(n3, 3)) {
              DistLattice l = o_object(q1), k = o_object(q2),
                          m = o_object(q3);
              auto fs = enumerate_surjective_homomorphisms(l, k);
              auto gs = enumerate_surjective_homomorphisms(k, m);
              for (const LatticeHom& f : fs)
                for (const LatticeHom& g : gs) {
                  auto jf = j_morphism(f);
                  auto jg = j_morphism(g);
                  auto jgf = j_morphism(compose(g, f));
                  REQUIRE(jgf.size() == jg.size());
                  for (size_t y = 0; y < jg.size(); ++y)
                    CHECK(jgf[y] == jf[jg[y]]);
                }
            }
}

TEST_CASE("dual functoriality on poset embeddings") {
  // O(psi . phi) = O(phi) . O(psi) for embeddings between posets up to 4.
  for (int n1 = 1; n1 <= 3; ++n1)
    for (const Poset& p : enumerate_posets_up_to_iso(n1, 3))
      for (int n2 = 1; n2 <= 4; ++n2)
        for (const Poset& q : enumerate_posets_up_to_iso(n2, 4))
          for (int n3 = 1; n3 <= 4; ++n3)
            for (const Poset& r : enumerate_posets_up_to_iso(n3, 4)) {
              auto phis = enumerate_embeddings(p, q);
              auto psis = enumerate_embeddings(q, r);
              for (const auto& phi : phis)
                for (const auto& psi : psis) {
                  std::vector<int> comp(phi.size());
                  for (size_t i = 0; i < phi.size(); ++i)
                    comp[i] = psi[phi[i]];
                  LatticeHom ophi = o_morphism(p, q, phi);
                  LatticeHom opsi = o_morphism(q, r, psi);
                  LatticeHom ocomp = o_morphism(p, r, comp);
                  CHECK(compose(ophi, opsi).map == ocomp.map);
                }
            }
}

TEST_CASE("naturality squares for enumerated surjections") {
  // eta_K . f = O(J(f)) . eta_L at small sizes.
  for (int n1 = 1; n1 <= 3; ++n1)
    for (const Poset& q1 : enumerate_posets_up_to_iso(n1, 3))
      for (int n2 = 1; n2 <= 3; ++n2)
        for (const Poset& q2 : enumerate_posets_up_to_iso(n2, 3)) {
          DistLattice l = o_object(q1), k = o_object(q2);
          for (const LatticeHom& f :
               enumerate_surjective_homomorphisms(l, k)) {
            EtaWitness eta_l = eta_iso(l);
            EtaWitness eta_k = eta_iso(k);
            LatticeHom dual =
                o_morphism(j_object(k), j_object(l), j_morphism(f));
            REQUIRE(dual.source == eta_l.target);
            REQUIRE(dual.target == eta_k.target);
            for (int x = 0; x < l.size(); ++x)
              CHECK(eta_k.table[f.map[x]] == dual.map[eta_l.table[x]]);
          }
        }
}

TEST_CASE("surjections dualize to embeddings and embeddings to surjections") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (const Poset& q1 : enumerate_posets_up_to_iso(n1, 3))
      for (int n2 = 1; n2 <= 3; ++n2)
        for (const Poset& q2 : enumerate_posets_up_to_iso(n2, 3)) {
          DistLattice l = o_object(q1), k = o_object(q2);
          for (const LatticeHom& f : enumerate_surjective_homomorphisms(l, k))
            CHECK(is_embedding_table(j_object(k), j_object(l),
                                     j_morphism(f)));
          for (const auto& phi : enumerate_embeddings(q1, q2))
            CHECK(o_morphism(q1, q2, phi).surjective);
        }
}
