#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latram/errors.hpp"
#include "latram/lemmas.hpp"
#include "latram/ordered.hpp"
#include "oracles.hpp"

using namespace latram;

namespace {

DistLattice boolean4() {
  return DistLattice::down_set_lattice(Poset::antichain(2));
}

DistLattice chain_lattice(int elements) {
  return DistLattice::down_set_lattice(Poset::chain(elements - 1));
}

NaturalOrder b4_a_first() { return antilex_natural_order(boolean4(), {0, 1}); }
NaturalOrder b4_b_first() { return antilex_natural_order(boolean4(), {1, 0}); }

NaturalOrder chain_order(int elements) {
  DistLattice l = chain_lattice(elements);
  std::vector<int> seq(l.base().size());
  for (int i = 0; i < l.base().size(); ++i) seq[i] = i;
  return antilex_natural_order(l, seq);
}

LatticeHom collapse_b() {
  return validate_homomorphism({0, 1, 0, 1}, boolean4(), chain_lattice(2),
                               true);
}
LatticeHom collapse_a() {
  return validate_homomorphism({0, 0, 1, 1}, boolean4(), chain_lattice(2),
                               true);
}

}  // namespace

TEST_CASE("antilex order of chains is the lattice order") {
  NaturalOrder c3 = chain_order(3);
  CHECK(c3.by_rank == std::vector<int>{0, 1, 2});
  CHECK(enumerate_natural_orders(chain_lattice(3)).size() == 1);
}

TEST_CASE("antilex order of the Boolean lattice follows the atom order") {
  // a-first: empty, {a}, {b}, {a,b}; b-first swaps the middle two.
  CHECK(b4_a_first().by_rank == std::vector<int>{0, 1, 2, 3});
  CHECK(b4_b_first().by_rank == std::vector<int>{0, 2, 1, 3});
  CHECK(enumerate_natural_orders(boolean4()).size() == 2);
}

TEST_CASE("irreducible order must extend the lattice order") {
  CHECK_THROWS_AS(antilex_natural_order(chain_lattice(3), {1, 0}),
                  NotAnExtension);
}

TEST_CASE("natural orders extend the lattice order for all small lattices") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 4)) {
      DistLattice l = o_object(q);
      for (const NaturalOrder& no : enumerate_natural_orders(l))
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y)
            if (l.less(x, y)) CHECK(no.before(x, y));
    }
}

TEST_CASE("natural order recognition") {
  auto rec = is_natural_order(chain_lattice(3), {0, 1, 2});
  REQUIRE(rec.has_value());
  CHECK(*rec == std::vector<int>{0, 1});
  auto rec2 = is_natural_order(boolean4(), {0, 1, 2, 3});
  REQUIRE(rec2.has_value());
  CHECK(*rec2 == std::vector<int>{0, 1});
  // {a,b} must come last in any natural order of the Boolean lattice.
  CHECK(!is_natural_order(boolean4(), {0, 1, 3, 2}).has_value());
  // Recognition inverts construction on every small lattice and order.
  for (int n = 1; n <= 4; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 4)) {
      DistLattice l = o_object(q);
      for (const NaturalOrder& no : enumerate_natural_orders(l)) {
        auto irr = is_natural_order(l, no.by_rank);
        REQUIRE(irr.has_value());
        CHECK(*irr == no.irr_sequence);
      }
    }
}

TEST_CASE("residuals") {
  DistLattice b = boolean4();
  std::vector<bool> none(b.size(), false);
  for (int x = 0; x < b.size(); ++x) CHECK(residual_minus(b, x, none) == x);
  std::vector<bool> s(b.size(), false);
  s[2] = true;  // remove atom {b}
  CHECK(residual_minus(b, 3, s) == 1);  // {a,b} - {{b}} = {a}
  CHECK(residual_minus(b, 0, s) == 0);
  std::vector<bool> all(b.size(), true);
  CHECK(residual_minus(b, 3, all) == 0);
}

TEST_CASE("collapsed sets") {
  // Injective maps collapse nothing.
  DistLattice b = boolean4();
  LatticeHom id = validate_homomorphism({0, 1, 2, 3}, b, b, true);
  CHECK(collapsed_set_hom(id) == std::vector<bool>{false, false, false,
                                                   false});
  CHECK(collapsed_set_hom(collapse_b()) ==
        std::vector<bool>{false, false, true, true});
  // Natural surjection of the 3-chain collapsing the top two elements.
  DistLattice c3 = chain_lattice(3);
  LatticeHom nat = validate_homomorphism({0, 1, 1}, c3, chain_lattice(2),
                                         true);
  CHECK(collapsed_set_hom(nat) == std::vector<bool>{false, false, true});

  Congruence id_cong = make_congruence(b, {{0}, {1}, {2}, {3}});
  CHECK(collapsed_set_congruence(id_cong) ==
        std::vector<bool>{false, false, false, false});
  CHECK(collapsed_set_congruence(kernel(collapse_b())) ==
        std::vector<bool>{false, false, true, true});
  Congruence full = make_congruence(chain_lattice(2), {{0, 1}});
  CHECK(collapsed_set_congruence(full) == std::vector<bool>{false, true});
}

TEST_CASE("collapsed set of a congruence equals that of its surjection") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 4)) {
      DistLattice l = o_object(q);
      for (const Congruence& phi : enumerate_congruences(l))
        CHECK(collapsed_set_congruence(phi) ==
              collapsed_set_hom(quotient(l, phi).natural));
    }
}

TEST_CASE("positivity of homomorphisms") {
  // Isomorphisms between identically ordered copies are positive.
  DistLattice b = boolean4();
  LatticeHom id = validate_homomorphism({0, 1, 2, 3}, b, b, true);
  CHECK(is_positive_homomorphism(id, b4_a_first(), b4_a_first()).positive);
  // The identity between differently ordered copies is not; the atoms are
  // the violating pair.
  PositivityReport bad =
      is_positive_homomorphism(id, b4_a_first(), b4_b_first());
  CHECK(!bad.positive);
  CHECK(bad.counterexample == std::vector<int>{1, 2});
  // Collapsing atom b is positive for the a-first order.
  CHECK(is_positive_homomorphism(collapse_b(), b4_a_first(), chain_order(2))
            .positive);
  CHECK_THROWS_AS(
      is_positive_homomorphism(collapse_b(), chain_order(2), chain_order(2)),
      OrderMismatch);
}

TEST_CASE("positive surjection enumeration") {
  CHECK(enumerate_positive_surjections(chain_order(2), chain_order(2)).size()
        == 1);
  // Both collapses are positive for the a-first order: dually, the ordered
  // one-point poset embeds into the ordered two-antichain both ways.
  auto both = enumerate_positive_surjections(b4_a_first(), chain_order(2));
  REQUIRE(both.size() == 2);
  CHECK(both[0].hom.map == std::vector<int>{0, 0, 1, 1});
  CHECK(both[1].hom.map == std::vector<int>{0, 1, 0, 1});
  // Between differently ordered Boolean copies only the atom swap survives.
  auto cross = enumerate_positive_surjections(b4_a_first(), b4_b_first());
  REQUIRE(cross.size() == 1);
  CHECK(cross[0].hom.map == std::vector<int>{0, 2, 1, 3});
  // Same order: rigidity leaves the identity.
  auto rigid = enumerate_positive_surjections(b4_a_first(), b4_a_first());
  REQUIRE(rigid.size() == 1);
  CHECK(rigid[0].hom.map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("positive surjections match ordered embeddings in count") {
  // |Surj+(O(q1), O(q2))| = |ordered embeddings J(O(q2)) -> J(O(q1))| over
  // all order pairs at small sizes.
  for (int n1 = 1; n1 <= 3; ++n1)
    for (const Poset& q1 : enumerate_posets_up_to_iso(n1, 3))
      for (int n2 = 1; n2 <= 3; ++n2)
        for (const Poset& q2 : enumerate_posets_up_to_iso(n2, 3))
          for (const auto& e1 : linear_extensions(q1))
            for (const auto& e2 : linear_extensions(q2)) {
              NaturalOrder lo = ordered_o(e1);
              NaturalOrder ko = ordered_o(e2);
              CHECK(enumerate_positive_surjections(lo, ko).size() ==
                    enumerate_ordered_embeddings(e2, e1).size());
            }
}

TEST_CASE("positivity of congruences") {
  DistLattice b = boolean4();
  Congruence id = make_congruence(b, {{0}, {1}, {2}, {3}});
  CHECK(is_positive_congruence(id, b4_a_first()).positive);
  CHECK(is_positive_congruence(kernel(collapse_b()), b4_a_first()).positive);
}

TEST_CASE("every congruence is positive: residuals are constant per block") {
  // Every congruence of a finite distributive lattice identifies x with y
  // exactly when x - N and y - N coincide, so orientations can never mix.
  // The exhaustive search over all congruence/order pairs confirms both
  // facts, here over every O(q) with q up to size 3 plus O(3-antichain).
  std::vector<DistLattice> lattices;
  for (int n = 1; n <= 3; ++n)
    for (const Poset& q : enumerate_posets_up_to_iso(n, 3))
      lattices.push_back(o_object(q));
  lattices.push_back(o_object(Poset::antichain(3)));
  for (const DistLattice& l : lattices)
    for (const Congruence& phi : enumerate_congruences(l)) {
      const std::vector<bool> collapsed = collapsed_set_congruence(phi);
      for (const auto& block : phi.blocks) {
        const int base = residual_minus(l, block.front(), collapsed);
        for (int e : block) CHECK(residual_minus(l, e, collapsed) == base);
      }
      for (const NaturalOrder& no : enumerate_natural_orders(l))
        CHECK(is_positive_congruence(phi, no).positive);
    }
}

TEST_CASE("quotient natural orders") {
  // Identity congruence reproduces the order.
  NaturalOrder a = b4_a_first();
  Congruence id = make_congruence(a.lattice, {{0}, {1}, {2}, {3}});
  NaturalOrder qid = quotient_natural_order(make_positive_congruence(id, a));
  CHECK(qid.by_rank == a.by_rank);
  // Collapse-atom-b kernel: the quotient 2-chain in its only order.
  NaturalOrder q2 = quotient_natural_order(
      make_positive_congruence(kernel(collapse_b()), a));
  CHECK(q2.lattice == chain_lattice(2));
  CHECK(q2.by_rank == std::vector<int>{0, 1});
  // Interval congruence of the 4-chain.
  NaturalOrder c4 = chain_order(4);
  Congruence mid = make_congruence(c4.lattice, {{0, 1}, {2, 3}});
  NaturalOrder qmid =
      quotient_natural_order(make_positive_congruence(mid, c4));
  CHECK(qmid.lattice == chain_lattice(2));
}

TEST_CASE("ordered functors") {
  // J' restricts the order to the irreducibles.
  LinearOrderedPoset ja = ordered_j(b4_a_first());
  CHECK(ja.poset == Poset::antichain(2));
  CHECK(ja.positions == std::vector<int>{0, 1});
  LinearOrderedPoset jb = ordered_j(b4_b_first());
  CHECK(jb.positions == std::vector<int>{1, 0});
  // O' induces the antilex order.
  NaturalOrder roundtrip = ordered_o(ja);
  CHECK(roundtrip.lattice == boolean4());
  CHECK(roundtrip.by_rank == b4_a_first().by_rank);
}

TEST_CASE("duals of positive surjections are ordered embeddings") {
  PositiveHom f =
      make_positive_hom(collapse_b(), b4_a_first(), chain_order(2));
  OrderedPosetEmbedding emb = j_prime_morphism(f);
  CHECK(emb.map == std::vector<int>{0});  // the irreducible lands on atom a
  CHECK(emb.source.poset.size() == 1);
  CHECK(emb.target.poset.size() == 2);
}

TEST_CASE("duals of ordered embeddings are positive surjections") {
  // Bottom point into the ordered 2-chain.
  LinearOrderedPoset pt = linear_extensions(Poset::antichain(1)).front();
  LinearOrderedPoset c2 = linear_extensions(Poset::chain(2)).front();
  PositiveHom f = o_prime_morphism(make_ordered_embedding(pt, c2, {0}));
  CHECK(f.hom.source == chain_lattice(3));
  CHECK(f.hom.target == chain_lattice(2));
  CHECK(f.hom.map == std::vector<int>{0, 1, 1});
  // Two-antichain into V as its minimal points.
  Poset v = Poset::from_pairs(3, {{0, 2}, {1, 2}});
  LinearOrderedPoset va = linear_extensions(v).front();
  LinearOrderedPoset ac = linear_extensions(Poset::antichain(2)).front();
  PositiveHom g = o_prime_morphism(make_ordered_embedding(ac, va, {0, 1}));
  CHECK(g.hom.target == boolean4());
  CHECK(g.hom.surjective);
}

TEST_CASE("make_positive_hom rejects non-positive maps") {
  DistLattice b = boolean4();
  LatticeHom id = validate_homomorphism({0, 1, 2, 3}, b, b, true);
  CHECK_THROWS_AS(make_positive_hom(id, b4_a_first(), b4_b_first()),
                  NotPositive);
}

TEST_CASE("con_plus") {
  // Rigidity: only the identity congruence reproduces the lattice itself.
  NaturalOrder a = b4_a_first();
  auto self = con_plus(a, a);
  REQUIRE(self.size() == 1);
  CHECK(self[0].congruence.blocks.size() == 4);
  // The 4-chain has three cuts onto the 2-chain.
  auto cuts = con_plus(chain_order(4), chain_order(2));
  REQUIRE(cuts.size() == 3);
  for (const auto& pc : cuts) CHECK(pc.congruence.blocks.size() == 2);
  // Boolean-to-chain: kernels of the two positive collapses.
  auto bc = con_plus(a, chain_order(2));
  CHECK(bc.size() == 2);
}

TEST_CASE("lemma suite runs clean over all posets up to size 3") {
  std::vector<Poset> posets;
  for (int n = 1; n <= 3; ++n)
    for (Poset& p : enumerate_posets_up_to_iso(n, 3))
      posets.push_back(std::move(p));
  LemmaSuiteReport suite = run_lemma_suite(posets);
  CHECK(suite.violations.empty());
  CHECK(suite.checks["collapsed-image"] > 0);
  CHECK(suite.checks["dual-inverts"] > 0);
  CHECK(suite.checks["residual-image"] > 0);
  CHECK(suite.checks["kernel-positive"] > 0);
  CHECK(suite.checks["class-min-irreducible"] > 0);
  CHECK(suite.checks["quotient-order-natural"] > 0);
  CHECK(suite.checks["natural-surjection-positive"] > 0);
  CHECK(suite.checks["composition-positive"] > 0);
  LemmaSuiteReport tech = run_tech_suite(posets);
  CHECK(tech.violations.empty());
  CHECK(tech.checks["positive-dualizes-to-embedding"] > 0);
  CHECK(tech.checks["embedding-dualizes-to-positive"] > 0);
}
