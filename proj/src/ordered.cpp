#include "latram/ordered.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "latram/errors.hpp"

namespace latram {

namespace {

// The unique maximal element of a principal down-set mask.
int principal_generator(const Poset& base, Mask m) {
  int gen = -1;
  int count = 0;
  for_each_bit(m, [&](int b) {
    if ((base.up(b) & m) == bit(b)) {
      gen = b;
      ++count;
    }
  });
  if (count != 1)
    throw std::logic_error("down-set is not principal");
  return gen;
}

std::vector<int> ranks_of(const std::vector<int>& sequence, int n) {
  std::vector<int> rank(n, -1);
  for (int r = 0; r < static_cast<int>(sequence.size()); ++r) {
    int b = sequence[r];
    if (b < 0 || b >= n || rank[b] != -1)
      throw ValidationError("irreducible order is not a permutation");
    rank[b] = r;
  }
  if (static_cast<int>(sequence.size()) != n)
    throw ValidationError("irreducible order has the wrong length");
  return rank;
}

}  // namespace

NaturalOrder antilex_natural_order(DistLattice l,
                                   const std::vector<int>& irr_sequence) {
  const Poset& base = l.base();
  std::vector<int> rank_of = ranks_of(irr_sequence, base.size());
  for (int a = 0; a < base.size(); ++a)
    for (int b = 0; b < base.size(); ++b)
      if (base.less(a, b) && rank_of[a] > rank_of[b])
        throw NotAnExtension(
            "irreducible order does not extend the lattice order on the "
            "irreducibles",
            a, b);

  NaturalOrder no;
  no.keys.resize(l.size());
  for (int x = 0; x < l.size(); ++x) {
    Mask key = 0;
    for_each_bit(l.elem_mask(x), [&](int b) { key |= bit(rank_of[b]); });
    no.keys[x] = key;
  }
  // A natural order extends the lattice order; anything else is a defect.
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.less(x, y) && no.keys[x] >= no.keys[y])
        throw std::logic_error("antilex order does not extend lattice order");

  no.rank.resize(l.size());
  no.by_rank.resize(l.size());
  std::vector<int> elems(l.size());
  for (int x = 0; x < l.size(); ++x) elems[x] = x;
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return no.keys[a] < no.keys[b]; });
  for (int r = 0; r < l.size(); ++r) {
    no.by_rank[r] = elems[r];
    no.rank[elems[r]] = r;
  }
  no.lattice = std::move(l);
  no.irr_sequence = irr_sequence;
  return no;
}

std::vector<NaturalOrder> enumerate_natural_orders(const DistLattice& l) {
  std::vector<NaturalOrder> out;
  for (const auto& ext : linear_extensions(l.base()))
    out.push_back(antilex_natural_order(l, ext.by_rank()));
  return out;
}

std::optional<std::vector<int>> is_natural_order(
    const DistLattice& l, const std::vector<int>& elems_in_order) {
  if (static_cast<int>(elems_in_order.size()) != l.size()) return std::nullopt;
  {
    std::vector<char> seen(l.size(), 0);
    for (int e : elems_in_order) {
      if (e < 0 || e >= l.size() || seen[e]) return std::nullopt;
      seen[e] = 1;
    }
  }
  // Restrict the candidate to the irreducibles (the principal down-sets).
  std::vector<int> irr_sequence;
  for (int e : elems_in_order) {
    Mask m = l.elem_mask(e);
    if (m == 0) continue;
    int gen = -1;
    for_each_bit(m, [&](int b) {
      if ((l.base().up(b) & m) == bit(b)) gen = gen == -1 ? b : -2;
    });
    if (gen >= 0 && l.base().down(gen) == m) irr_sequence.push_back(gen);
  }
  if (static_cast<int>(irr_sequence.size()) != l.base().size())
    return std::nullopt;
  NaturalOrder no;
  try {
    no = antilex_natural_order(l, irr_sequence);
  } catch (const NotAnExtension&) {
    return std::nullopt;
  }
  if (no.by_rank != elems_in_order) return std::nullopt;
  return irr_sequence;
}

int residual_minus(const DistLattice& l, int x, const std::vector<bool>& s) {
  Mask acc = 0;
  for_each_bit(l.elem_mask(x), [&](int b) {
    int irr_elem = l.index_of(l.base().down(b));
    if (!s[irr_elem]) acc |= l.base().down(b);
  });
  int out = l.index_of(acc);
  if (out < 0) throw std::logic_error("residual left the lattice");
  return out;
}

std::vector<bool> collapsed_set_hom(const LatticeHom& f) {
  const int n = f.source.size();
  std::vector<bool> collapsed(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.source.less(y, x) && f.map[y] == f.map[x]) {
        collapsed[x] = true;
        break;
      }
  return collapsed;
}

std::vector<bool> collapsed_set_congruence(const Congruence& phi) {
  const int n = phi.lattice.size();
  std::vector<bool> collapsed(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi.lattice.less(y, x) && phi.same(x, y)) {
        collapsed[x] = true;
        break;
      }
  return collapsed;
}

PositivityReport is_positive_homomorphism(const LatticeHom& f,
                                          const NaturalOrder& source_order,
                                          const NaturalOrder& target_order) {
  if (source_order.lattice != f.source || target_order.lattice != f.target)
    throw OrderMismatch("orders do not belong to the homomorphism endpoints");
  const std::vector<bool> collapsed = collapsed_set_hom(f);
  std::vector<int> residual(f.source.size());
  for (int x = 0; x < f.source.size(); ++x)
    residual[x] = residual_minus(f.source, x, collapsed);
  // All pairs, including equal residuals (which force equal images).
  for (int x = 0; x < f.source.size(); ++x)
    for (int y = 0; y < f.source.size(); ++y)
      if (source_order.before_eq(residual[x], residual[y]) &&
          !target_order.before_eq(f.map[x], f.map[y]))
        return PositivityReport{false, {x, y}};
  return PositivityReport{true, {}};
}

PositivityReport is_positive_congruence(const Congruence& phi,
                                        const NaturalOrder& order) {
  if (order.lattice != phi.lattice)
    throw OrderMismatch("order does not belong to the congruence's lattice");
  const std::vector<bool> collapsed = collapsed_set_congruence(phi);
  std::vector<int> residual(phi.lattice.size());
  for (int x = 0; x < phi.lattice.size(); ++x)
    residual[x] = residual_minus(phi.lattice, x, collapsed);
  const int nb = static_cast<int>(phi.blocks.size());
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b) {
      std::pair<int, int> fwd{-1, -1}, bwd{-1, -1};
      for (int x : phi.blocks[a])
        for (int y : phi.blocks[b]) {
          if (order.before(residual[x], residual[y]) && fwd.first < 0)
            fwd = {x, y};
          if (order.before(residual[y], residual[x]) && bwd.first < 0)
            bwd = {x, y};
        }
      if (fwd.first >= 0 && bwd.first >= 0)
        return PositivityReport{
            false, {a, b, fwd.first, fwd.second, bwd.first, bwd.second}};
    }
  return PositivityReport{true, {}};
}

PositiveHom make_positive_hom(LatticeHom hom, NaturalOrder source_order,
                              NaturalOrder target_order) {
  if (!hom.surjective)
    throw NotSurjective("positive homomorphisms must be surjective here");
  PositivityReport report =
      is_positive_homomorphism(hom, source_order, target_order);
  if (!report.positive)
    throw NotPositive("homomorphism is not positive; violating pair (" +
                      std::to_string(report.counterexample[0]) + "," +
                      std::to_string(report.counterexample[1]) + ")");
  std::vector<bool> collapsed = collapsed_set_hom(hom);
  return PositiveHom{std::move(hom), std::move(source_order),
                     std::move(target_order), std::move(collapsed)};
}

PositiveCongruence make_positive_congruence(Congruence phi,
                                            NaturalOrder order) {
  PositivityReport report = is_positive_congruence(phi, order);
  if (!report.positive)
    throw NotPositive("congruence is not positive; mixed orientation between "
                      "blocks " +
                      std::to_string(report.counterexample[0]) + " and " +
                      std::to_string(report.counterexample[1]));
  std::vector<bool> collapsed = collapsed_set_congruence(phi);
  return PositiveCongruence{std::move(phi), std::move(order),
                            std::move(collapsed)};
}

NaturalOrder quotient_natural_order(const PositiveCongruence& phi) {
  const Congruence& cong = phi.congruence;
  const DistLattice& l = phi.order.lattice;
  Quotient q = quotient(l, cong);

  const int nb = static_cast<int>(cong.blocks.size());
  std::vector<int> block_order(nb);
  for (int b = 0; b < nb; ++b) block_order[b] = b;
  std::vector<int> res_key(nb);
  for (int b = 0; b < nb; ++b)
    res_key[b] =
        phi.order.keys[residual_minus(l, cong.class_min[b], phi.collapsed)];
  std::sort(block_order.begin(), block_order.end(),
            [&](int a, int b) { return res_key[a] < res_key[b]; });
  for (int i = 0; i + 1 < nb; ++i)
    if (res_key[block_order[i]] == res_key[block_order[i + 1]])
      throw std::logic_error("residuals do not order the blocks strictly");

  std::vector<int> elems_in_order(nb);
  for (int r = 0; r < nb; ++r)
    elems_in_order[r] = q.natural.map[cong.class_min[block_order[r]]];
  auto irr_sequence = is_natural_order(q.lattice, elems_in_order);
  if (!irr_sequence)
    throw std::logic_error("quotient order of a positive congruence is not "
                           "natural");
  return antilex_natural_order(q.lattice, *irr_sequence);
}

LinearOrderedPoset ordered_j(const NaturalOrder& lo) {
  return make_linear_ordered(lo.lattice.base(),
                             ranks_of(lo.irr_sequence, lo.lattice.base().size()));
}

NaturalOrder ordered_o(const LinearOrderedPoset& q) {
  return antilex_natural_order(o_object(q.poset), q.by_rank());
}

namespace {

// Base-indexed version of the dual map: K.base element -> L.base element.
std::vector<int> j_morphism_base(const LatticeHom& f) {
  const std::vector<int> irr_l = join_irreducible_elements(f.source);
  const std::vector<int> irr_k = join_irreducible_elements(f.target);
  const std::vector<int> table = j_morphism(f);
  std::vector<int> base_table(f.target.base().size(), -1);
  for (int yi = 0; yi < static_cast<int>(irr_k.size()); ++yi) {
    int b = principal_generator(f.target.base(), f.target.elem_mask(irr_k[yi]));
    int a = principal_generator(f.source.base(),
                                f.source.elem_mask(irr_l[table[yi]]));
    base_table[b] = a;
  }
  return base_table;
}

}  // namespace

OrderedPosetEmbedding j_prime_morphism(const PositiveHom& f) {
  return make_ordered_embedding(ordered_j(f.target_order),
                                ordered_j(f.source_order),
                                j_morphism_base(f.hom));
}

PositiveHom o_prime_morphism(const OrderedPosetEmbedding& phi) {
  LatticeHom f = o_morphism(phi.source.poset, phi.target.poset, phi.map);
  NaturalOrder so = ordered_o(phi.target);
  NaturalOrder to = ordered_o(phi.source);
  try {
    return make_positive_hom(std::move(f), std::move(so), std::move(to));
  } catch (const NotPositive&) {
    // Theorem-backed invariant: the dual of an ordered embedding is positive.
    throw std::logic_error("dual of an ordered embedding failed positivity");
  }
}

std::vector<PositiveHom> enumerate_positive_surjections(
    const NaturalOrder& lo, const NaturalOrder& ko) {
  std::vector<PositiveHom> out;
  for (LatticeHom& f : enumerate_surjective_homomorphisms(lo.lattice,
                                                          ko.lattice)) {
    if (is_positive_homomorphism(f, lo, ko).positive)
      out.push_back(make_positive_hom(std::move(f), lo, ko));
  }
  return out;
}

bool ordered_lattices_isomorphic(const NaturalOrder& a,
                                 const NaturalOrder& b) {
  if (a.lattice.size() != b.lattice.size()) return false;
  std::vector<int> map(a.lattice.size());
  for (int r = 0; r < a.lattice.size(); ++r) map[a.by_rank[r]] = b.by_rank[r];
  for (int x = 0; x < a.lattice.size(); ++x)
    for (int y = 0; y < a.lattice.size(); ++y)
      if (map[a.lattice.join(x, y)] != b.lattice.join(map[x], map[y]) ||
          map[a.lattice.meet(x, y)] != b.lattice.meet(map[x], map[y]))
        return false;
  return true;
}

std::vector<PositiveCongruence> con_plus(const NaturalOrder& no,
                                         const NaturalOrder& ko) {
  std::vector<PositiveCongruence> out;
  for (Congruence& phi : enumerate_congruences(no.lattice)) {
    if (!is_positive_congruence(phi, no).positive) continue;
    PositiveCongruence pc = make_positive_congruence(std::move(phi), no);
    if (ordered_lattices_isomorphic(quotient_natural_order(pc), ko))
      out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace latram
