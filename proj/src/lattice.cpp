#include "latram/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "latram/errors.hpp"

namespace latram {

DistLattice DistLattice::down_set_lattice(Poset base, bool allow_trivial) {
  if (base.size() == 0 && !allow_trivial)
    throw ValidationError(
        "one-element lattice (0 = 1) rejected; pass the trivial-lattice flag");
  DistLattice l;
  l.elems_ = down_sets(base);
  l.base_ = std::move(base);
  return l;
}

int DistLattice::index_of(Mask m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
  if (it == elems_.end() || *it != m) return -1;
  return static_cast<int>(it - elems_.begin());
}

namespace {

std::string triple_msg(const char* what, int x, int y, int z) {
  return std::string(what) + " fails at (" + std::to_string(x) + "," +
         std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

TableIngest from_tables(int n, const std::vector<std::vector<int>>& join,
                        const std::vector<std::vector<int>>& meet, int bottom,
                        int top, bool allow_trivial) {
  if (n < 1) throw ValidationError("operation tables need at least 1 element");
  if (n == 1 && !allow_trivial)
    throw ValidationError(
        "one-element lattice (0 = 1) rejected; pass the trivial-lattice flag");
  auto check_table = [&](const std::vector<std::vector<int>>& t,
                         const char* name) {
    if (static_cast<int>(t.size()) != n)
      throw ValidationError(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n)
        throw ValidationError(std::string(name) +
                              " table has a wrong-length row");
      for (int v : row)
        if (v < 0 || v >= n)
          throw ValidationError(std::string(name) +
                                " table entry out of range");
    }
  };
  check_table(join, "join");
  check_table(meet, "meet");
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    throw ValidationError("bottom/top index out of range");

  for (int x = 0; x < n; ++x) {
    if (join[x][x] != x)
      throw NotALattice("join is not idempotent at " + std::to_string(x),
                        "idempotence", {x});
    if (meet[x][x] != x)
      throw NotALattice("meet is not idempotent at " + std::to_string(x),
                        "idempotence", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (join[x][y] != join[y][x])
        throw NotALattice(triple_msg("join commutativity", x, y, y),
                          "commutativity", {x, y});
      if (meet[x][y] != meet[y][x])
        throw NotALattice(triple_msg("meet commutativity", x, y, y),
                          "commutativity", {x, y});
      if (join[x][meet[x][y]] != x || meet[x][join[x][y]] != x)
        throw NotALattice(triple_msg("absorption", x, y, y), "absorption",
                          {x, y});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (join[join[x][y]][z] != join[x][join[y][z]])
          throw NotALattice(triple_msg("join associativity", x, y, z),
                            "associativity", {x, y, z});
        if (meet[meet[x][y]][z] != meet[x][meet[y][z]])
          throw NotALattice(triple_msg("meet associativity", x, y, z),
                            "associativity", {x, y, z});
      }
  for (int x = 0; x < n; ++x)
    if (join[bottom][x] != x || meet[top][x] != x)
      throw NotBounded("element " + std::to_string(x) +
                       " is not between bottom and top");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]])
          throw NotDistributive(triple_msg("distributivity", x, y, z),
                                {x, y, z});

  // The table order: x <= y iff x v y = y.
  auto raw_leq = [&](int x, int y) { return join[x][y] == y; };
  auto lower_covers = [&](int x) {
    std::vector<int> covers;
    for (int y = 0; y < n; ++y) {
      if (y == x || !raw_leq(y, x)) continue;
      bool maximal = true;
      for (int z = 0; z < n && maximal; ++z)
        if (z != x && z != y && raw_leq(y, z) && raw_leq(z, x)) maximal = false;
      if (maximal) covers.push_back(y);
    }
    return covers;
  };
  std::vector<int> irr;
  for (int x = 0; x < n; ++x) {
    if (x == bottom) continue;
    if (lower_covers(x).size() == 1) irr.push_back(x);
  }

  const int m = static_cast<int>(irr.size());
  std::vector<std::pair<int, int>> base_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (raw_leq(irr[i], irr[j])) base_pairs.emplace_back(i, j);
  Poset base = Poset::from_pairs(m, base_pairs, m == 0);
  DistLattice canon = DistLattice::down_set_lattice(std::move(base), n == 1);

  // Re-encode: x -> its down-set of join-irreducibles. Birkhoff guarantees a
  // bijection preserving both operations once the checks above passed, so any
  // failure past this point is an engine defect.
  std::vector<int> reindex(n, -1);
  std::vector<char> hit(canon.size(), 0);
  for (int x = 0; x < n; ++x) {
    Mask mask = 0;
    for (int i = 0; i < m; ++i)
      if (raw_leq(irr[i], x)) mask |= bit(i);
    int idx = canon.index_of(mask);
    if (idx < 0 || hit[idx])
      throw std::logic_error("canonical re-encoding is not a bijection");
    hit[idx] = 1;
    reindex[x] = idx;
  }
  if (canon.size() != n)
    throw std::logic_error("canonical re-encoding misses down-sets");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (reindex[join[x][y]] != canon.join(reindex[x], reindex[y]) ||
          reindex[meet[x][y]] != canon.meet(reindex[x], reindex[y]))
        throw std::logic_error("canonical re-encoding breaks an operation");
    }
  return TableIngest{std::move(canon), std::move(reindex)};
}

std::vector<int> join_irreducible_elements(const DistLattice& l) {
  std::vector<int> irr;
  for (int x = 1; x < l.size(); ++x) {
    int covers = 0;
    for (int y = 0; y < l.size(); ++y) {
      if (!l.less(y, x)) continue;
      bool maximal = true;
      for (int z = 0; z < l.size() && maximal; ++z)
        if (l.less(y, z) && l.less(z, x)) maximal = false;
      if (maximal) ++covers;
    }
    if (covers == 1) irr.push_back(x);
  }
  return irr;
}

Poset join_irreducibles(const DistLattice& l) {
  const std::vector<int> irr = join_irreducible_elements(l);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(irr.size()); ++i)
    for (int j = 0; j < static_cast<int>(irr.size()); ++j)
      if (l.leq(irr[i], irr[j])) pairs.emplace_back(i, j);
  return Poset::from_pairs(static_cast<int>(irr.size()), pairs, irr.empty());
}

Mask canonical_representation(const DistLattice& l, int x) {
  const std::vector<int> irr = join_irreducible_elements(l);
  Mask delta = 0;
  for (int i = 0; i < static_cast<int>(irr.size()); ++i)
    if (l.leq(irr[i], x)) delta |= bit(i);
  return delta;
}

LatticeHom validate_homomorphism(const std::vector<int>& map,
                                 const DistLattice& source,
                                 const DistLattice& target,
                                 bool require_surjective) {
  if (static_cast<int>(map.size()) != source.size())
    throw ValidationError("map length does not match source size");
  for (int v : map)
    if (v < 0 || v >= target.size())
      throw ValidationError("map value out of target range");
  if (map[source.bottom()] != target.bottom())
    throw NotHomomorphism("bottom is not preserved", "bottom",
                          source.bottom(), source.bottom());
  if (map[source.top()] != target.top())
    throw NotHomomorphism("top is not preserved", "top", source.top(),
                          source.top());
  for (int x = 0; x < source.size(); ++x)
    for (int y = x; y < source.size(); ++y) {
      if (map[source.join(x, y)] != target.join(map[x], map[y]))
        throw NotHomomorphism("join of (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") is not preserved",
                              "join", x, y);
      if (map[source.meet(x, y)] != target.meet(map[x], map[y]))
        throw NotHomomorphism("meet of (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") is not preserved",
                              "meet", x, y);
    }
  std::vector<char> hit(target.size(), 0);
  for (int v : map) hit[v] = 1;
  bool surjective =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (require_surjective && !surjective)
    throw NotSurjective("homomorphism is not surjective");
  return LatticeHom{source, target, map, surjective};
}

namespace {

struct HomSearch {
  const DistLattice& l;
  const DistLattice& k;
  // For each non-bottom element: one pair of strictly smaller elements whose
  // join it is (empty when join-irreducible), plus all such pairs for the
  // completeness check.
  std::vector<std::vector<std::pair<int, int>>> join_pairs;
  std::vector<int> map;
  std::vector<int> hits;  // per target element, how many preimages so far
  int unhit;
  std::vector<LatticeHom>* out;

  void run() {
    map.assign(1, k.bottom());
    hits.assign(k.size(), 0);
    hits[k.bottom()] = 1;
    unhit = k.size() - 1;
    rec(1);
  }

  bool consistent(int m, int v) const {
    for (int y = 0; y < m; ++y) {
      int mt = l.meet(y, m);  // index strictly below m, already assigned
      if (map[mt] != k.meet(map[y], v)) return false;
    }
    for (const auto& [y, z] : join_pairs[m])
      if (k.join(map[y], map[z]) != v) return false;
    return true;
  }

  void rec(int m) {
    if (m == l.size()) {
      if (unhit == 0)
        out->push_back(LatticeHom{l, k, map, true});
      return;
    }
    if (l.size() - m < unhit) return;  // cannot become surjective
    auto try_value = [&](int v) {
      if (!consistent(m, v)) return;
      map.push_back(v);
      if (hits[v]++ == 0) --unhit;
      rec(m + 1);
      if (--hits[v] == 0) ++unhit;
      map.pop_back();
    };
    if (m == l.top()) {
      try_value(k.top());
    } else if (!join_pairs[m].empty()) {
      const auto& [y, z] = join_pairs[m].front();
      try_value(k.join(map[y], map[z]));
    } else {
      for (int v = 0; v < k.size(); ++v) try_value(v);
    }
  }
};

}  // namespace

std::vector<LatticeHom> enumerate_surjective_homomorphisms(
    const DistLattice& l, const DistLattice& k) {
  std::vector<LatticeHom> out;
  if (l.trivial() || k.trivial()) {
    // A {0,1}-homomorphism out of (or onto) the one-element lattice exists
    // only between two one-element lattices.
    if (l.trivial() && k.trivial())
      out.push_back(LatticeHom{l, k, {0}, true});
    return out;
  }
  std::vector<std::vector<std::pair<int, int>>> join_pairs(l.size());
  for (int y = 0; y < l.size(); ++y)
    for (int z = y + 1; z < l.size(); ++z) {
      int j = l.join(y, z);
      if (j != y && j != z) join_pairs[j].emplace_back(y, z);
    }
  HomSearch search{l, k, std::move(join_pairs), {}, {}, 0, &out};
  search.run();
  return out;
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  if (f.target != g.source)
    throw ValidationError("homomorphisms are not composable");
  std::vector<int> map(f.map.size());
  for (size_t x = 0; x < f.map.size(); ++x) map[x] = g.map[f.map[x]];
  return validate_homomorphism(map, f.source, g.target, false);
}

Congruence make_congruence(DistLattice l,
                           const std::vector<std::vector<int>>& blocks) {
  const int n = l.size();
  std::vector<int> block_of(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int e : blocks[b]) {
      if (e < 0 || e >= n || block_of[e] != -1)
        throw ValidationError("blocks are not a partition of the lattice");
      block_of[e] = b;
    }
  for (int e = 0; e < n; ++e)
    if (block_of[e] == -1)
      throw ValidationError("blocks are not a partition of the lattice");

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (block_of[x] != block_of[y]) continue;
      for (int c = 0; c < n; ++c) {
        if (block_of[l.join(x, c)] != block_of[l.join(y, c)] ||
            block_of[l.meet(x, c)] != block_of[l.meet(y, c)])
          throw ValidationError("partition is not compatible with join/meet");
      }
    }

  // Consequences of compatibility; failing them is an engine defect.
  std::vector<std::vector<int>> sorted = blocks;
  std::vector<int> mins;
  for (auto& block : sorted) {
    std::sort(block.begin(), block.end());
    int min_elem = -1;
    for (int cand : block) {
      bool below_all = true;
      for (int e : block)
        if (!l.leq(cand, e)) below_all = false;
      if (below_all) {
        min_elem = cand;
        break;
      }
    }
    if (min_elem < 0)
      throw std::logic_error("congruence class has no minimum element");
    mins.push_back(min_elem);
    for (int x : block)
      for (int y : block) {
        if (block_of[l.join(x, y)] != block_of[x] ||
            block_of[l.meet(x, y)] != block_of[x])
          throw std::logic_error("congruence class is not a sublattice");
        for (int z = 0; z < n; ++z)
          if (l.leq(x, z) && l.leq(z, y) && block_of[z] != block_of[x])
            throw std::logic_error("congruence class is not order-convex");
      }
  }

  std::vector<int> order(sorted.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return mins[a] < mins[b]; });
  Congruence phi;
  phi.lattice = std::move(l);
  phi.block_of.assign(n, -1);
  for (int b : order) {
    phi.class_min.push_back(mins[b]);
    phi.blocks.push_back(std::move(sorted[b]));
  }
  for (int b = 0; b < static_cast<int>(phi.blocks.size()); ++b)
    for (int e : phi.blocks[b]) phi.block_of[e] = b;
  return phi;
}

Congruence kernel(const LatticeHom& f) {
  std::vector<std::vector<int>> fibers(f.target.size());
  for (int x = 0; x < f.source.size(); ++x) fibers[f.map[x]].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& fiber : fibers)
    if (!fiber.empty()) blocks.push_back(std::move(fiber));
  return make_congruence(f.source, blocks);
}

namespace {

// Checks the constraints that become decidable once element m is assigned:
// every same-block pair and side element drawn from the prefix whose joins
// and meets also lie in the prefix.
bool prefix_compatible(const DistLattice& l, const std::vector<int>& block_of,
                       int m) {
  auto same = [&](int a, int b) { return block_of[a] == block_of[b]; };
  for (int x = 0; x < m; ++x) {
    if (!same(x, m)) continue;
    for (int c = 0; c <= m; ++c) {
      int u = l.join(x, c), v = l.join(m, c);
      if (u <= m && v <= m && !same(u, v)) return false;
      if (!same(l.meet(x, c), l.meet(m, c))) return false;
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      if (!same(x, y)) continue;
      {
        int u = l.join(x, m), v = l.join(y, m);
        if (u <= m && v <= m && !same(u, v)) return false;
        if (!same(l.meet(x, m), l.meet(y, m))) return false;
      }
      for (int c = 0; c < m; ++c) {
        int u = l.join(x, c), v = l.join(y, c);
        if (std::max(u, v) == m && u <= m && v <= m && !same(u, v))
          return false;
      }
    }
  return true;
}

void congruences_rec(const DistLattice& l, std::vector<int>& block_of,
                     int m, int nblocks,
                     std::vector<std::vector<std::vector<int>>>& out) {
  if (m == l.size()) {
    std::vector<std::vector<int>> blocks(nblocks);
    for (int e = 0; e < l.size(); ++e) blocks[block_of[e]].push_back(e);
    out.push_back(std::move(blocks));
    return;
  }
  for (int b = 0; b <= nblocks; ++b) {
    block_of[m] = b;
    if (prefix_compatible(l, block_of, m))
      congruences_rec(l, block_of, m + 1, std::max(nblocks, b + 1), out);
  }
  block_of[m] = -1;
}

}  // namespace

std::vector<Congruence> enumerate_congruences(const DistLattice& l,
                                              int size_bound) {
  if (size_bound < 0) size_bound = config::congruence_lattice_bound();
  if (l.size() > size_bound)
    throw BoundExceeded("congruence enumeration bound is " +
                        std::to_string(size_bound) + ", lattice has " +
                        std::to_string(l.size()) + " elements");
  std::vector<std::vector<std::vector<int>>> raw;
  std::vector<int> block_of(l.size(), -1);
  congruences_rec(l, block_of, 0, 0, raw);
  std::vector<Congruence> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.push_back(make_congruence(l, blocks));
  return out;
}

bool refines(const Congruence& psi, const Congruence& phi) {
  if (psi.lattice != phi.lattice)
    throw ValidationError("congruences live on different lattices");
  for (const auto& block : psi.blocks)
    for (int e : block)
      if (phi.block_of[e] != phi.block_of[block.front()]) return false;
  return true;
}

Quotient quotient(const DistLattice& l, const Congruence& phi) {
  if (phi.lattice != l)
    throw ValidationError("congruence does not belong to the lattice");
  const int nb = static_cast<int>(phi.blocks.size());
  std::vector<std::vector<int>> join(nb, std::vector<int>(nb));
  std::vector<std::vector<int>> meet(nb, std::vector<int>(nb));
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      join[a][b] = phi.block_of[l.join(phi.class_min[a], phi.class_min[b])];
      meet[a][b] = phi.block_of[l.meet(phi.class_min[a], phi.class_min[b])];
    }
  TableIngest ti = from_tables(nb, join, meet, phi.block_of[l.bottom()],
                               phi.block_of[l.top()], true);
  std::vector<int> natural(l.size());
  for (int x = 0; x < l.size(); ++x) natural[x] = ti.reindex[phi.block_of[x]];
  LatticeHom nat = validate_homomorphism(natural, l, ti.lattice, true);

  // The minimum of every join-irreducible class must be join-irreducible in
  // the source lattice.
  std::vector<int> canon_to_block(nb);
  for (int b = 0; b < nb; ++b) canon_to_block[ti.reindex[b]] = b;
  const std::vector<int> src_irr = join_irreducible_elements(l);
  for (int e : join_irreducible_elements(ti.lattice)) {
    int min_elem = phi.class_min[canon_to_block[e]];
    if (!std::binary_search(src_irr.begin(), src_irr.end(), min_elem))
      throw std::logic_error(
          "minimum of a join-irreducible class is not join-irreducible");
  }
  return Quotient{ti.lattice, std::move(nat)};
}

}  // namespace latram
