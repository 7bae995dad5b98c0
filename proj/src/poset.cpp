#include "latram/poset.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <queue>
#include <string>

#include "latram/errors.hpp"

namespace latram {

namespace {

// Shortest path a -> b in the digraph given by `pairs`, for cycle reporting.
std::vector<int> bfs_path(int n, const std::vector<std::pair<int, int>>& pairs,
                          int a, int b) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [i, j] : pairs)
    if (i != j) adj[i].push_back(j);
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == b) break;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        prev[w] = v;
        q.push(w);
      }
  }
  std::vector<int> path;
  for (int v = b; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                        bool allow_empty) {
  if (n < 0) throw ValidationError("element count must be nonnegative");
  if (n == 0 && !allow_empty)
    throw ValidationError("empty poset rejected; pass the empty-poset flag");
  if (n > kMaxPosetElements)
    throw BoundExceeded("poset size " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxPosetElements));
  Poset p;
  p.n_ = n;
  p.up_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up_[i] = bit(i);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ValidationError("relation pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
    p.up_[i] |= bit(j);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((p.up_[i] >> k) & 1) p.up_[i] |= p.up_[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) {
        std::vector<int> cycle = bfs_path(n, pairs, i, j);
        std::vector<int> back = bfs_path(n, pairs, j, i);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        throw AntisymmetryViolation(
            "antisymmetry violated: elements " + std::to_string(i) + " and " +
                std::to_string(j) + " lie on a cycle",
            cycle);
      }
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for_each_bit(p.up_[i], [&](int j) { p.down_[j] |= bit(i); });
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(n, pairs, n == 0);
}

Poset Poset::antichain(int n) { return from_pairs(n, {}, n == 0); }

bool Poset::is_down_set(Mask m) const {
  bool ok = true;
  for_each_bit(m, [&](int b) {
    if ((down_[b] & m) != down_[b]) ok = false;
  });
  return ok;
}

Mask Poset::down_closure(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](int b) { out |= down_[b]; });
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      // b covers a iff nothing sits strictly between.
      Mask between = up_[a] & down_[b] & ~bit(a) & ~bit(b);
      if (between == 0) covers.emplace_back(a, b);
    }
  return covers;
}

Poset Poset::induced(const std::vector<int>& elems) const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    for (int j = 0; j < static_cast<int>(elems.size()); ++j)
      if (leq(elems[i], elems[j])) pairs.emplace_back(i, j);
  return from_pairs(static_cast<int>(elems.size()), pairs, elems.empty());
}

std::vector<std::pair<int, int>> Poset::leq_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (leq(i, j)) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<int> LinearOrderedPoset::by_rank() const {
  std::vector<int> elems(positions.size());
  for (int i = 0; i < static_cast<int>(positions.size()); ++i)
    elems[positions[i]] = i;
  return elems;
}

LinearOrderedPoset make_linear_ordered(Poset p, std::vector<int> positions) {
  const int n = p.size();
  if (static_cast<int>(positions.size()) != n)
    throw ValidationError("order array length does not match element count");
  std::vector<char> seen(n, 0);
  for (int pos : positions) {
    if (pos < 0 || pos >= n || seen[pos])
      throw ValidationError("order array is not a permutation of 0..n-1");
    seen[pos] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(a, b) && positions[a] > positions[b])
        throw NotAnExtension("linear order does not extend the poset order",
                             a, b);
  return LinearOrderedPoset{std::move(p), std::move(positions)};
}

bool is_embedding_table(const Poset& a, const Poset& c,
                        const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.size()) return false;
  for (int v : map)
    if (v < 0 || v >= c.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      if (i != j && map[i] == map[j]) return false;
      if (a.leq(i, j) != c.leq(map[i], map[j])) return false;
    }
  return true;
}

bool is_ordered_embedding_table(const LinearOrderedPoset& a,
                                const LinearOrderedPoset& c,
                                const std::vector<int>& map) {
  if (!is_embedding_table(a.poset, c.poset, map)) return false;
  for (int i = 0; i < a.poset.size(); ++i)
    for (int j = 0; j < a.poset.size(); ++j)
      if (a.before(i, j) != c.before(map[i], map[j])) return false;
  return true;
}

PosetEmbedding make_poset_embedding(Poset a, Poset c, std::vector<int> map) {
  if (!is_embedding_table(a, c, map))
    throw ValidationError("map is not a poset embedding");
  return PosetEmbedding{std::move(a), std::move(c), std::move(map)};
}

OrderedPosetEmbedding make_ordered_embedding(LinearOrderedPoset a,
                                             LinearOrderedPoset c,
                                             std::vector<int> map) {
  if (!is_ordered_embedding_table(a, c, map))
    throw ValidationError("map is not an order-preserving poset embedding");
  return OrderedPosetEmbedding{std::move(a), std::move(c), std::move(map)};
}

std::vector<Mask> down_sets(const Poset& p) {
  std::vector<Mask> out;
  const Mask full = p.all();
  for (Mask m = 0;; ++m) {
    if (p.is_down_set(m)) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

namespace {

void extensions_rec(const Poset& p, Mask remaining, std::vector<int>& seq,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    std::vector<int> positions(p.size());
    for (int r = 0; r < static_cast<int>(seq.size()); ++r)
      positions[seq[r]] = r;
    out.push_back(std::move(positions));
    return;
  }
  for_each_bit(remaining, [&](int v) {
    // v must be minimal among the remaining elements.
    if ((p.down(v) & remaining & ~bit(v)) != 0) return;
    seq.push_back(v);
    extensions_rec(p, remaining & ~bit(v), seq, out);
    seq.pop_back();
  });
}

}  // namespace

std::vector<LinearOrderedPoset> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> positions;
  std::vector<int> seq;
  extensions_rec(p, p.all(), seq, positions);
  std::sort(positions.begin(), positions.end());
  std::vector<LinearOrderedPoset> out;
  out.reserve(positions.size());
  for (auto& pos : positions)
    out.push_back(LinearOrderedPoset{p, std::move(pos)});
  return out;
}

namespace {

template <class Accept>
void embeddings_rec(const Poset& a, const Poset& c, std::vector<int>& map,
                    Mask used, const Accept& pair_ok,
                    std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(map.size());
  if (i == a.size()) {
    out.push_back(map);
    return;
  }
  for (int t = 0; t < c.size(); ++t) {
    if (used & bit(t)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = pair_ok(j, i, map[j], t);
    if (!ok) continue;
    map.push_back(t);
    embeddings_rec(a, c, map, used | bit(t), pair_ok, out);
    map.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_embeddings(const Poset& a,
                                                   const Poset& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> map;
  auto pair_ok = [&](int j, int i, int mj, int ti) {
    return a.leq(j, i) == c.leq(mj, ti) && a.leq(i, j) == c.leq(ti, mj);
  };
  embeddings_rec(a, c, map, 0, pair_ok, out);
  return out;
}

std::vector<std::vector<int>> enumerate_ordered_embeddings(
    const LinearOrderedPoset& a, const LinearOrderedPoset& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> map;
  auto pair_ok = [&](int j, int i, int mj, int ti) {
    return a.poset.leq(j, i) == c.poset.leq(mj, ti) &&
           a.poset.leq(i, j) == c.poset.leq(ti, mj) &&
           a.before(j, i) == c.before(mj, ti);
  };
  embeddings_rec(a.poset, c.poset, map, 0, pair_ok, out);
  return out;
}

namespace {

// Encoding of the strict order after relabeling by `positions`; used as the
// canonical key, minimized over all linear-extension relabelings.
std::uint64_t encode_relabeled(const Poset& p, const std::vector<int>& pos) {
  const int n = p.size();
  std::uint64_t key = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(a, b))
        key |= std::uint64_t{1} << (pos[a] * n + pos[b]);
  return key;
}

std::uint64_t canonical_key(const Poset& p) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& ext : linear_extensions(p))
    best = std::min(best, encode_relabeled(p, ext.positions));
  return best;
}

Poset decode_key(int n, std::uint64_t key) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((key >> (a * n + b)) & 1) pairs.emplace_back(a, b);
  return Poset::from_pairs(n, pairs);
}

}  // namespace

std::vector<Poset> enumerate_posets_up_to_iso(int n, int size_bound) {
  if (size_bound < 0) size_bound = config::poset_enum_bound();
  if (n < 1) throw ValidationError("poset enumeration needs n >= 1");
  if (n > size_bound)
    throw BoundExceeded("poset enumeration bound is " +
                        std::to_string(size_bound) + ", requested " +
                        std::to_string(n));
  if (n > 8)
    throw BoundExceeded("poset enumeration supports sizes up to 8");

  // Grow one naturally-labeled maximal element at a time: every poset arises
  // from deleting its top-labeled (hence maximal) element, so attaching a
  // fresh maximal element above each down-set of each representative reaches
  // every class one level up.
  std::vector<Poset> level = {Poset::from_pairs(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<std::uint64_t, char> keys;
    for (const Poset& p : level) {
      for (Mask d : down_sets(p)) {
        std::vector<std::pair<int, int>> pairs = p.leq_pairs();
        for_each_bit(d, [&](int e) { pairs.emplace_back(e, k - 1); });
        Poset q = Poset::from_pairs(k, pairs);
        keys.emplace(canonical_key(q), 0);
      }
    }
    level.clear();
    for (const auto& [key, unused] : keys) level.push_back(decode_key(k, key));
  }
  if (n == 1) return level;
  return level;
}

namespace {

struct ElementSignature {
  int down_size, up_size, height, depth;
  auto operator<=>(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const Poset& p) {
  const int n = p.size();
  std::vector<int> height(n, -1), depth(n, -1);
  // Longest chain strictly below / above, via memoized DFS on the order.
  auto fill = [&](std::vector<int>& memo, auto&& neighbors_of) {
    auto rec = [&](auto&& self, int v) -> int {
      if (memo[v] >= 0) return memo[v];
      int best = 0;
      for_each_bit(neighbors_of(v), [&](int w) {
        if (w != v) best = std::max(best, self(self, w) + 1);
      });
      return memo[v] = best;
    };
    for (int v = 0; v < n; ++v) rec(rec, v);
  };
  fill(height, [&](int v) { return p.down(v) & ~bit(v); });
  fill(depth, [&](int v) { return p.up(v) & ~bit(v); });
  std::vector<ElementSignature> sig(n);
  for (int v = 0; v < n; ++v)
    sig[v] = {std::popcount(p.down(v)), std::popcount(p.up(v)), height[v],
              depth[v]};
  return sig;
}

bool iso_rec(const Poset& a, const Poset& b,
             const std::vector<ElementSignature>& sa,
             const std::vector<ElementSignature>& sb, std::vector<int>& map,
             Mask used) {
  const int i = static_cast<int>(map.size());
  if (i == a.size()) return true;
  for (int t = 0; t < b.size(); ++t) {
    if (used & bit(t)) continue;
    if (sa[i] != sb[t]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = a.leq(j, i) == b.leq(map[j], t) && a.leq(i, j) == b.leq(t, map[j]);
    if (!ok) continue;
    map.push_back(t);
    if (iso_rec(a, b, sa, sb, map, used | bit(t))) return true;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Poset& a,
                                               const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sa = signatures(a), sb = signatures(b);
  auto sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  std::vector<int> map;
  if (iso_rec(a, b, sa, sb, map, 0)) return map;
  return std::nullopt;
}

std::optional<std::vector<int>> are_isomorphic(const LinearOrderedPoset& a,
                                               const LinearOrderedPoset& b) {
  if (a.poset.size() != b.poset.size()) return std::nullopt;
  // Rigidity: the only candidate matches ranks.
  const auto ra = a.by_rank(), rb = b.by_rank();
  std::vector<int> map(a.poset.size());
  for (int r = 0; r < static_cast<int>(ra.size()); ++r) map[ra[r]] = rb[r];
  for (int i = 0; i < a.poset.size(); ++i)
    for (int j = 0; j < a.poset.size(); ++j)
      if (a.poset.leq(i, j) != b.poset.leq(map[i], map[j]))
        return std::nullopt;
  return map;
}

}  // namespace latram
