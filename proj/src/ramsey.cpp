#include "latram/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "latram/config.hpp"
#include "latram/errors.hpp"

namespace latram {

namespace {

using Clock = std::chrono::steady_clock;

int point_index(const std::vector<std::vector<int>>& points,
                const std::vector<int>& table) {
  auto it = std::lower_bound(points.begin(), points.end(), table);
  if (it == points.end() || *it != table)
    throw std::logic_error("composite morphism is not in the hom set");
  return static_cast<int>(it - points.begin());
}

// Composition of w in hom(B,C) with f in hom(A,B), yielding hom(A,C). In the
// poset flavors tables map source to target; in the lattice flavors tables
// are the underlying surjections read backwards, so composition flips.
std::vector<int> compose_tables(CategoryFlavor flavor,
                                const std::vector<int>& w,
                                const std::vector<int>& f) {
  std::vector<int> out;
  if (flavor == CategoryFlavor::PosetEmb ||
      flavor == CategoryFlavor::OrderedPosetEmb) {
    out.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = w[f[i]];
  } else {
    out.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = f[w[i]];
  }
  return out;
}

template <class T>
const T& get_object(const ArrowObject& obj, const char* flavor_name) {
  const T* ptr = std::get_if<T>(&obj);
  if (ptr == nullptr)
    throw FlavorMismatch(std::string("object does not match flavor ") +
                         flavor_name);
  return *ptr;
}

std::vector<std::vector<int>> hom_tables(CategoryFlavor flavor,
                                         const ArrowObject& x,
                                         const ArrowObject& y) {
  switch (flavor) {
    case CategoryFlavor::PosetEmb:
      return enumerate_embeddings(get_object<Poset>(x, "p"),
                                  get_object<Poset>(y, "p"));
    case CategoryFlavor::OrderedPosetEmb:
      return enumerate_ordered_embeddings(
          get_object<LinearOrderedPoset>(x, "p-ord"),
          get_object<LinearOrderedPoset>(y, "p-ord"));
    case CategoryFlavor::LatticeSurj: {
      // hom(X,Y) in the opposite category: surjections Y ->> X.
      std::vector<std::vector<int>> tables;
      for (auto& hom : enumerate_surjective_homomorphisms(
               get_object<DistLattice>(y, "d-surj"),
               get_object<DistLattice>(x, "d-surj")))
        tables.push_back(std::move(hom.map));
      return tables;
    }
    case CategoryFlavor::OrderedLatticePos: {
      std::vector<std::vector<int>> tables;
      for (auto& hom : enumerate_positive_surjections(
               get_object<NaturalOrder>(y, "d-pos"),
               get_object<NaturalOrder>(x, "d-pos")))
        tables.push_back(std::move(hom.hom.map));
      return tables;
    }
  }
  throw std::logic_error("unknown category flavor");
}

}  // namespace

ArrowProblem build_arrow_problem(CategoryFlavor flavor, const ArrowObject& c,
                                 const ArrowObject& b, const ArrowObject& a) {
  ArrowProblem prob;
  prob.hom_ab = hom_tables(flavor, a, b);
  if (prob.hom_ab.empty())
    throw EmptyHomAB("hom(A,B) is empty; the arrow is not well posed");
  prob.hom_ac = hom_tables(flavor, a, c);
  prob.hom_bc = hom_tables(flavor, b, c);
  prob.wsets.reserve(prob.hom_bc.size());
  for (const auto& w : prob.hom_bc) {
    std::vector<int> set;
    for (const auto& f : prob.hom_ab)
      set.push_back(point_index(prob.hom_ac, compose_tables(flavor, w, f)));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    prob.wsets.push_back(std::move(set));
  }
  return prob;
}

namespace {

// Backtracking refutation search: assign colors to points in index order
// (new colors introduced in canonical order), pruning a branch as soon as
// some w-set is completely colored in one color, and succeeding as soon as
// every w-set has seen two colors. Returns the first refuting coloring in
// this order, or nullopt when none exists.
struct RefutationSearch {
  const std::vector<std::vector<int>>& wsets;
  int points;
  int k;
  Clock::time_point deadline;
  bool has_deadline;
  std::vector<std::vector<int>> sets_of_point;
  std::vector<int> colors;
  std::vector<int> colored_count;
  std::vector<std::uint32_t> seen_mask;
  int bicolored = 0;
  long long visited = 0;

  RefutationSearch(const std::vector<std::vector<int>>& ws, int p, int kk,
                   Clock::time_point dl, bool has_dl)
      : wsets(ws), points(p), k(kk), deadline(dl), has_deadline(has_dl) {
    sets_of_point.resize(points);
    for (int s = 0; s < static_cast<int>(wsets.size()); ++s)
      for (int pt : wsets[s]) sets_of_point[pt].push_back(s);
    colors.assign(points, 0);
    colored_count.assign(wsets.size(), 0);
    seen_mask.assign(wsets.size(), 0);
  }

  bool apply(int p, int c) {
    colors[p] = c;
    bool dead = false;
    for (int s : sets_of_point[p]) {
      ++colored_count[s];
      std::uint32_t before = seen_mask[s];
      seen_mask[s] |= std::uint32_t{1} << c;
      if (std::popcount(before) == 1 && std::popcount(seen_mask[s]) == 2)
        ++bicolored;
      if (colored_count[s] == static_cast<int>(wsets[s].size()) &&
          std::popcount(seen_mask[s]) == 1)
        dead = true;
    }
    return !dead;
  }

  void undo(int p) {
    const int c = colors[p];
    colors[p] = 0;
    for (int s : sets_of_point[p]) {
      --colored_count[s];
      bool still_seen = false;
      for (int pt : wsets[s])
        if (colors[pt] == c) {
          still_seen = true;
          break;
        }
      if (!still_seen) {
        if (std::popcount(seen_mask[s]) == 2) --bicolored;
        seen_mask[s] &= ~(std::uint32_t{1} << c);
      }
    }
  }

  std::vector<int> complete() const {
    std::vector<int> out = colors;
    for (int& c : out)
      if (c == 0) c = 1;
    return out;
  }

  std::optional<std::vector<int>> dfs(int p, int max_used) {
    if (has_deadline && (++visited & 0xfff) == 0 &&
        Clock::now() > deadline)
      throw Timeout("coloring search timed out");
    if (bicolored == static_cast<int>(wsets.size())) return complete();
    if (p == points) return std::nullopt;
    const int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (apply(p, c)) {
        auto result = dfs(p + 1, std::max(max_used, c));
        if (result) return result;
      }
      undo(p);
    }
    return std::nullopt;
  }
};

std::optional<std::vector<int>> search_parallel(
    const std::vector<std::vector<int>>& wsets, int points, int k,
    int workers, Clock::time_point deadline, bool has_deadline) {
  // Jobs are canonical colorings of a prefix of the points; each worker
  // exhausts whole jobs, and the earliest job holding a refutation wins,
  // which reproduces the sequential answer regardless of scheduling.
  int prefix = 0;
  std::vector<std::vector<int>> jobs = {{}};
  while (prefix < points && static_cast<int>(jobs.size()) < 4 * workers) {
    std::vector<std::vector<int>> next;
    for (const auto& job : jobs) {
      int max_used = 0;
      for (int c : job) max_used = std::max(max_used, c);
      for (int c = 1; c <= std::min(k, max_used + 1); ++c) {
        std::vector<int> extended = job;
        extended.push_back(c);
        next.push_back(std::move(extended));
      }
    }
    jobs = std::move(next);
    ++prefix;
  }

  std::vector<std::optional<std::vector<int>>> results(jobs.size());
  std::atomic<size_t> next_job{0};
  std::atomic<size_t> best{jobs.size()};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&]() {
    try {
      for (;;) {
        size_t idx = next_job.fetch_add(1);
        if (idx >= jobs.size() || failed.load()) return;
        if (idx > best.load()) continue;  // a smaller job already refuted
        RefutationSearch search(wsets, points, k, deadline, has_deadline);
        bool alive = true;
        int max_used = 0;
        for (size_t p = 0; p < jobs[idx].size() && alive; ++p) {
          alive = search.apply(static_cast<int>(p), jobs[idx][p]);
          max_used = std::max(max_used, jobs[idx][p]);
        }
        if (alive)
          results[idx] =
              search.dfs(static_cast<int>(jobs[idx].size()), max_used);
        if (results[idx]) {
          size_t expected = best.load();
          while (idx < expected &&
                 !best.compare_exchange_weak(expected, idx)) {
          }
        }
      }
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(workers, static_cast<int>(jobs.size()));
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (auto& result : results)
    if (result) return result;
  return std::nullopt;
}

std::optional<std::vector<int>> refutation_search(const ArrowProblem& prob,
                                                  int k,
                                                  const ArrowOptions& opts) {
  if (k < 1 || k > 30) throw ValidationError("color count out of range");
  // A w whose composite set has at most one point is monochromatic under
  // every coloring, so the arrow holds outright.
  for (const auto& set : prob.wsets)
    if (set.size() <= 1) return std::nullopt;
  const int points = static_cast<int>(prob.hom_ac.size());
  const bool has_deadline = opts.timeout_secs > 0;
  const Clock::time_point deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(
                             has_deadline ? opts.timeout_secs : 0));
  if (opts.workers > 1 && points > 4)
    return search_parallel(prob.wsets, points, k, opts.workers, deadline,
                           has_deadline);
  RefutationSearch search(prob.wsets, points, k, deadline, has_deadline);
  return search.dfs(0, 0);
}

}  // namespace

std::optional<std::vector<std::array<int, 2>>> audit_bad_coloring(
    const ArrowProblem& problem, const std::vector<int>& coloring, int k) {
  if (coloring.size() != problem.hom_ac.size()) return std::nullopt;
  for (int c : coloring)
    if (c < 1 || c > k) return std::nullopt;
  std::vector<std::array<int, 2>> audit;
  for (const auto& set : problem.wsets) {
    std::array<int, 2> pair{-1, -1};
    for (int pt : set)
      if (coloring[pt] != coloring[set.front()]) {
        pair = {set.front(), pt};
        break;
      }
    if (pair[0] < 0) return std::nullopt;  // this w is monochromatic
    audit.push_back(pair);
  }
  return audit;
}

bool arrow_holds_exhaustive(const ArrowProblem& problem, int k) {
  const int points = static_cast<int>(problem.hom_ac.size());
  std::vector<int> coloring(points, 1);
  for (;;) {
    bool refutes = true;
    for (const auto& set : problem.wsets) {
      bool bicolored = false;
      for (size_t i = 1; i < set.size() && !bicolored; ++i)
        bicolored = coloring[set[i]] != coloring[set[0]];
      if (!bicolored) {
        refutes = false;
        break;
      }
    }
    if (refutes) return false;
    int p = 0;
    while (p < points && coloring[p] == k) coloring[p++] = 1;
    if (p == points) return true;
    ++coloring[p];
  }
}

ArrowCheck arrow_holds_hom(CategoryFlavor flavor, const ArrowObject& c,
                           const ArrowObject& b, const ArrowObject& a, int k,
                           const ArrowOptions& opts) {
  const int bound =
      opts.bound < 0 ? config::arrow_coloring_bound() : opts.bound;
  ArrowCheck check;
  check.problem = build_arrow_problem(flavor, c, b, a);
  if (static_cast<int>(check.problem.hom_ac.size()) > bound)
    throw BoundExceeded("hom(A,C) has " +
                        std::to_string(check.problem.hom_ac.size()) +
                        " morphisms, coloring bound is " +
                        std::to_string(bound));
  auto refutation = refutation_search(check.problem, k, opts);
  if (!refutation) {
    check.certificate.holds = true;
    return check;
  }
  check.certificate.holds = false;
  check.certificate.coloring = std::move(*refutation);
  auto audit =
      audit_bad_coloring(check.problem, check.certificate.coloring, k);
  if (!audit)
    throw std::logic_error("refuting coloring failed its own audit");
  check.certificate.audit = std::move(*audit);
  return check;
}

std::optional<std::vector<int>> find_bad_coloring(CategoryFlavor flavor,
                                                  const ArrowObject& c,
                                                  const ArrowObject& b,
                                                  const ArrowObject& a, int k,
                                                  const ArrowOptions& opts) {
  ArrowCheck check = arrow_holds_hom(flavor, c, b, a, k, opts);
  if (check.certificate.holds) return std::nullopt;
  return check.certificate.coloring;
}

std::vector<int> sierpinski_coloring(const ArrowProblem& problem) {
  std::vector<int> coloring;
  coloring.reserve(problem.hom_ac.size());
  for (const auto& table : problem.hom_ac) {
    if (table.size() != 2)
      throw ValidationError(
          "reference coloring needs embeddings of a two-point antichain");
    coloring.push_back(table[0] < table[1] ? 1 : 2);
  }
  return coloring;
}

WitnessSearchResult find_ramsey_witness(const LinearOrderedPoset& b,
                                        const LinearOrderedPoset& a, int k,
                                        int max_size,
                                        const ArrowOptions& opts) {
  if (enumerate_ordered_embeddings(a, b).empty())
    throw EmptyHomAB("hom(A,B) is empty; the arrow is not well posed");
  for (int n = 1; n <= max_size; ++n)
    for (const Poset& rep : enumerate_posets_up_to_iso(n, n))
      for (const LinearOrderedPoset& c : linear_extensions(rep)) {
        ArrowCheck check = arrow_holds_hom(CategoryFlavor::OrderedPosetEmb, c,
                                           b, a, k, opts);
        if (check.certificate.holds)
          return WitnessSearchResult{c, std::move(check)};
      }
  throw BoundExceeded("no witness within size bound " +
                      std::to_string(max_size) +
                      " (larger witnesses may exist)");
}

TransportResult transport_witness(const LinearOrderedPoset& a,
                                  const LinearOrderedPoset& b,
                                  const LinearOrderedPoset& c, int k,
                                  const ArrowOptions& opts) {
  TransportResult out{ordered_o(a), ordered_o(b), ordered_o(c), {}};
  out.check = arrow_holds_hom(CategoryFlavor::OrderedLatticePos, out.oc,
                              out.ob, out.oa, k, opts);
  return out;
}

CongruenceArrowCheck dual_arrow_congruence_form(const NaturalOrder& n_ordered,
                                                const NaturalOrder& l_ordered,
                                                const Congruence& phi, int k,
                                                const ArrowOptions& opts) {
  const int bound =
      opts.bound < 0 ? config::arrow_coloring_bound() : opts.bound;
  PositivityReport phi_report = is_positive_congruence(phi, l_ordered);
  if (!phi_report.positive)
    throw NotPositive("the quotient-defining congruence is not positive");
  NaturalOrder quotient_order =
      quotient_natural_order(make_positive_congruence(phi, l_ordered));

  CongruenceArrowCheck check;
  check.quotient_congruences = con_plus(n_ordered, quotient_order);
  check.witness_congruences = con_plus(n_ordered, l_ordered);
  if (static_cast<int>(check.quotient_congruences.size()) > bound)
    throw BoundExceeded("coloring bound exceeded: " +
                        std::to_string(check.quotient_congruences.size()) +
                        " congruences to color");
  for (const PositiveCongruence& psi : check.witness_congruences) {
    std::vector<int> containing;
    for (int i = 0; i < static_cast<int>(check.quotient_congruences.size());
         ++i)
      if (refines(psi.congruence, check.quotient_congruences[i].congruence))
        containing.push_back(i);
    check.containment.push_back(std::move(containing));
  }

  ArrowProblem prob;
  prob.hom_ac.resize(check.quotient_congruences.size());
  prob.wsets = check.containment;
  auto refutation = refutation_search(prob, k, opts);
  if (!refutation) {
    check.certificate.holds = true;
    return check;
  }
  check.certificate.holds = false;
  check.certificate.coloring = std::move(*refutation);
  for (const auto& set : prob.wsets) {
    std::array<int, 2> pair{-1, -1};
    for (int pt : set)
      if (check.certificate.coloring[pt] !=
          check.certificate.coloring[set.front()]) {
        pair = {set.front(), pt};
        break;
      }
    if (pair[0] < 0)
      throw std::logic_error("refuting coloring failed its own audit");
    check.certificate.audit.push_back(pair);
  }
  return check;
}

}  // namespace latram
