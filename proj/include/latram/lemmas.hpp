#pragma once
// Exhaustive verification batteries for the structural facts the engine
// relies on, run over every surjective homomorphism / congruence between
// down-set lattices of the given posets, under every natural order. A clean
// run returns no violations; `asymmetries` collects cases where the dual map
// of a non-positive surjection still happens to be an ordered embedding
// (only the converse direction is a theorem, so these are reported, not
// failed).

#include <map>
#include <string>
#include <vector>

#include "latram/poset.hpp"

namespace latram {

struct LemmaSuiteReport {
  std::map<std::string, long long> checks;
  std::vector<std::string> violations;
  std::vector<std::string> asymmetries;

  bool ok() const { return violations.empty(); }
};

/// Collapsed-set laws, kernels, quotient orders and composition:
///   - image of the dual map misses exactly the collapsed irreducibles;
///   - below the residual, the dual map inverts the homomorphism;
///   - every element maps like its residual;
///   - minima of join-irreducible quotient classes are join-irreducible;
///   - quotient orders of positive congruences are natural and extend the
///     quotient lattice order;
///   - kernels of positive surjections are positive congruences and natural
///     surjections of positive congruences are positive homomorphisms, with
///     matching collapsed sets;
///   - composites of positive surjections are positive.
LemmaSuiteReport run_lemma_suite(const std::vector<Poset>& posets);

/// Both directions of the order-duality exchange: duals of positive
/// surjections are ordered embeddings, and duals of ordered embeddings are
/// positive surjections.
LemmaSuiteReport run_tech_suite(const std::vector<Poset>& posets);

}  // namespace latram
