#pragma once
// Arrow checking C -> (B)^A_k in four category flavors, with certified
// outcomes. A "holds" verdict means no k-coloring of hom(A,C) leaves every
// w in hom(B,C) bicolored on its composite set (established by exhausting a
// pruned refutation search); a "fails" verdict carries a concrete refuting
// coloring plus, per w, an audited bicolored pair. The two lattice flavors
// read their arrows in the opposite category, so hom(X,Y) there means
// surjections Y ->> X and composition is reversed accordingly.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "latram/lattice.hpp"
#include "latram/ordered.hpp"
#include "latram/poset.hpp"

namespace latram {

enum class CategoryFlavor {
  PosetEmb,           // finite posets, embeddings
  OrderedPosetEmb,    // linearly ordered posets, order-preserving embeddings
  LatticeSurj,        // distributive lattices, surjective homs (opposite)
  OrderedLatticePos,  // naturally ordered lattices, positive surjections
                      // (opposite)
};

using ArrowObject =
    std::variant<Poset, LinearOrderedPoset, DistLattice, NaturalOrder>;

/// Morphism tables and composite structure of one arrow instance.
struct ArrowProblem {
  std::vector<std::vector<int>> hom_ac;  // the colored points, sorted
  std::vector<std::vector<int>> hom_bc;  // the w morphisms, sorted
  std::vector<std::vector<int>> hom_ab;
  // Per w: sorted unique indices into hom_ac of w composed with hom(A,B).
  std::vector<std::vector<int>> wsets;
};

struct ArrowCertificate {
  bool holds = false;
  std::vector<int> coloring;              // per point, 1..k; fails only
  std::vector<std::array<int, 2>> audit;  // per w, two bicolored points
};

struct ArrowCheck {
  ArrowProblem problem;
  ArrowCertificate certificate;
};

/// Search controls. A nonpositive bound falls back to the configured
/// coloring bound; workers > 1 fans the refutation search out over disjoint
/// prefix jobs with a deterministic merge, so the certificate never depends
/// on scheduling; a positive timeout aborts with Timeout.
struct ArrowOptions {
  int bound = -1;
  int workers = 1;
  double timeout_secs = 0;
};

/// Builds hom sets and composite sets for the flavor; throws FlavorMismatch
/// when the objects do not match it and EmptyHomAB when hom(A,B) is empty.
ArrowProblem build_arrow_problem(CategoryFlavor flavor, const ArrowObject& c,
                                 const ArrowObject& b, const ArrowObject& a);

/// Full arrow check; throws BoundExceeded when |hom(A,C)| exceeds the bound.
ArrowCheck arrow_holds_hom(CategoryFlavor flavor, const ArrowObject& c,
                           const ArrowObject& b, const ArrowObject& a, int k,
                           const ArrowOptions& opts = {});

/// The refutation side only: a verified refuting coloring when one exists
/// within the bound.
std::optional<std::vector<int>> find_bad_coloring(CategoryFlavor flavor,
                                                  const ArrowObject& c,
                                                  const ArrowObject& b,
                                                  const ArrowObject& a, int k,
                                                  const ArrowOptions& opts = {});

/// Oracle-grade exhaustive check over all k^|points| colorings; test scale
/// only.
bool arrow_holds_exhaustive(const ArrowProblem& problem, int k);

/// Independent audit of a fails-certificate: recomputes each w's composite
/// set and finds a bicolored pair; nullopt when the coloring does not refute.
std::optional<std::vector<std::array<int, 2>>> audit_bad_coloring(
    const ArrowProblem& problem, const std::vector<int>& coloring, int k);

/// Colors an embedding of the two-element antichain by whether the image of
/// its first point precedes the second; splits every {e, e after swap} pair.
std::vector<int> sierpinski_coloring(const ArrowProblem& problem);

struct WitnessSearchResult {
  LinearOrderedPoset witness;
  ArrowCheck check;
};

/// Smallest (then enumeration-least) ordered poset C with
/// C -> (B)^A_k in the ordered-poset flavor. Throws BoundExceeded when no
/// witness exists up to max_size; that outcome means "none within bound",
/// not nonexistence.
WitnessSearchResult find_ramsey_witness(const LinearOrderedPoset& b,
                                        const LinearOrderedPoset& a, int k,
                                        int max_size,
                                        const ArrowOptions& opts = {});

struct TransportResult {
  NaturalOrder oa, ob, oc;  // down-set lattices with the induced orders
  ArrowCheck check;         // independent re-verification on the lattice side
};

/// Transports an ordered-poset triple through the order-aware duality and
/// re-verifies the resulting positive-surjection arrow directly.
TransportResult transport_witness(const LinearOrderedPoset& a,
                                  const LinearOrderedPoset& b,
                                  const LinearOrderedPoset& c, int k,
                                  const ArrowOptions& opts = {});

struct CongruenceArrowCheck {
  std::vector<PositiveCongruence> quotient_congruences;  // colored points
  std::vector<PositiveCongruence> witness_congruences;
  std::vector<std::vector<int>> containment;  // per witness congruence, the
                                              // points containing it
  ArrowCertificate certificate;
};

/// The partition form of the lattice arrow: colorings of the positive
/// congruences of N with quotient iso to L/phi, witnessed by a positive
/// congruence of N with quotient iso to L all of whose relevant coarsenings
/// are monochromatic. phi must be positive for l_ordered.
CongruenceArrowCheck dual_arrow_congruence_form(const NaturalOrder& n_ordered,
                                                const NaturalOrder& l_ordered,
                                                const Congruence& phi, int k,
                                                const ArrowOptions& opts = {});

}  // namespace latram
