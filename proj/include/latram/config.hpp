#pragma once
// Size bounds for the exhaustive searches. LATTICE_RAMSEY_BOUND, when set
// to a positive integer, overrides every default bound at once.

namespace latram::config {

inline constexpr int kDefaultPosetEnumBound = 6;
inline constexpr int kDefaultArrowColoringBound = 24;
inline constexpr int kDefaultCongruenceLatticeBound = 64;

/// Max poset size for isomorphism-free enumeration.
int poset_enum_bound();

/// Max |hom(A,C)| the arrow refutation search will color.
int arrow_coloring_bound();

/// Max lattice size for congruence enumeration.
int congruence_lattice_bound();

}  // namespace latram::config
