#pragma once
// Hasse diagram export in Graphviz DOT, cover relation only.

#include <string>

#include "latram/lattice.hpp"
#include "latram/poset.hpp"

namespace latram {

std::string poset_to_dot(const Poset& p);

/// Element order of the lattice, nodes labeled by their down-set bit-string.
std::string lattice_to_dot(const DistLattice& l);

}  // namespace latram
