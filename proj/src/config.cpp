#include "latram/config.hpp"

#include <cstdlib>
#include <string>

namespace latram::config {

namespace {

int env_override(int fallback) {
  const char* raw = std::getenv("LATTICE_RAMSEY_BOUND");
  if (raw == nullptr) return fallback;
  try {
    int v = std::stoi(raw);
    if (v > 0) return v;
  } catch (...) {
  }
  return fallback;
}

}  // namespace

int poset_enum_bound() { return env_override(kDefaultPosetEnumBound); }

int arrow_coloring_bound() { return env_override(kDefaultArrowColoringBound); }

int congruence_lattice_bound() {
  return env_override(kDefaultCongruenceLatticeBound);
}

}  // namespace latram::config
