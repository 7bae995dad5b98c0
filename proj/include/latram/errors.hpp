#pragma once
// Exception taxonomy shared by all modules. Validation failures carry the
// offending indices so callers can surface precise diagnostics; resource
// limits are kept separate because the CLI maps them to a different exit
// code than malformed input.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latram {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

/// Reflexive-transitive closure of the input relation contains a cycle.
struct AntisymmetryViolation : ValidationError {
  std::vector<int> cycle;  // elements along the offending cycle
  AntisymmetryViolation(const std::string& msg, std::vector<int> cyc)
      : ValidationError(msg), cycle(std::move(cyc)) {}
};

struct FlavorMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NotALattice : ValidationError {
  std::string law;           // which axiom failed
  std::vector<int> witness;  // elements violating it
  NotALattice(const std::string& msg, std::string which, std::vector<int> w)
      : ValidationError(msg), law(std::move(which)), witness(std::move(w)) {}
};

struct NotDistributive : ValidationError {
  std::array<int, 3> triple;
  NotDistributive(const std::string& msg, std::array<int, 3> t)
      : ValidationError(msg), triple(t) {}
};

struct NotBounded : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHomomorphism : ValidationError {
  std::string op;  // "join", "meet", "bottom" or "top"
  int lhs = -1, rhs = -1;
  NotHomomorphism(const std::string& msg, std::string which, int a, int b)
      : ValidationError(msg), op(std::move(which)), lhs(a), rhs(b) {}
};

struct NotSurjective : ValidationError {
  using ValidationError::ValidationError;
};

struct NotAnExtension : ValidationError {
  int lhs = -1, rhs = -1;  // comparable pair placed in the wrong order
  NotAnExtension(const std::string& msg, int a, int b)
      : ValidationError(msg), lhs(a), rhs(b) {}
};

struct OrderMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NotPositive : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyHomAB : ValidationError {
  using ValidationError::ValidationError;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExceeded : ResourceLimit {
  using ResourceLimit::ResourceLimit;
};

struct Timeout : ResourceLimit {
  using ResourceLimit::ResourceLimit;
};

}  // namespace latram
