#pragma once
// JSON interchange for every structure the CLI moves around. Field order is
// fixed (nlohmann::ordered_json) and all lists follow the deterministic
// enumeration orders, so identical inputs serialize byte-identically.
//
//   poset          {"n": 3, "leq": [[0,0],[0,2],...]}     (reflexive closure)
//   ordered poset  ... plus "order": [positions]
//   lattice        {"base": <poset>, "elements": ["000","100",...]}
//                  (bit-strings indexed by base element, char b = '1' iff b
//                  is in the down-set)
//   ordered lattice ... plus "irr_order": [base elements, smallest first]
//   homomorphism   {"map": [target indices]}
//   congruence     {"blocks": [[...],...]}                (sorted by minimum)
//   natural order  {"irr_order": [...]}
//   element order  {"elem_order": [...]}

#include <string>

#include <json.hpp>

#include "latram/lattice.hpp"
#include "latram/ordered.hpp"
#include "latram/poset.hpp"
#include "latram/ramsey.hpp"

namespace latram {

using Json = nlohmann::ordered_json;

Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j, bool allow_empty = false);

Json ordered_poset_to_json(const LinearOrderedPoset& p);
LinearOrderedPoset ordered_poset_from_json(const Json& j,
                                           bool allow_empty = false);

Json lattice_to_json(const DistLattice& l);
DistLattice lattice_from_json(const Json& j, bool allow_trivial = false);

Json ordered_lattice_to_json(const NaturalOrder& no);
NaturalOrder ordered_lattice_from_json(const Json& j,
                                       bool allow_trivial = false);

Json hom_to_json(const LatticeHom& f);
LatticeHom hom_from_json(const Json& j, const DistLattice& source,
                         const DistLattice& target,
                         bool require_surjective = false);

Json congruence_to_json(const Congruence& phi);
Congruence congruence_from_json(const Json& j, const DistLattice& l);

Json natural_order_to_json(const NaturalOrder& no);

Json certificate_to_json(const ArrowCheck& check);
Json congruence_certificate_to_json(const CongruenceArrowCheck& check);

/// "poset", "ordered-poset", "lattice", "ordered-lattice" or "tables".
std::string detect_kind(const Json& j);

Json load_json_file(const std::string& path);

std::string mask_to_bits(Mask m, int n);
Mask bits_to_mask(const std::string& bits, int n);

}  // namespace latram
