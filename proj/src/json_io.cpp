#include "latram/json_io.hpp"

#include <fstream>

#include "latram/errors.hpp"

namespace latram {

namespace {

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<int> int_list(const Json& j, const char* name) {
  const Json& arr = field(j, name);
  if (!arr.is_array())
    throw ParseError(std::string("field \"") + name + "\" must be an array");
  std::vector<int> out;
  for (const Json& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(std::string("field \"") + name +
                       "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string mask_to_bits(Mask m, int n) {
  std::string bits(n, '0');
  for (int b = 0; b < n; ++b)
    if ((m >> b) & 1) bits[b] = '1';
  return bits;
}

Mask bits_to_mask(const std::string& bits, int n) {
  if (static_cast<int>(bits.size()) != n)
    throw ParseError("bit-string \"" + bits + "\" has the wrong length");
  Mask m = 0;
  for (int b = 0; b < n; ++b) {
    if (bits[b] == '1')
      m |= bit(b);
    else if (bits[b] != '0')
      throw ParseError("bit-string \"" + bits + "\" has a non-binary digit");
  }
  return m;
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  Json leq = Json::array();
  for (const auto& [a, b] : p.leq_pairs()) leq.push_back(Json::array({a, b}));
  j["leq"] = leq;
  return j;
}

Poset poset_from_json(const Json& j, bool allow_empty) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const Json& leq = field(j, "leq");
  if (!leq.is_array()) throw ParseError("\"leq\" must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const Json& pair : leq) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw ParseError("\"leq\" entries must be [i,j] pairs");
    pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Poset::from_pairs(n.get<int>(), pairs, allow_empty);
}

Json ordered_poset_to_json(const LinearOrderedPoset& p) {
  Json j = poset_to_json(p.poset);
  j["order"] = p.positions;
  return j;
}

LinearOrderedPoset ordered_poset_from_json(const Json& j, bool allow_empty) {
  Poset p = poset_from_json(j, allow_empty);
  return make_linear_ordered(std::move(p), int_list(j, "order"));
}

Json lattice_to_json(const DistLattice& l) {
  Json j;
  j["base"] = poset_to_json(l.base());
  Json elems = Json::array();
  for (int x = 0; x < l.size(); ++x)
    elems.push_back(mask_to_bits(l.elem_mask(x), l.base().size()));
  j["elements"] = elems;
  return j;
}

DistLattice lattice_from_json(const Json& j, bool allow_trivial) {
  Poset base = poset_from_json(field(j, "base"), allow_trivial);
  DistLattice l = DistLattice::down_set_lattice(std::move(base),
                                                allow_trivial);
  const Json& elems = field(j, "elements");
  if (!elems.is_array() || static_cast<int>(elems.size()) != l.size())
    throw ValidationError(
        "\"elements\" must list every down-set of the base, smallest "
        "bit-vector first");
  for (int x = 0; x < l.size(); ++x) {
    if (!elems[x].is_string())
      throw ParseError("\"elements\" entries must be bit-strings");
    if (bits_to_mask(elems[x].get<std::string>(), l.base().size()) !=
        l.elem_mask(x))
      throw ValidationError("element " + std::to_string(x) +
                            " is not the expected down-set " +
                            mask_to_bits(l.elem_mask(x), l.base().size()));
  }
  return l;
}

Json ordered_lattice_to_json(const NaturalOrder& no) {
  Json j = lattice_to_json(no.lattice);
  j["irr_order"] = no.irr_sequence;
  return j;
}

NaturalOrder ordered_lattice_from_json(const Json& j, bool allow_trivial) {
  DistLattice l = lattice_from_json(j, allow_trivial);
  return antilex_natural_order(std::move(l), int_list(j, "irr_order"));
}

Json hom_to_json(const LatticeHom& f) {
  Json j;
  j["map"] = f.map;
  return j;
}

LatticeHom hom_from_json(const Json& j, const DistLattice& source,
                         const DistLattice& target, bool require_surjective) {
  return validate_homomorphism(int_list(j, "map"), source, target,
                               require_surjective);
}

Json congruence_to_json(const Congruence& phi) {
  Json j;
  j["blocks"] = phi.blocks;
  return j;
}

Congruence congruence_from_json(const Json& j, const DistLattice& l) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw ParseError("\"blocks\" must be an array");
  std::vector<std::vector<int>> parsed;
  for (const Json& block : blocks) {
    if (!block.is_array()) throw ParseError("blocks must be arrays");
    std::vector<int> members;
    for (const Json& e : block) {
      if (!e.is_number_integer())
        throw ParseError("block members must be integers");
      members.push_back(e.get<int>());
    }
    parsed.push_back(std::move(members));
  }
  return make_congruence(l, parsed);
}

Json natural_order_to_json(const NaturalOrder& no) {
  Json j;
  j["irr_order"] = no.irr_sequence;
  return j;
}

Json certificate_to_json(const ArrowCheck& check) {
  Json j;
  j["verdict"] = check.certificate.holds ? "holds" : "fails";
  j["hom_ac"] = check.problem.hom_ac;
  j["hom_bc"] = check.problem.hom_bc;
  j["wsets"] = check.problem.wsets;
  if (!check.certificate.holds) {
    j["coloring"] = check.certificate.coloring;
    Json audit = Json::array();
    for (int w = 0; w < static_cast<int>(check.certificate.audit.size());
         ++w) {
      Json entry;
      entry["w"] = w;
      entry["pair"] = check.certificate.audit[w];
      audit.push_back(entry);
    }
    j["audit"] = audit;
  }
  return j;
}

Json congruence_certificate_to_json(const CongruenceArrowCheck& check) {
  Json j;
  j["verdict"] = check.certificate.holds ? "holds" : "fails";
  Json points = Json::array();
  for (const auto& pc : check.quotient_congruences)
    points.push_back(congruence_to_json(pc.congruence));
  j["quotient_congruences"] = points;
  Json witnesses = Json::array();
  for (const auto& pc : check.witness_congruences)
    witnesses.push_back(congruence_to_json(pc.congruence));
  j["witness_congruences"] = witnesses;
  j["containment"] = check.containment;
  if (!check.certificate.holds) {
    j["coloring"] = check.certificate.coloring;
    Json audit = Json::array();
    for (int w = 0; w < static_cast<int>(check.certificate.audit.size());
         ++w) {
      Json entry;
      entry["w"] = w;
      entry["pair"] = check.certificate.audit[w];
      audit.push_back(entry);
    }
    j["audit"] = audit;
  }
  return j;
}

std::string detect_kind(const Json& j) {
  if (j.contains("join") && j.contains("meet")) return "tables";
  if (j.contains("base") && j.contains("elements"))
    return j.contains("irr_order") ? "ordered-lattice" : "lattice";
  if (j.contains("n") && j.contains("leq"))
    return j.contains("order") ? "ordered-poset" : "poset";
  throw ParseError("cannot tell what structure this file describes");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace latram
