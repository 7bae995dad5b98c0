#include "latram/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "latram/dot.hpp"
#include "latram/duality.hpp"
#include "latram/errors.hpp"
#include "latram/json_io.hpp"
#include "latram/lemmas.hpp"
#include "latram/ramsey.hpp"

namespace latram {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json error_to_json(const std::exception& e, const char* fallback_type) {
  Json err;
  if (auto* v = dynamic_cast<const AntisymmetryViolation*>(&e)) {
    err["type"] = "AntisymmetryViolation";
    err["cycle"] = v->cycle;
  } else if (auto* v = dynamic_cast<const NotDistributive*>(&e)) {
    err["type"] = "NotDistributive";
    err["triple"] = v->triple;
  } else if (auto* v = dynamic_cast<const NotALattice*>(&e)) {
    err["type"] = "NotALattice";
    err["law"] = v->law;
    err["witness"] = v->witness;
  } else if (auto* v = dynamic_cast<const NotHomomorphism*>(&e)) {
    err["type"] = "NotHomomorphism";
    err["operation"] = v->op;
    err["pair"] = Json::array({v->lhs, v->rhs});
  } else if (auto* v = dynamic_cast<const NotAnExtension*>(&e)) {
    err["type"] = "NotAnExtension";
    err["pair"] = Json::array({v->lhs, v->rhs});
  } else if (dynamic_cast<const NotBounded*>(&e)) {
    err["type"] = "NotBounded";
  } else if (dynamic_cast<const NotSurjective*>(&e)) {
    err["type"] = "NotSurjective";
  } else if (dynamic_cast<const NotPositive*>(&e)) {
    err["type"] = "NotPositive";
  } else if (dynamic_cast<const FlavorMismatch*>(&e)) {
    err["type"] = "FlavorMismatch";
  } else if (dynamic_cast<const EmptyHomAB*>(&e)) {
    err["type"] = "EmptyHomAB";
  } else if (dynamic_cast<const OrderMismatch*>(&e)) {
    err["type"] = "OrderMismatch";
  } else if (dynamic_cast<const ParseError*>(&e)) {
    err["type"] = "ParseError";
  } else if (dynamic_cast<const Timeout*>(&e)) {
    err["type"] = "Timeout";
  } else if (dynamic_cast<const BoundExceeded*>(&e)) {
    err["type"] = "BoundExceeded";
  } else {
    err["type"] = fallback_type;
  }
  err["message"] = e.what();
  return err;
}

struct CommonFlags {
  bool allow_empty = false;
  bool allow_trivial = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--allow-empty", flags.allow_empty,
                "admit the empty poset");
  cmd->add_flag("--allow-trivial", flags.allow_trivial,
                "admit the one-element lattice (0 = 1)");
}

struct RamseyFlags {
  int k = 2;
  int bound = -1;
  int workers = 1;
  double timeout_secs = 0;
};

void add_ramsey_flags(CLI::App* cmd, RamseyFlags& flags) {
  cmd->add_option("-k,--colors", flags.k, "number of colors")
      ->check(CLI::Range(1, 30));
  cmd->add_option("--bound", flags.bound,
                  "max size of the colored hom set (default from "
                  "LATTICE_RAMSEY_BOUND or 24)");
  cmd->add_option("--workers", flags.workers,
                  "worker threads for the coloring search; affects wall "
                  "time only, never output")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--timeout-secs", flags.timeout_secs,
                  "abort the search after this many seconds");
}

ArrowOptions to_options(const RamseyFlags& flags) {
  return ArrowOptions{flags.bound, flags.workers, flags.timeout_secs};
}

struct TablesFile {
  int elems;
  std::vector<std::vector<int>> join, meet;
  int bottom, top;
};

TablesFile tables_from_json(const Json& j) {
  TablesFile t;
  if (!j.contains("elems") || !j["elems"].is_number_integer())
    throw ParseError("tables file needs an integer \"elems\"");
  t.elems = j["elems"].get<int>();
  auto read_table = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_array())
      throw ParseError(std::string("tables file needs an array \"") + name +
                       "\"");
    std::vector<std::vector<int>> table;
    for (const Json& row : j[name]) {
      std::vector<int> r;
      for (const Json& v : row) r.push_back(v.get<int>());
      table.push_back(std::move(r));
    }
    return table;
  };
  t.join = read_table("join");
  t.meet = read_table("meet");
  t.bottom = j.value("bottom", 0);
  t.top = j.value("top", t.elems - 1);
  return t;
}

int cmd_validate(const std::string& path, std::string kind,
                 const CommonFlags& flags, std::ostream& out) {
  Json input = load_json_file(path);
  if (kind == "auto") kind = detect_kind(input);
  Json report;
  report["valid"] = true;
  report["kind"] = kind;
  try {
    if (kind == "poset") {
      Poset p = poset_from_json(input, flags.allow_empty);
      report["n"] = p.size();
      report["covers"] = static_cast<int>(p.cover_pairs().size());
    } else if (kind == "ordered-poset") {
      LinearOrderedPoset p = ordered_poset_from_json(input, flags.allow_empty);
      report["n"] = p.poset.size();
      report["covers"] = static_cast<int>(p.poset.cover_pairs().size());
    } else if (kind == "lattice") {
      DistLattice l = lattice_from_json(input, flags.allow_trivial);
      report["elements"] = l.size();
      report["irreducibles"] =
          static_cast<int>(join_irreducible_elements(l).size());
    } else if (kind == "ordered-lattice") {
      NaturalOrder no = ordered_lattice_from_json(input, flags.allow_trivial);
      report["elements"] = no.lattice.size();
      report["irr_order"] = no.irr_sequence;
    } else if (kind == "tables") {
      TablesFile t = tables_from_json(input);
      TableIngest ingest = from_tables(t.elems, t.join, t.meet, t.bottom,
                                       t.top, flags.allow_trivial);
      report["elements"] = ingest.lattice.size();
      report["canonical"] = lattice_to_json(ingest.lattice);
      report["reindex"] = ingest.reindex;
    } else {
      throw ParseError("unknown kind \"" + kind + "\"");
    }
  } catch (const ValidationError& e) {
    Json bad;
    bad["valid"] = false;
    bad["kind"] = kind;
    bad["error"] = error_to_json(e, "ValidationError");
    emit(out, bad);
    return 2;
  }
  emit(out, report);
  return 0;
}

int cmd_dualize(const std::string& path, bool witness,
                const CommonFlags& flags, std::ostream& out) {
  Json input = load_json_file(path);
  const std::string kind = detect_kind(input);
  Json result;
  if (kind == "poset") {
    Poset q = poset_from_json(input, flags.allow_empty);
    result["kind"] = "lattice";
    result["lattice"] = lattice_to_json(o_object(q));
    if (witness) result["epsilon"] = epsilon_iso(q).table;
  } else if (kind == "ordered-poset") {
    LinearOrderedPoset q = ordered_poset_from_json(input, flags.allow_empty);
    result["kind"] = "ordered-lattice";
    result["lattice"] = ordered_lattice_to_json(ordered_o(q));
    if (witness) result["epsilon"] = epsilon_iso(q.poset).table;
  } else if (kind == "lattice") {
    DistLattice l = lattice_from_json(input, flags.allow_trivial);
    result["kind"] = "poset";
    result["poset"] = poset_to_json(j_object(l));
    if (witness) result["eta"] = eta_iso(l).table;
  } else if (kind == "ordered-lattice") {
    NaturalOrder no = ordered_lattice_from_json(input, flags.allow_trivial);
    result["kind"] = "ordered-poset";
    result["poset"] = ordered_poset_to_json(ordered_j(no));
    if (witness) result["eta"] = eta_iso(no.lattice).table;
  } else {
    throw ValidationError("dualize expects a poset or a lattice file");
  }
  emit(out, result);
  return 0;
}

int cmd_enumerate(const std::string& what,
                  const std::vector<std::string>& paths,
                  const CommonFlags& flags, std::ostream& out) {
  auto need_paths = [&](size_t n) {
    if (paths.size() != n)
      throw ValidationError("enumerate " + what + " expects " +
                            std::to_string(n) + " file argument(s)");
  };
  Json result;
  if (what == "downsets") {
    need_paths(1);
    Poset p = poset_from_json(load_json_file(paths[0]), flags.allow_empty);
    Json sets = Json::array();
    for (Mask m : down_sets(p)) sets.push_back(mask_to_bits(m, p.size()));
    result["count"] = sets.size();
    result["downsets"] = sets;
  } else if (what == "linear-extensions") {
    need_paths(1);
    Poset p = poset_from_json(load_json_file(paths[0]), flags.allow_empty);
    Json exts = Json::array();
    for (const auto& ext : linear_extensions(p)) exts.push_back(ext.positions);
    result["count"] = exts.size();
    result["extensions"] = exts;
  } else if (what == "congruences") {
    need_paths(1);
    DistLattice l =
        lattice_from_json(load_json_file(paths[0]), flags.allow_trivial);
    Json congruences = Json::array();
    for (const Congruence& phi : enumerate_congruences(l))
      congruences.push_back(congruence_to_json(phi));
    result["count"] = congruences.size();
    result["congruences"] = congruences;
  } else if (what == "natural-orders") {
    need_paths(1);
    DistLattice l =
        lattice_from_json(load_json_file(paths[0]), flags.allow_trivial);
    Json orders = Json::array();
    for (const NaturalOrder& no : enumerate_natural_orders(l))
      orders.push_back(natural_order_to_json(no));
    result["count"] = orders.size();
    result["orders"] = orders;
  } else if (what == "surjections") {
    need_paths(2);
    DistLattice l =
        lattice_from_json(load_json_file(paths[0]), flags.allow_trivial);
    DistLattice k =
        lattice_from_json(load_json_file(paths[1]), flags.allow_trivial);
    Json maps = Json::array();
    for (const LatticeHom& f : enumerate_surjective_homomorphisms(l, k))
      maps.push_back(f.map);
    result["count"] = maps.size();
    result["maps"] = maps;
  } else if (what == "positive-surjections") {
    need_paths(2);
    NaturalOrder lo =
        ordered_lattice_from_json(load_json_file(paths[0]),
                                  flags.allow_trivial);
    NaturalOrder ko =
        ordered_lattice_from_json(load_json_file(paths[1]),
                                  flags.allow_trivial);
    Json maps = Json::array();
    for (const PositiveHom& f : enumerate_positive_surjections(lo, ko))
      maps.push_back(f.hom.map);
    result["count"] = maps.size();
    result["maps"] = maps;
  } else {
    throw ValidationError("unknown enumeration \"" + what + "\"");
  }
  emit(out, result);
  return 0;
}

std::vector<bool> collapsed_to_json_ready(const std::vector<bool>& v) {
  return v;
}

int cmd_check_positive_hom(const std::string& source_path,
                           const std::string& target_path,
                           const std::string& hom_path,
                           const CommonFlags& flags, std::ostream& out) {
  NaturalOrder so = ordered_lattice_from_json(load_json_file(source_path),
                                              flags.allow_trivial);
  NaturalOrder to = ordered_lattice_from_json(load_json_file(target_path),
                                              flags.allow_trivial);
  LatticeHom f = hom_from_json(load_json_file(hom_path), so.lattice,
                               to.lattice, false);
  PositivityReport report = is_positive_homomorphism(f, so, to);
  Json result;
  result["positive"] = report.positive;
  Json collapsed = Json::array();
  const std::vector<bool> n = collapsed_set_hom(f);
  for (int x = 0; x < static_cast<int>(n.size()); ++x)
    if (n[x]) collapsed.push_back(x);
  result["collapsed"] = collapsed;
  if (!report.positive) result["counterexample"] = report.counterexample;
  emit(out, result);
  return 0;
}

int cmd_check_positive_congruence(const std::string& lattice_path,
                                  const std::string& congruence_path,
                                  const CommonFlags& flags,
                                  std::ostream& out) {
  NaturalOrder order = ordered_lattice_from_json(load_json_file(lattice_path),
                                                 flags.allow_trivial);
  Congruence phi =
      congruence_from_json(load_json_file(congruence_path), order.lattice);
  PositivityReport report = is_positive_congruence(phi, order);
  Json result;
  result["positive"] = report.positive;
  Json collapsed = Json::array();
  const std::vector<bool> n = collapsed_set_congruence(phi);
  for (int x = 0; x < static_cast<int>(n.size()); ++x)
    if (n[x]) collapsed.push_back(x);
  result["collapsed"] = collapsed;
  if (!report.positive) result["counterexample"] = report.counterexample;
  emit(out, result);
  return 0;
}

int cmd_check_natural_order(const std::string& lattice_path,
                            const std::string& candidate_path,
                            const CommonFlags& flags, std::ostream& out) {
  DistLattice l =
      lattice_from_json(load_json_file(lattice_path), flags.allow_trivial);
  Json cand = load_json_file(candidate_path);
  if (!cand.contains("elem_order") || !cand["elem_order"].is_array())
    throw ParseError("candidate file needs an \"elem_order\" array");
  std::vector<int> elems;
  for (const Json& v : cand["elem_order"]) elems.push_back(v.get<int>());
  auto irr = is_natural_order(l, elems);
  Json result;
  result["natural"] = irr.has_value();
  if (irr) result["irr_order"] = *irr;
  emit(out, result);
  return 0;
}

int cmd_check_lemma_suite(int max_size, const std::string& dir,
                          const CommonFlags& flags, std::ostream& out) {
  std::vector<Poset> posets;
  if (!dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files)
      posets.push_back(
          poset_from_json(load_json_file(file.string()), flags.allow_empty));
  } else {
    for (int n = 1; n <= max_size; ++n)
      for (Poset& p : enumerate_posets_up_to_iso(n, max_size))
        posets.push_back(std::move(p));
  }
  LemmaSuiteReport suite = run_lemma_suite(posets);
  LemmaSuiteReport tech = run_tech_suite(posets);
  Json result;
  result["posets"] = posets.size();
  Json checks;
  for (const auto& [name, count] : suite.checks) checks[name] = count;
  for (const auto& [name, count] : tech.checks) checks[name] = count;
  result["checks"] = checks;
  Json violations = Json::array();
  for (const auto& v : suite.violations) violations.push_back(v);
  for (const auto& v : tech.violations) violations.push_back(v);
  result["violations"] = violations;
  Json asymmetries = Json::array();
  for (const auto& a : suite.asymmetries) asymmetries.push_back(a);
  for (const auto& a : tech.asymmetries) asymmetries.push_back(a);
  result["asymmetries"] = asymmetries;
  emit(out, result);
  return violations.empty() ? 0 : 2;
}

int cmd_export_dot(const std::string& path, const CommonFlags& flags,
                   std::ostream& out) {
  Json input = load_json_file(path);
  const std::string kind = detect_kind(input);
  if (kind == "poset" || kind == "ordered-poset")
    out << poset_to_dot(poset_from_json(input, flags.allow_empty));
  else if (kind == "lattice" || kind == "ordered-lattice")
    out << lattice_to_dot(lattice_from_json(input, flags.allow_trivial));
  else
    throw ValidationError("export-dot expects a poset or a lattice file");
  return 0;
}

ArrowObject load_arrow_object(const std::string& flavor,
                              const std::string& path,
                              const CommonFlags& flags) {
  Json j = load_json_file(path);
  if (flavor == "p") return poset_from_json(j, flags.allow_empty);
  if (flavor == "p-ord") return ordered_poset_from_json(j, flags.allow_empty);
  if (flavor == "d-surj") return lattice_from_json(j, flags.allow_trivial);
  if (flavor == "d-pos")
    return ordered_lattice_from_json(j, flags.allow_trivial);
  throw ValidationError("unknown flavor \"" + flavor + "\"");
}

CategoryFlavor flavor_of(const std::string& name) {
  if (name == "p") return CategoryFlavor::PosetEmb;
  if (name == "p-ord") return CategoryFlavor::OrderedPosetEmb;
  if (name == "d-surj") return CategoryFlavor::LatticeSurj;
  if (name == "d-pos") return CategoryFlavor::OrderedLatticePos;
  throw ValidationError("unknown flavor \"" + name + "\"");
}

int cmd_ramsey_check(const std::string& flavor, const std::string& c_path,
                     const std::string& b_path, const std::string& a_path,
                     const RamseyFlags& rflags, const CommonFlags& flags,
                     std::ostream& out) {
  ArrowObject c = load_arrow_object(flavor, c_path, flags);
  ArrowObject b = load_arrow_object(flavor, b_path, flags);
  ArrowObject a = load_arrow_object(flavor, a_path, flags);
  ArrowCheck check = arrow_holds_hom(flavor_of(flavor), c, b, a, rflags.k,
                                     to_options(rflags));
  emit(out, certificate_to_json(check));
  return check.certificate.holds ? 0 : 3;
}

int cmd_ramsey_search(const std::string& b_path, const std::string& a_path,
                      int max_size, const RamseyFlags& rflags,
                      const CommonFlags& flags, std::ostream& out) {
  LinearOrderedPoset b =
      ordered_poset_from_json(load_json_file(b_path), flags.allow_empty);
  LinearOrderedPoset a =
      ordered_poset_from_json(load_json_file(a_path), flags.allow_empty);
  WitnessSearchResult result =
      find_ramsey_witness(b, a, rflags.k, max_size, to_options(rflags));
  Json j;
  j["witness"] = ordered_poset_to_json(result.witness);
  j["size"] = result.witness.poset.size();
  j["certificate"] = certificate_to_json(result.check);
  j["note"] = "first witness within the size bound; smaller sizes fail";
  emit(out, j);
  return 0;
}

int cmd_ramsey_transport(const std::string& a_path, const std::string& b_path,
                         const std::string& c_path, const RamseyFlags& rflags,
                         const CommonFlags& flags, std::ostream& out) {
  LinearOrderedPoset a =
      ordered_poset_from_json(load_json_file(a_path), flags.allow_empty);
  LinearOrderedPoset b =
      ordered_poset_from_json(load_json_file(b_path), flags.allow_empty);
  LinearOrderedPoset c =
      ordered_poset_from_json(load_json_file(c_path), flags.allow_empty);
  TransportResult result = transport_witness(a, b, c, rflags.k,
                                             to_options(rflags));
  Json j;
  j["oa"] = ordered_lattice_to_json(result.oa);
  j["ob"] = ordered_lattice_to_json(result.ob);
  j["oc"] = ordered_lattice_to_json(result.oc);
  j["certificate"] = certificate_to_json(result.check);
  emit(out, j);
  return result.check.certificate.holds ? 0 : 3;
}

int cmd_ramsey_congruence_form(const std::string& n_path,
                               const std::string& l_path,
                               const std::string& phi_path,
                               const RamseyFlags& rflags,
                               const CommonFlags& flags, std::ostream& out) {
  NaturalOrder n =
      ordered_lattice_from_json(load_json_file(n_path), flags.allow_trivial);
  NaturalOrder l =
      ordered_lattice_from_json(load_json_file(l_path), flags.allow_trivial);
  Congruence phi =
      congruence_from_json(load_json_file(phi_path), l.lattice);
  CongruenceArrowCheck check = dual_arrow_congruence_form(
      n, l, phi, rflags.k, to_options(rflags));
  emit(out, congruence_certificate_to_json(check));
  return check.certificate.holds ? 0 : 3;
}

int cmd_corpus(const std::string& dir, const std::string& out_dir,
               std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  Json cases = load_json_file((root / "cases.json").string());
  if (!cases.is_array()) throw ParseError("cases.json must be an array");
  if (!out_dir.empty()) fs::create_directories(out_dir);

  Json failed = Json::array();
  int total = 0;
  for (const Json& c : cases) {
    ++total;
    const std::string name = c.at("name").get<std::string>();
    std::vector<std::string> args;
    for (const Json& a : c.at("args")) {
      std::string arg = a.get<std::string>();
      // Tokens starting with "./" are file references inside the corpus dir.
      if (arg.rfind("./", 0) == 0)
        arg = (root / arg.substr(2)).string();
      args.push_back(std::move(arg));
    }
    const int expect_exit = c.value("expect_exit", 0);

    std::ostringstream actual_out, actual_err;
    int code = run_cli(args, actual_out, actual_err);
    if (!out_dir.empty()) {
      std::ofstream f(fs::path(out_dir) / (name + ".out"),
                      std::ios::binary);
      f << actual_out.str();
    }

    std::string reason;
    if (code != expect_exit)
      reason = "exit code " + std::to_string(code) + ", expected " +
               std::to_string(expect_exit);
    if (reason.empty() && c.contains("expected")) {
      const fs::path expected_path =
          root / c.at("expected").get<std::string>();
      std::ifstream f(expected_path, std::ios::binary);
      if (!f) {
        reason = "missing expected file " + expected_path.string();
      } else {
        std::ostringstream expected;
        expected << f.rdbuf();
        if (expected.str() != actual_out.str())
          reason = "output differs from " + expected_path.string();
      }
    }
    if (!reason.empty()) {
      Json failure;
      failure["name"] = name;
      failure["reason"] = reason;
      failed.push_back(failure);
    }
  }
  Json report;
  report["total"] = total;
  report["passed"] = total - static_cast<int>(failed.size());
  report["failed"] = failed;
  emit(out, report);
  return failed.empty() ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"verifiable engine for finite distributive lattices, finite "
               "posets, Birkhoff duality and Ramsey arrow checking"};
  app.require_subcommand(1);

  CommonFlags common;
  RamseyFlags rflags;

  // validate
  std::string validate_path, validate_kind = "auto";
  auto* validate = app.add_subcommand(
      "validate", "check a structure file, reporting the first violation");
  validate->add_option("path", validate_path, "JSON file")->required();
  validate->add_option("--kind", validate_kind,
                       "poset|ordered-poset|lattice|ordered-lattice|tables");
  add_common_flags(validate, common);

  // dualize
  std::string dualize_path;
  bool dualize_witness = false;
  auto* dualize = app.add_subcommand(
      "dualize", "swap a poset for its down-set lattice or a lattice for its "
                 "join-irreducible poset");
  dualize->add_option("path", dualize_path, "JSON file")->required();
  dualize->add_flag("--witness", dualize_witness,
                    "emit the eta/epsilon bijection");
  add_common_flags(dualize, common);

  // enumerate
  std::string enum_what;
  std::vector<std::string> enum_paths;
  auto* enumerate = app.add_subcommand("enumerate", "list derived structures");
  enumerate
      ->add_option("what", enum_what,
                   "downsets|linear-extensions|congruences|natural-orders|"
                   "surjections|positive-surjections")
      ->required();
  enumerate->add_option("paths", enum_paths, "input file(s)")->required();
  add_common_flags(enumerate, common);

  // check
  auto* check = app.add_subcommand("check", "run a property check");
  check->require_subcommand(1);
  std::string chk_source, chk_target, chk_hom, chk_lattice, chk_congruence,
      chk_candidate, chk_dir;
  int chk_max_size = 4;
  auto* chk_pos_hom = check->add_subcommand("positive-hom");
  chk_pos_hom->add_option("--source", chk_source)->required();
  chk_pos_hom->add_option("--target", chk_target)->required();
  chk_pos_hom->add_option("--hom", chk_hom)->required();
  add_common_flags(chk_pos_hom, common);
  auto* chk_pos_con = check->add_subcommand("positive-congruence");
  chk_pos_con->add_option("--lattice", chk_lattice)->required();
  chk_pos_con->add_option("--congruence", chk_congruence)->required();
  add_common_flags(chk_pos_con, common);
  auto* chk_nat = check->add_subcommand("natural-order");
  chk_nat->add_option("--lattice", chk_lattice)->required();
  chk_nat->add_option("--candidate", chk_candidate)->required();
  add_common_flags(chk_nat, common);
  auto* chk_suite = check->add_subcommand("lemma-suite");
  chk_suite->add_option("--max-size", chk_max_size,
                        "verify over all posets up to this size");
  chk_suite->add_option("--dir", chk_dir,
                        "verify over the poset files in this directory");
  add_common_flags(chk_suite, common);

  // export-dot
  std::string dot_path;
  auto* export_dot =
      app.add_subcommand("export-dot", "Hasse diagram in Graphviz DOT");
  export_dot->add_option("path", dot_path, "JSON file")->required();
  add_common_flags(export_dot, common);

  // ramsey
  auto* ramsey = app.add_subcommand("ramsey", "arrow checking and search");
  ramsey->require_subcommand(1);
  std::string rs_flavor = "p-ord", rs_a, rs_b, rs_c, rs_n, rs_l, rs_phi;
  int rs_max_size = config::poset_enum_bound();
  auto* rs_check = ramsey->add_subcommand("check", "decide one arrow");
  rs_check->add_option("--flavor", rs_flavor, "p|p-ord|d-surj|d-pos");
  rs_check->add_option("--C", rs_c)->required();
  rs_check->add_option("--B", rs_b)->required();
  rs_check->add_option("--A", rs_a)->required();
  add_ramsey_flags(rs_check, rflags);
  add_common_flags(rs_check, common);
  auto* rs_search = ramsey->add_subcommand(
      "search", "smallest ordered poset making the arrow hold");
  rs_search->add_option("--B", rs_b)->required();
  rs_search->add_option("--A", rs_a)->required();
  rs_search->add_option("--max-size", rs_max_size);
  add_ramsey_flags(rs_search, rflags);
  add_common_flags(rs_search, common);
  auto* rs_transport = ramsey->add_subcommand(
      "transport", "carry an ordered-poset triple across the duality and "
                   "re-verify the lattice arrow");
  rs_transport->add_option("--A", rs_a)->required();
  rs_transport->add_option("--B", rs_b)->required();
  rs_transport->add_option("--C", rs_c)->required();
  add_ramsey_flags(rs_transport, rflags);
  add_common_flags(rs_transport, common);
  auto* rs_congr = ramsey->add_subcommand(
      "congruence-form", "the arrow stated over positive congruences");
  rs_congr->add_option("--N", rs_n)->required();
  rs_congr->add_option("--L", rs_l)->required();
  rs_congr->add_option("--phi", rs_phi)->required();
  add_ramsey_flags(rs_congr, rflags);
  add_common_flags(rs_congr, common);

  // corpus
  std::string corpus_dir, corpus_out;
  auto* corpus = app.add_subcommand(
      "corpus", "run the golden-case corpus and compare outputs byte-wise");
  corpus->add_option("dir", corpus_dir, "corpus directory with cases.json")
      ->required();
  corpus->add_option("--out", corpus_out,
                     "also write each case's actual output here");

  std::vector<const char*> argv;
  argv.push_back("lattice-ramsey");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate)
      return cmd_validate(validate_path, validate_kind, common, out);
    if (*dualize) return cmd_dualize(dualize_path, dualize_witness, common, out);
    if (*enumerate) return cmd_enumerate(enum_what, enum_paths, common, out);
    if (*chk_pos_hom)
      return cmd_check_positive_hom(chk_source, chk_target, chk_hom, common,
                                    out);
    if (*chk_pos_con)
      return cmd_check_positive_congruence(chk_lattice, chk_congruence,
                                           common, out);
    if (*chk_nat)
      return cmd_check_natural_order(chk_lattice, chk_candidate, common, out);
    if (*chk_suite)
      return cmd_check_lemma_suite(chk_max_size, chk_dir, common, out);
    if (*export_dot) return cmd_export_dot(dot_path, common, out);
    if (*rs_check)
      return cmd_ramsey_check(rs_flavor, rs_c, rs_b, rs_a, rflags, common,
                              out);
    if (*rs_search)
      return cmd_ramsey_search(rs_b, rs_a, rs_max_size, rflags, common, out);
    if (*rs_transport)
      return cmd_ramsey_transport(rs_a, rs_b, rs_c, rflags, common, out);
    if (*rs_congr)
      return cmd_ramsey_congruence_form(rs_n, rs_l, rs_phi, rflags, common,
                                        out);
    if (*corpus) return cmd_corpus(corpus_dir, corpus_out, out);
    err << "no subcommand selected\n";
    return 2;
  } catch (const ResourceLimit& e) {
    Json j;
    j["error"] = error_to_json(e, "ResourceLimit");
    emit(out, j);
    return 4;
  } catch (const ValidationError& e) {
    Json j;
    j["error"] = error_to_json(e, "ValidationError");
    emit(out, j);
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace latram
