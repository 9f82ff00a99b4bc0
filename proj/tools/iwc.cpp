#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "iwc/certificate.hpp"
#include "iwc/contraction.hpp"
#include "iwc/derivations.hpp"
#include "iwc/errors.hpp"
#include "iwc/iw_system.hpp"
#include "iwc/search.hpp"

using namespace iwc;

namespace {

enum Exit { Confirmed = 0, Refuted = 1, BadInput = 2, Undecided = 3 };

struct Global {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t restarts = 2000;
  std::size_t budget = kDefaultPairBudget;
};

Global g;

std::size_t env_budget() {
  if (const char* s = std::getenv("IWC_BUDGET")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(std::string("IWC_BUDGET is not a number: ") + s);
    }
  }
  return kDefaultPairBudget;
}

GroebnerOptions groebner() {
  GroebnerOptions o;
  o.max_pair_reductions = g.budget;
  return o;
}

SearchOptions search() {
  SearchOptions o;
  o.restarts = g.restarts;
  o.seed = g.seed;
  return o;
}

void emit(const json& j, const std::string& text) {
  if (g.json) {
    json out = j;
    out["schema_version"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// A catalog name or a JSON file.
StructureTensor load_algebra(const std::string& spec, std::string* name = nullptr) {
  if (std::filesystem::exists(spec)) return algebra_from_json(read_json_file(spec), name);
  auto e = catalog_get(spec);
  if (name) *name = e.name;
  return e.tensor;
}

Matrix load_matrix(const std::string& path, Field f) { return matrix_from_json(read_json_file(path), f); }

int worse(int a, int b) {
  if (a == Refuted || b == Refuted) return Refuted;
  return a == Undecided || b == Undecided ? Undecided : Confirmed;
}

const char* outcome(int code) { return code == Confirmed ? "confirmed" : code == Refuted ? "refuted" : "inconclusive"; }

// ---------------------------------------------------------------- catalog

int cmd_catalog_list() {
  json list = json::array();
  std::ostringstream os;
  for (const auto& name : catalog_names()) {
    auto e = catalog_get(name);
    list.push_back({{"name", e.name}, {"dim", e.tensor.dim()}, {"field", field_name(e.tensor.field())},
                    {"source", e.source}});
    os << name << "  dim " << e.tensor.dim() << "  " << field_name(e.tensor.field()) << "  " << e.source << "\n";
  }
  emit({{"algebras", list}}, os.str());
  return Confirmed;
}

int cmd_catalog_show(const std::string& name) {
  auto e = catalog_get(name);
  auto fp = fingerprint(e.tensor);
  json j = algebra_to_json(e.tensor, e.name);
  j["source"] = e.source;
  j["fingerprint"] = fp.str();
  std::ostringstream os;
  os << e.name << " (" << field_name(e.tensor.field()) << ", dim " << e.tensor.dim() << ")\n"
     << e.tensor.str() << "\n"
     << "fingerprint: " << fp.str() << "\n"
     << "basis: " << e.source << "\n";
  emit(j, os.str());
  return Confirmed;
}

int cmd_validate(const std::string& path) {
  json in = read_json_file(path);
  std::string name;
  try {
    auto t = algebra_from_json(in, &name);
    const std::string fp = fingerprint(t).str();
    emit({{"file", path}, {"valid", true}, {"name", name}, {"fingerprint", fp}},
         path + ": valid Lie algebra, " + fp + "\n");
    return Confirmed;
  } catch (const InvalidAlgebra& e) {
    emit({{"file", path}, {"valid", false}, {"reason", e.what()}}, path + ": " + e.what() + "\n");
    return Refuted;
  }
}

// ---------------------------------------------------------------- contract

int cmd_contract(const std::string& algebra, const std::string& matrix, const std::string& sig_text) {
  std::string name;
  auto t = load_algebra(algebra, &name);
  Signature sig = sig_text.empty() ? Signature(std::vector<int>(t.dim(), 0)) : Signature::parse(sig_text);
  if (sig.size() != t.dim()) throw DimensionMismatch("signature length differs from the algebra dimension");
  LimitOutcome out = matrix.empty() ? iw_limit_diagonal(t, sig)
                                    : contract_with_matrix(t, IWSpec{load_matrix(matrix, t.field()), sig, std::nullopt}
                                                                  .contraction_matrix(t.field()));
  json j{{"algebra", name}, {"signature", sig.exponents}};
  if (auto* bad = std::get_if<NoLimit>(&out)) {
    j["limit_exists"] = false;
    j["divergence"] = {{"i", bad->i}, {"j", bad->j}, {"k", bad->k}, {"order", bad->order}};
    emit(j, bad->str() + "\n");
    return Refuted;
  }
  const auto& r = std::get<ContractionResult>(out);
  j["limit_exists"] = true;
  j["limit"] = brackets_to_json(r.tensor);
  j["classification"] = classification_name(r.classification);
  j["matched"] = r.matched ? json(*r.matched) : json(nullptr);
  std::ostringstream os;
  os << "limit: " << r.tensor.str() << "\n"
     << "classification: " << classification_name(r.classification) << "\n"
     << "matches: " << r.matched.value_or("(no unique catalog match)") << "\n";
  emit(j, os.str());
  return Confirmed;
}

// ---------------------------------------------------------------- derivations

int cmd_derivations(const std::string& algebra) {
  std::string name;
  auto t = load_algebra(algebra, &name);
  auto der = derivation_basis(t);
  DiagonalLattice lat(t);
  json basis = json::array();
  for (const auto& m : der.basis) basis.push_back(to_json(m));
  std::ostringstream os;
  os << "Der(" << name << ") has dimension " << der.dim() << "\n";
  for (std::size_t k = 0; k < der.basis.size(); ++k) os << "D" << k + 1 << " =\n" << der.basis[k].str() << "\n";
  os << "diagonal derivations (lattice basis):";
  for (const auto& v : lat.basis()) {
    os << " (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  }
  os << "\n";
  emit({{"algebra", name}, {"dim", der.dim()}, {"basis", basis}, {"diagonal_lattice", lat.basis()}}, os.str());
  return Confirmed;
}

int cmd_signatures(const std::string& algebra, int max_exp) {
  if (max_exp < 0) throw ParseError("--max must be nonnegative");
  std::string name;
  auto t = load_algebra(algebra, &name);
  json list = json::array();
  std::ostringstream os;
  for (const auto& s : admissible_signatures(t, max_exp)) {
    list.push_back(s.exponents);
    os << s.str() << "\n";
  }
  emit({{"algebra", name}, {"max_exp", max_exp}, {"signatures", list}}, os.str());
  return Confirmed;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& source, const std::string& target, const std::string& matrix,
               const std::string& p_file, const std::string& sig_text) {
  std::string name;
  auto t = load_algebra(source, &name);
  IWSpec spec{load_matrix(matrix, t.field()), Signature::parse(sig_text), std::nullopt};
  if (!p_file.empty()) spec.p = load_matrix(p_file, t.field());
  auto rep = verify_iw(t, spec, target, name);
  std::ostringstream os;
  os << verify_status_name(rep.status) << "\n";
  if (rep.result) os << "limit: " << rep.result->tensor.str() << "\n";
  if (rep.divergence) os << "divergence: " << rep.divergence->str() << "\n";
  os << "expected fingerprint: " << rep.expected_fingerprint.str() << "\n";
  if (rep.result_fingerprint) os << "limit fingerprint:    " << rep.result_fingerprint->str() << "\n";
  emit(rep.to_json(), os.str());
  return rep.success() ? Confirmed : Refuted;
}

// ---------------------------------------------------------------- certify

const Matrix& known_g41_witness() {
  static const Matrix a = Matrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}});
  return a;
}

bool solves(const Ideal& sys, const std::vector<Scalar>& pt) {
  for (const auto& p : sys.gens)
    if (!p.eval(pt).is_zero()) return false;
  return true;
}

// Point of the system for matrix a, also trying a with its first column
// divided by det a (cofactor systems fix the determinant).
std::optional<std::vector<Scalar>> point_for(const Ideal& sys, const Matrix& a) {
  auto pt = assignment_for(sys, a);
  if (solves(sys, pt)) return pt;
  Matrix m = a;
  Scalar d = a.determinant();
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, 0) = m(r, 0) / d;
  pt = assignment_for(sys, m);
  if (solves(sys, pt)) return pt;
  return std::nullopt;
}

struct Generate {
  std::string source, target;
  Signature sig;
};

Generate parse_generate(const std::string& s) {
  auto a = s.find(','), b = a == std::string::npos ? a : s.find(',', a + 1);
  if (b == std::string::npos) throw ParseError("--generate expects SOURCE,TARGET,a,b,c,d");
  return {s.substr(0, a), s.substr(a + 1, b - a - 1), Signature::parse(s.substr(b + 1))};
}

int cmd_certify(const std::string& fixture, const std::string& generate, const std::string& inverse, bool real_branch,
                bool real, std::string expect) {
  if (fixture.empty() == generate.empty()) throw ParseError("give exactly one of --fixture and --generate");
  Ideal sys;
  std::optional<std::vector<Scalar>> hint;
  std::string label;
  if (!fixture.empty()) {
    sys = load_fixture(fixture);
    label = fixture;
    if (fixture == "G41-3211" || fixture == "G41-4321") {
      hint = point_for(sys, known_g41_witness());
      if (expect.empty()) expect = "feasible";
    }
  } else {
    auto gen = parse_generate(generate);
    auto src = catalog_get(gen.source).tensor, tgt = catalog_get(gen.target, src.field()).tensor;
    InverseMode mode = inverse == "explicit" ? InverseMode::Explicit : InverseMode::Cofactor;
    if (inverse != "explicit" && inverse != "cofactor") throw ParseError("--inverse is cofactor or explicit");
    sys = generate_iw_system(src, tgt, gen.sig, mode);
    label = gen.source + " -> " + gen.target + " at " + gen.sig.str();
    auto found = find_matrix(src, gen.target, gen.sig, search());
    if (found.witness) hint = point_for(sys, *found.witness);
  }
  if (expect.empty()) expect = "infeasible";
  if (expect != "feasible" && expect != "infeasible") throw ParseError("--expect is feasible or infeasible");

  Certificate c;
  if (hint)
    c = FeasibleWitness{*hint};
  else if (real_branch)
    c = certify(sys, CertifyMode::RealBranch, groebner());
  else if (real)
    c = certify_real(sys, groebner());
  else
    c = certify(sys, CertifyMode::Complex, groebner());
  const bool checked = check_certificate(sys, c);

  int code = Undecided;
  if (is_conclusive(c) && checked) {
    const bool feasible = std::holds_alternative<FeasibleWitness>(c);
    code = feasible == (expect == "feasible") ? Confirmed : Refuted;
  }
  std::ostringstream os;
  os << label << ": " << certificate_kind(c) << (checked ? " (re-checked)" : "") << "\n";
  if (auto* inc = std::get_if<Inconclusive>(&c))
    os << "reason: " << inc->reason << " after " << inc->pair_reductions << " pair reductions\n";
  if (auto* u = std::get_if<ComplexInfeasible>(&c)) os << "unit derived in " << u->trace.size() << " steps\n";
  os << "claim " << expect << ": "
     << outcome(code) << "\n";
  emit({{"system", label},
        {"ideal", ideal_to_json(sys)},
        {"certificate", certificate_to_json(c, sys)},
        {"checked", checked},
        {"claim", expect},
        {"outcome", outcome(code)}},
       os.str());
  return code;
}

// ---------------------------------------------------------------- scan

std::string scan_text(const ScanReport& r) {
  std::ostringstream os;
  os << r.source << " -> " << r.target << ", exponents <= " << r.max_exp << ", " << (r.real ? "real" : "complex")
     << " mode over " << field_name(r.field) << "\n";
  for (const auto& e : r.entries) {
    os << "  (" << e.signature.str() << ") " << scan_status_name(e.status);
    for (const auto& c : e.certificates) os << " [" << certificate_kind(c) << "]";
    if (!e.note.empty()) os << "  " << e.note;
    os << "\n";
  }
  os << "minimal: " << (r.minimal ? "(" + r.minimal->str() + ")" : std::string("none")) << "\n";
  return os.str();
}

ScanOptions scan_options(bool real, Field f) {
  ScanOptions o;
  o.search = search();
  o.groebner = groebner();
  o.real = real;
  o.field = f;
  return o;
}

bool has_inconclusive(const ScanReport& r) {
  for (const auto& e : r.entries)
    if (e.status == ScanStatus::Inconclusive) return true;
  return false;
}

int cmd_scan(const std::string& source, const std::string& target, int max_exp, bool real, const std::string& field) {
  if (max_exp < 0) throw ParseError("--max must be nonnegative");
  Field f = field.empty() ? catalog_get(source).tensor.field() : parse_field(field);
  auto o = scan_options(real, f);
  auto r = minimality_scan(source, target, max_exp, o);
  const bool ok = check_scan_report(r, o) && r.simple_fact_consistent;
  json j = r.to_json();
  j["checked"] = ok;
  emit(j, scan_text(r));
  if (!ok) return Refuted;
  return has_inconclusive(r) ? Undecided : Confirmed;
}

// ---------------------------------------------------------------- reproduce

struct Pair {
  const char* source;
  const char* target;
  bool real;
  Field field;
};

int reproduce_empty(const std::string& claim, const std::vector<Pair>& pairs) {
  int code = Confirmed;
  json scans = json::array();
  std::ostringstream os;
  for (const auto& p : pairs) {
    auto o = scan_options(p.real, p.field);
    auto r = minimality_scan(p.source, p.target, 3, o);
    const bool ok = check_scan_report(r, o);
    scans.push_back(r.to_json());
    os << scan_text(r);
    code = worse(code, !ok || !r.feasible().empty() ? Refuted : has_inconclusive(r) ? Undecided : Confirmed);
  }
  os << claim << ": " << outcome(code) << "\n";
  emit({{"claim", claim}, {"scans", scans}, {"exit", code}}, os.str());
  return code;
}

int reproduce_minimality() {
  const Signature target({3, 2, 1, 1});
  const std::vector<Pair> pairs{{"2g2.1", "g4.1", false, Field::Gaussian},
                                {"2A2.1", "A4.1", true, Field::Rational},
                                {"A4.10", "A4.1", true, Field::Rational},
                                {"so3+A1", "A4.1", true, Field::Rational}};
  int code = Confirmed;
  json scans = json::array();
  std::ostringstream os;
  for (const auto& p : pairs) {
    auto o = scan_options(p.real, p.field);
    auto r = minimality_scan(p.source, p.target, 3, o);
    const bool ok = check_scan_report(r, o);
    scans.push_back(r.to_json());
    os << scan_text(r);
    bool below_refuted = true;
    for (const auto& e : r.entries)
      if (signature_less(e.signature, target) && e.status == ScanStatus::Inconclusive) below_refuted = false;
    if (!ok || !r.minimal || !(*r.minimal == target)) code = worse(code, below_refuted || !ok ? Refuted : Undecided);
  }
  json witnesses = json::array();
  struct Known {
    const char* source;
    const char* target;
    Matrix a;
  };
  for (const Known& k : {Known{"2g2.1", "g4.1", known_g41_witness()}, Known{"2A2.1", "A4.1", known_g41_witness()},
                         Known{"so3+A1", "A4.1",
                               Matrix::from_rows({{0, 0, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}})}}) {
    auto t = catalog_get(k.source).tensor;
    auto rep = verify_iw(t, IWSpec{k.a.in(t.field()), target, std::nullopt}, k.target, k.source);
    witnesses.push_back(rep.to_json());
    os << "witness " << k.source << " -> " << k.target << " at (3,2,1,1): " << verify_status_name(rep.status) << "\n";
    if (!rep.success()) code = Refuted;
  }
  os << "minimal signature (3,2,1,1): "
     << outcome(code) << "\n";
  emit({{"claim", "minimal signature (3,2,1,1)"}, {"scans", scans}, {"witnesses", witnesses}, {"exit", code}},
       os.str());
  return code;
}

int cmd_reproduce(const std::string& what) {
  if (what == "theorem1")
    return reproduce_empty("no generalized IW-contraction 2g2.1 -> g1+g3.2",
                           {{"2g2.1", "g1+g3.2", false, Field::Gaussian}});
  if (what == "corollary1")
    return reproduce_empty("no generalized IW-contraction onto A1+A3.2 from 2A2.1 or A4.10",
                           {{"2A2.1", "A1+A3.2", true, Field::Rational}, {"A4.10", "A1+A3.2", true, Field::Rational}});
  if (what == "theorem3") return reproduce_minimality();
  throw ParseError("unknown reproduction: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inonu-Wigner contraction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed of the random matrix search");
  app.add_option("--restarts", g.restarts, "random candidates per signature");
  auto* budget = app.add_option("--budget", g.budget, "pair reductions per Groebner run (default: IWC_BUDGET)");

  auto* catalog = app.add_subcommand("catalog", "list or show catalog algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog algebras");
  std::string show_name;
  catalog->add_subcommand("show", "print one algebra")->add_option("name", show_name)->required();

  std::string file;
  app.add_subcommand("validate", "check an algebra JSON file")->add_option("file", file)->required();

  auto* contract = app.add_subcommand("contract", "limit of a generalized IW-contraction");
  std::string algebra, matrix, sig;
  contract->add_option("--algebra", algebra, "catalog name or JSON file")->required();
  contract->add_option("--matrix", matrix, "JSON matrix file (A; default identity)");
  contract->add_option("--signature", sig, "exponents a,b,c,d");

  std::string der_name;
  app.add_subcommand("derivations", "derivation algebra")->add_option("name", der_name)->required();

  auto* sigs = app.add_subcommand("signatures", "admissible signatures");
  std::string sig_name;
  int max_exp = 3;
  sigs->add_option("name", sig_name)->required();
  sigs->add_option("--max", max_exp, "largest exponent");

  auto* verify = app.add_subcommand("verify", "check a contraction against a target");
  std::string source, target, p_file;
  verify->add_option("--source", source)->required();
  verify->add_option("--target", target)->required();
  verify->add_option("--matrix", matrix)->required();
  verify->add_option("--signature", sig)->required();
  verify->add_option("--p", p_file, "JSON matrix file for P");

  auto* cert = app.add_subcommand("certify", "certificate for a polynomial system");
  std::string fixture, generate, inverse = "cofactor", expect;
  bool real_branch = false, real = false;
  cert->add_option("--fixture", fixture, "shipped fixture id");
  cert->add_option("--generate", generate, "SOURCE,TARGET,a,b,c,d");
  cert->add_option("--inverse", inverse, "cofactor or explicit");
  cert->add_flag("--real-branch", real_branch, "real-branch argument for the so(3) column system");
  cert->add_flag("--real", real, "accept real certificates (sums of squares)");
  cert->add_option("--expect", expect, "feasible or infeasible");

  auto* scan = app.add_subcommand("scan", "minimality scan");
  std::string field;
  scan->add_option("--source", source)->required();
  scan->add_option("--target", target)->required();
  scan->add_option("--max", max_exp, "largest exponent");
  scan->add_flag("--real", real, "real mode");
  scan->add_option("--field", field, "Q or Q(i)");

  std::string what;
  app.add_subcommand("reproduce", "theorem1, corollary1 or theorem3")->add_option("what", what)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BadInput;
  }

  try {
    if (budget->count() == 0) g.budget = env_budget();
    if (catalog->parsed()) {
      if (catalog->got_subcommand("list")) return cmd_catalog_list();
      return cmd_catalog_show(show_name);
    }
    if (app.got_subcommand("validate")) return cmd_validate(file);
    if (contract->parsed()) return cmd_contract(algebra, matrix, sig);
    if (app.got_subcommand("derivations")) return cmd_derivations(der_name);
    if (sigs->parsed()) return cmd_signatures(sig_name, max_exp);
    if (verify->parsed()) return cmd_verify(source, target, matrix, p_file, sig);
    if (cert->parsed()) return cmd_certify(fixture, generate, inverse, real_branch, real, expect);
    if (scan->parsed()) return cmd_scan(source, target, max_exp, real, field);
    return cmd_reproduce(what);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
}
