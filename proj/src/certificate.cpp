#include "iwc/certificate.hpp"

#include <algorithm>

#include "iwc/errors.hpp"

namespace iwc {

const char* certify_mode_name(CertifyMode m) { return m == CertifyMode::Complex ? "complex" : "real-branch-so3"; }

const char* certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 0: return "FeasibleWitness";
    case 1: return "ComplexInfeasible";
    case 2: return "RealBranch";
    case 3: return "RealSquares";
    default: return "Inconclusive";
  }
}

bool is_conclusive(const Certificate& c) { return !std::holds_alternative<Inconclusive>(c); }

bool refutes(const Certificate& c) { return is_conclusive(c) && !std::holds_alternative<FeasibleWitness>(c); }

namespace {

const char* const kColumn[3] = {"a13", "a23", "a33"};

void require_real_branch_shape(const Ideal& ideal) {
  for (const char* v : {"x1", "a13", "a23", "a33"})
    if (!ideal.vars.has(v)) throw StructureMismatch(std::string("real-branch certificate needs variable ") + v);
}

Poly third_column_norm(const Ideal& ideal) {
  Poly s(ideal.order);
  for (const char* v : kColumn) s += ideal.var(v) * ideal.var(v);
  return s;
}

bool satisfies(const Ideal& ideal, const std::vector<Scalar>& point) {
  if (point.size() != ideal.vars.size()) return false;
  for (const auto& g : ideal.gens)
    if (!g.eval(point).is_zero()) return false;
  return true;
}

}  // namespace

Poly real_branch_product(const Ideal& ideal) {
  require_real_branch_shape(ideal);
  return ideal.var("x1") * third_column_norm(ideal);
}

Ideal x1_branch_ideal(const Ideal& ideal) {
  require_real_branch_shape(ideal);
  if (ideal.vars.has("s")) throw StructureMismatch("variable s is reserved for the branch ideal");
  Ideal out = ideal;
  out.vars.add("s");
  return out.with({out.var("x1"), out.var("s") * third_column_norm(out) - out.constant(1)});
}

Ideal column_branch_ideal(const Ideal& ideal) {
  require_real_branch_shape(ideal);
  return ideal.with({ideal.var("a13"), ideal.var("a23"), ideal.var("a33")});
}

Ideal x1_only_ideal(const Ideal& ideal) {
  require_real_branch_shape(ideal);
  return ideal.with({ideal.var("x1")});
}

std::optional<ComplexInfeasible> prove_unit(const Ideal& ideal, const GroebnerOptions& opts, std::size_t* pairs) {
  GroebnerOptions o = opts;
  o.stop_on_unit = true;
  o.record_trace = true;
  GroebnerResult r = buchberger(ideal, o);
  if (pairs) *pairs = r.pair_reductions;
  if (!r.unit) return std::nullopt;
  return ComplexInfeasible{std::move(r.trace), std::move(r.basis)};
}

bool check_unit(const Ideal& ideal, const ComplexInfeasible& c) {
  if (c.basis.size() != 1 || !c.basis[0].is_constant() || c.basis[0].is_zero()) return false;
  auto elems = replay_trace(ideal, c.trace);
  if (!elems) return false;
  if (!c.trace.empty()) return elems->back().is_constant() && !elems->back().is_zero();
  return std::any_of(elems->begin(), elems->end(), [](const Poly& p) { return p.is_constant() && !p.is_zero(); });
}

std::optional<Membership> prove_membership(const Ideal& ideal, const Poly& target, const GroebnerOptions& opts) {
  GroebnerOptions o = opts;
  o.stop_on_unit = true;
  o.record_trace = true;
  GroebnerResult r = buchberger(ideal, o);
  if (!r.complete) return std::nullopt;
  const Poly t = target.in(ideal.order);
  if (r.unit) {
    // 1 in I: reducing by the unit itself finishes.
    auto elems = replay_trace(ideal, r.trace);
    std::size_t unit_id = r.trace.empty() ? 0 : elems->size() - 1;
    if (r.trace.empty())
      while (!(*elems)[unit_id].is_constant() || (*elems)[unit_id].is_zero()) ++unit_id;
    return Membership{t, std::move(r.trace), {unit_id}};
  }
  auto replayed = replay_trace(ideal, r.derivation);
  if (!replayed) return std::nullopt;
  std::vector<Poly> active;
  for (auto id : r.active) active.push_back((*replayed)[id]);
  std::vector<std::size_t> used;
  if (!reduce(t, active, &used).is_zero()) return std::nullopt;
  std::vector<std::size_t> targets;
  for (auto u : used) targets.push_back(r.active[u]);
  if (targets.empty()) return Membership{t, {}, {}};
  PrunedTrace pt = prune_trace(r.derivation, ideal.gens.size(), targets);
  std::vector<std::size_t> reducers;
  for (auto id : targets) reducers.push_back(pt.renumber[id]);
  return Membership{t, std::move(pt.trace), std::move(reducers)};
}

bool check_membership(const Ideal& ideal, const Membership& m) {
  if (m.target.order() != ideal.order) return false;
  auto elems = replay_trace(ideal, m.trace);
  if (!elems) return false;
  std::vector<Poly> reducers;
  for (auto r : m.reducers) {
    if (r >= elems->size()) return false;
    reducers.push_back((*elems)[r]);
  }
  return reduce(m.target, reducers).is_zero();
}

Certificate certify(const Ideal& ideal, CertifyMode mode, const GroebnerOptions& opts,
                    const std::vector<Scalar>* witness_hint) {
  if (mode == CertifyMode::RealBranch) {
    require_real_branch_shape(ideal);
    auto product = prove_membership(ideal, real_branch_product(ideal), opts);
    if (!product) return Inconclusive{"x1 |v|^2 not shown to lie in the ideal within budget", 0};
    std::size_t pairs = 0;
    auto x1 = prove_unit(x1_branch_ideal(ideal), opts, &pairs);
    if (!x1) return Inconclusive{"x1 = 0 branch not refuted", pairs};
    auto col = prove_unit(column_branch_ideal(ideal), opts, &pairs);
    if (!col) return Inconclusive{"v = 0 branch not refuted", pairs};
    return RealBranch{std::move(*product), std::move(*x1), std::move(*col)};
  }
  if (witness_hint && satisfies(ideal, *witness_hint)) return FeasibleWitness{*witness_hint};
  GroebnerOptions o = opts;
  o.stop_on_unit = true;
  o.record_trace = true;
  GroebnerResult r = buchberger(ideal, o);
  if (r.unit) return ComplexInfeasible{std::move(r.trace), std::move(r.basis)};
  if (!r.complete) return Inconclusive{"pair budget exhausted", r.pair_reductions};
  return Inconclusive{"complete basis without unit: complex solutions exist, no witness", r.pair_reductions};
}

bool is_square_sum(const Poly& p) {
  if (p.is_zero()) return false;
  for (const auto& t : p.terms()) {
    if (sgn(t.c) <= 0 || t.m.deg != 2) return false;
    bool square = false;
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (t.m.e[v] == 2) square = true;
    if (!square) return false;
  }
  return true;
}

Ideal vanishing_ideal(const Ideal& ideal, const std::vector<Poly>& square_sums) {
  std::vector<Poly> extra;
  for (std::size_t v = 0; v < ideal.vars.size(); ++v)
    for (const auto& p : square_sums)
      if (p.uses_var(v)) {
        extra.push_back(Poly::var(v, ideal.order));
        break;
      }
  return ideal.with(extra);
}

Certificate certify_real(const Ideal& ideal, const GroebnerOptions& opts) {
  GroebnerOptions o = opts;
  o.record_trace = true;
  GroebnerResult r = buchberger(ideal, o);
  if (!r.complete) return Inconclusive{"pair budget exhausted", r.pair_reductions};
  if (r.unit) return ComplexInfeasible{std::move(r.trace), std::move(r.basis)};
  std::vector<Poly> sums;
  for (const auto& b : r.basis)
    if (is_square_sum(b)) sums.push_back(b);
  if (sums.empty()) return Inconclusive{"complex solutions exist and no sum of squares lies in the basis", r.pair_reductions};
  RealSquares cert;
  for (const auto& p : sums) {
    auto m = prove_membership(ideal, p, opts);
    if (!m) return Inconclusive{"sum of squares membership not reproduced", r.pair_reductions};
    cert.squares.push_back(std::move(*m));
  }
  auto unit = prove_unit(vanishing_ideal(ideal, sums), opts);
  if (!unit) return Inconclusive{"complex solutions survive the vanishing of the squared variables", r.pair_reductions};
  cert.vanish = std::move(*unit);
  return cert;
}

bool check_certificate(const Ideal& ideal, const Certificate& c) {
  if (auto* w = std::get_if<FeasibleWitness>(&c)) return satisfies(ideal, w->point);
  if (auto* u = std::get_if<ComplexInfeasible>(&c)) return check_unit(ideal, *u);
  if (auto* rb = std::get_if<RealBranch>(&c)) {
    try {
      if (rb->product.target != real_branch_product(ideal)) return false;
      return check_membership(ideal, rb->product) && check_unit(x1_branch_ideal(ideal), rb->x1_branch) &&
             check_unit(column_branch_ideal(ideal), rb->column_branch);
    } catch (const StructureMismatch&) {
      return false;
    }
  }
  if (auto* rs = std::get_if<RealSquares>(&c)) {
    if (rs->squares.empty()) return false;
    std::vector<Poly> sums;
    for (const auto& m : rs->squares) {
      if (!is_square_sum(m.target) || !check_membership(ideal, m)) return false;
      sums.push_back(m.target);
    }
    return check_unit(vanishing_ideal(ideal, sums), rs->vanish);
  }
  return false;
}

json poly_to_json(const Poly& p, std::size_t nvars) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) e[v] = t.m.e[v];
    out.push_back({{"exponents", e}, {"coeff", t.c.get_str()}});
  }
  return out;
}

Poly poly_from_json(const json& j, std::size_t nvars, MonomialOrder o) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    const auto& e = t.at("exponents");
    if (!e.is_array() || e.size() != nvars) throw ParseError("exponent vector has the wrong length");
    Term term;
    for (std::size_t v = 0; v < nvars; ++v) {
      int x = e[v].get<int>();
      if (x < 0 || x > 255) throw ParseError("exponent out of range");
      term.m.e[v] = static_cast<std::uint8_t>(x);
    }
    term.m.refresh();
    try {
      term.c = mpq_class(t.at("coeff").get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient");
    }
    term.c.canonicalize();
    terms.push_back(std::move(term));
  }
  return Poly::from_terms(std::move(terms), o);
}

json ideal_to_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(poly_to_json(g, ideal.vars.size()));
  return {{"variables", ideal.vars.names()}, {"order", order_name(ideal.order)}, {"generators", gens},
          {"notes", ideal.notes}};
}

Ideal ideal_from_json(const json& j) {
  Ideal out;
  for (const auto& n : j.at("variables")) out.vars.add(n.get<std::string>());
  if (out.vars.size() > kMaxVars) throw ParseError("too many variables");
  out.order = parse_order(j.value("order", std::string("degrevlex")));
  for (const auto& g : j.at("generators")) out.gens.push_back(poly_from_json(g, out.vars.size(), out.order));
  if (j.contains("notes")) out.notes = j.at("notes").get<std::map<std::string, std::string>>();
  return out;
}

namespace {

json trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"i", s.i}, {"j", s.j}, {"reducers", s.reducers}});
  return out;
}

std::vector<TraceStep> trace_from_json(const json& j) {
  std::vector<TraceStep> out;
  for (const auto& s : j)
    out.push_back({s.at("i").get<std::size_t>(), s.at("j").get<std::size_t>(),
                   s.at("reducers").get<std::vector<std::size_t>>()});
  return out;
}

json unit_to_json(const ComplexInfeasible& c, std::size_t nvars) {
  json basis = json::array();
  for (const auto& b : c.basis) basis.push_back(poly_to_json(b, nvars));
  return {{"trace", trace_to_json(c.trace)}, {"basis", basis}};
}

ComplexInfeasible unit_from_json(const json& j, std::size_t nvars, MonomialOrder o) {
  ComplexInfeasible c;
  c.trace = trace_from_json(j.at("trace"));
  for (const auto& b : j.at("basis")) c.basis.push_back(poly_from_json(b, nvars, o));
  return c;
}

json membership_to_json(const Membership& m, std::size_t nvars) {
  return {{"target", poly_to_json(m.target, nvars)}, {"trace", trace_to_json(m.trace)}, {"reducers", m.reducers}};
}

Membership membership_from_json(const json& j, std::size_t nvars, MonomialOrder o) {
  return {poly_from_json(j.at("target"), nvars, o), trace_from_json(j.at("trace")),
          j.at("reducers").get<std::vector<std::size_t>>()};
}

}  // namespace

json certificate_to_json(const Certificate& c, const Ideal& ideal) {
  const std::size_t n = ideal.vars.size();
  json out = {{"kind", certificate_kind(c)}, {"variables", ideal.vars.names()}};
  if (auto* w = std::get_if<FeasibleWitness>(&c)) {
    json pt = json::object();
    for (std::size_t k = 0; k < n && k < w->point.size(); ++k) pt[ideal.vars.names()[k]] = w->point[k].str();
    out["point"] = pt;
  } else if (auto* u = std::get_if<ComplexInfeasible>(&c)) {
    out.update(unit_to_json(*u, n));
  } else if (auto* rb = std::get_if<RealBranch>(&c)) {
    out["product"] = membership_to_json(rb->product, n);
    out["x1_branch"] = unit_to_json(rb->x1_branch, n + 1);
    out["column_branch"] = unit_to_json(rb->column_branch, n);
  } else if (auto* rs = std::get_if<RealSquares>(&c)) {
    json sq = json::array();
    for (const auto& m : rs->squares) sq.push_back(membership_to_json(m, n));
    out["squares"] = sq;
    out["vanish"] = unit_to_json(rs->vanish, n);
  } else {
    const auto& i = std::get<Inconclusive>(c);
    out["reason"] = i.reason;
    out["pair_reductions"] = i.pair_reductions;
  }
  return out;
}

Certificate certificate_from_json(const json& j, const Ideal& ideal) {
  const std::size_t n = ideal.vars.size();
  const std::string kind = j.at("kind").get<std::string>();
  if (j.at("variables").get<std::vector<std::string>>() != ideal.vars.names())
    throw StructureMismatch("certificate variables differ from the ideal's");
  if (kind == "FeasibleWitness") {
    Field f = Field::Rational;
    for (const auto& [k, v] : j.at("point").items())
      if (v.get<std::string>().find('i') != std::string::npos) f = Field::Gaussian;
    FeasibleWitness w;
    for (const auto& name : ideal.vars.names()) w.point.push_back(Scalar::parse(j.at("point").at(name), f));
    return w;
  }
  if (kind == "ComplexInfeasible") return unit_from_json(j, n, ideal.order);
  if (kind == "RealBranch") {
    RealBranch rb;
    rb.product = membership_from_json(j.at("product"), n, ideal.order);
    rb.x1_branch = unit_from_json(j.at("x1_branch"), n + 1, ideal.order);
    rb.column_branch = unit_from_json(j.at("column_branch"), n, ideal.order);
    return rb;
  }
  if (kind == "RealSquares") {
    RealSquares rs;
    for (const auto& m : j.at("squares")) rs.squares.push_back(membership_from_json(m, n, ideal.order));
    rs.vanish = unit_from_json(j.at("vanish"), n, ideal.order);
    return rs;
  }
  if (kind == "Inconclusive") return Inconclusive{j.at("reason"), j.at("pair_reductions")};
  throw ParseError("unknown certificate kind " + kind);
}

}  // namespace iwc
