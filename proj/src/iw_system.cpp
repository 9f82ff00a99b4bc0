#include "iwc/iw_system.hpp"

#include <cctype>

#include "iwc/errors.hpp"

namespace iwc {

const char* inverse_mode_name(InverseMode m) { return m == InverseMode::Cofactor ? "cofactor" : "explicit"; }

std::string a_var(std::size_t row, std::size_t col) { return "a" + std::to_string(row) + std::to_string(col); }
std::string b_var(std::size_t row, std::size_t col) { return "b" + std::to_string(row) + std::to_string(col); }

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

Poly det(const PolyMatrix& m, MonomialOrder o) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1, o);
  if (n == 1) return m[0][0];
  Poly out(o);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * det(minor, o);
    out = c % 2 ? out - term : out + term;
  }
  return out;
}

PolyMatrix a_matrix(const Ideal& ring, std::size_t n) {
  PolyMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(ring.var(a_var(r + 1, c + 1)));
  return a;
}

PolyMatrix b_matrix(const Ideal& ring, std::size_t n) {
  PolyMatrix b(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b[r].push_back(ring.var(b_var(r + 1, c + 1)));
  return b;
}

// adj(A)_{k,k'} = (-1)^{k+k'} det(A without row k', column k).
PolyMatrix adjugate(const PolyMatrix& a, MonomialOrder o) {
  const std::size_t n = a.size();
  PolyMatrix adj(n, std::vector<Poly>(n, Poly(o)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t kp = 0; kp < n; ++kp) {
      PolyMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == kp) continue;
        std::vector<Poly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != k) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Poly d = det(minor, o);
      adj[k][kp] = (k + kp) % 2 ? -d : d;
    }
  return adj;
}

bool needs_imag_unit(const StructureTensor& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k)
        if (!t(i, j, k).is_real()) return true;
  return false;
}

Poly scalar_poly(const Scalar& s, const Ideal& ring) {
  Poly p = ring.constant(s.re());
  if (!s.is_real()) p += ring.var("I").scaled(s.im());
  return p;
}

// L_ijk for all triples with s <= 0, using the given inverse entries.
std::vector<Poly> limit_equations_with(const StructureTensor& source, const StructureTensor& target,
                                       const Signature& sig, const Ideal& ring, const PolyMatrix& a,
                                       const PolyMatrix& b) {
  const std::size_t n = source.dim();
  const MonomialOrder o = ring.order;
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) any |= sig[i] + sig[j] - sig[k] <= 0;
      if (!any) continue;
      // Q^{k'} = sum_{i'<j'} c^{k'}_{i'j'} (a^{i'}_i a^{j'}_j - a^{j'}_i a^{i'}_j)
      std::vector<Poly> q(n, Poly(o));
      for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t jp = ip + 1; jp < n; ++jp) {
          bool nz = false;
          for (std::size_t kp = 0; kp < n; ++kp) nz |= !source(ip, jp, kp).is_zero();
          if (!nz) continue;
          Poly minor = a[ip][i] * a[jp][j] - a[jp][i] * a[ip][j];
          for (std::size_t kp = 0; kp < n; ++kp)
            if (!source(ip, jp, kp).is_zero()) q[kp] += minor * scalar_poly(source(ip, jp, kp), ring);
        }
      for (std::size_t k = 0; k < n; ++k) {
        const int s = sig[i] + sig[j] - sig[k];
        if (s > 0) continue;
        Poly l(o);
        for (std::size_t kp = 0; kp < n; ++kp)
          if (!q[kp].is_zero()) l += b[k][kp] * q[kp];
        if (s == 0 && !target(i, j, k).is_zero()) l -= scalar_poly(target(i, j, k), ring);
        out.push_back(std::move(l));
      }
    }
  return out;
}

}  // namespace

std::vector<Poly> limit_equations(const StructureTensor& source, const StructureTensor& target,
                                  const Signature& sig, const Ideal& ring) {
  const std::size_t n = source.dim();
  return limit_equations_with(source, target, sig, ring, a_matrix(ring, n), b_matrix(ring, n));
}

Ideal generate_iw_system(const StructureTensor& source, const StructureTensor& target, const Signature& sig,
                         InverseMode mode) {
  const std::size_t n = source.dim();
  if (target.dim() != n || sig.size() != n) throw DimensionMismatch("source, target and signature sizes differ");
  Ideal ring;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c) ring.vars.add(a_var(r, c));
  if (mode == InverseMode::Explicit)
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t c = 1; c <= n; ++c) ring.vars.add(b_var(r, c));
  const bool gaussian = needs_imag_unit(source) || needs_imag_unit(target);
  if (gaussian) ring.vars.add("I");

  const MonomialOrder o = ring.order;
  PolyMatrix a = a_matrix(ring, n);
  PolyMatrix b = mode == InverseMode::Explicit ? b_matrix(ring, n) : adjugate(a, o);
  for (auto& p : limit_equations_with(source, target, sig, ring, a, b)) ring.add(p);
  if (mode == InverseMode::Cofactor) {
    ring.add(det(a, o) - ring.constant(1));
  } else {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Poly e(o);
        for (std::size_t m = 0; m < n; ++m) e += a[r][m] * b[m][c];
        if (r == c) e -= ring.constant(1);
        ring.add(e);
      }
  }
  if (gaussian) ring.add(ring.var("I") * ring.var("I") + ring.constant(1));
  ring.notes["kind"] = "generated";
  ring.notes["signature"] = sig.str();
  ring.notes["inverse"] = inverse_mode_name(mode);
  return ring;
}

namespace {

Ideal fixture_ring(bool with_b, const std::vector<std::string>& extra) {
  Ideal ring;
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 4; ++c) ring.vars.add(a_var(r, c));
  if (with_b)
    for (std::size_t r = 1; r <= 4; ++r)
      for (std::size_t c = 1; c <= 4; ++c) ring.vars.add(b_var(r, c));
  for (const auto& e : extra) ring.vars.add(e);
  return ring;
}

// A B = I and t det A = 1.
void close_inverse(Ideal& ring) {
  PolyMatrix a = a_matrix(ring, 4), b = b_matrix(ring, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Poly e(ring.order);
      for (std::size_t m = 0; m < 4; ++m) e += a[r][m] * b[m][c];
      if (r == c) e -= ring.constant(1);
      ring.add(e);
    }
  ring.add(ring.var("t") * det(a, ring.order) - ring.constant(1));
}

Ideal g32_regime(bool second) {
  Ideal ring = fixture_ring(true, {"t"});
  auto v = [&](const std::string& s) { return ring.var(s); };
  auto a = [&](int r, int c) { return v(a_var(r, c)); };
  auto b = [&](int r, int c) { return v(b_var(r, c)); };
  const Poly one = ring.constant(1);
  // Y = [[a12 a24 - a22 a14, a13 a24 - a23 a14], [a32 a44 - a42 a34, a33 a44 - a43 a34]]
  Poly y[2][2] = {{a(1, 2) * a(2, 4) - a(2, 2) * a(1, 4), a(1, 3) * a(2, 4) - a(2, 3) * a(1, 4)},
                  {a(3, 2) * a(4, 4) - a(4, 2) * a(3, 4), a(3, 3) * a(4, 4) - a(4, 3) * a(3, 4)}};
  const int rhs[2][2] = {{1, 1}, {0, 1}};
  if (!second) {
    Poly m1 = a(1, 1) * a(2, 4) - a(2, 1) * a(1, 4);
    Poly m2 = a(3, 1) * a(4, 4) - a(4, 1) * a(3, 4);
    for (int r = 1; r <= 3; ++r) ring.add(b(r, 1) * m1 + b(r, 3) * m2);
  }
  const int rows[2] = {2, 3};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      ring.add(b(rows[r], 1) * y[0][c] + b(rows[r], 3) * y[1][c] - one.scaled(rhs[r][c]));
  if (second)
    for (int c = 1; c <= 3; ++c)
      ring.add(a(2, 4) * b(1, 1) * a(1, c) - a(1, 4) * b(1, 1) * a(2, c) + a(4, 4) * b(1, 3) * a(3, c) -
               a(3, 4) * b(1, 3) * a(4, c));
  close_inverse(ring);
  ring.notes["kind"] = "fixture";
  ring.notes["source"] = "2g2.1";
  ring.notes["target"] = "g1+g3.2";
  if (!second) {
    ring.notes["signature"] = "1,2,2,0";
    ring.notes["transcription"] =
        "the minors a11a24-a21a14 and a31a44-a41a34 enter as a pair";
  } else {
    ring.notes["signature"] = "3,2,2,0";
  }
  ring.notes["auxiliary"] = "proportionality factors of the hand reduction are eliminated, not kept as variables";
  return ring;
}

Ideal g41(const std::string& which) {
  Ideal ring = fixture_ring(true, {"t"});
  auto v = [&](const std::string& s) { return ring.var(s); };
  auto a = [&](int r, int c) { return v(a_var(r, c)); };
  auto b = [&](int r, int c) { return v(b_var(r, c)); };
  const Poly one = ring.constant(1);
  ring.notes["kind"] = "fixture";
  ring.notes["source"] = "2g2.1";
  ring.notes["target"] = "g4.1";
  if (which == "2101") {
    for (int c : {1, 2, 4})
      ring.add(a(2, 3) * b(1, 1) * a(1, c) - a(1, 3) * b(1, 1) * a(2, c) + a(4, 3) * b(1, 3) * a(3, c) -
               a(3, 3) * b(1, 3) * a(4, c));
    Poly y[2][2] = {{a(1, 2) * a(2, 3) - a(2, 2) * a(1, 3), a(1, 3) * a(2, 4) - a(2, 3) * a(1, 4)},
                    {a(3, 2) * a(4, 3) - a(4, 2) * a(3, 3), a(3, 3) * a(4, 4) - a(4, 3) * a(3, 4)}};
    const int rows[3] = {1, 2, 4};
    const int rhs[3][2] = {{0, 0}, {0, 1}, {0, 0}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c)
        ring.add(b(rows[r], 1) * y[0][c] + b(rows[r], 3) * y[1][c] - one.scaled(rhs[r][c]));
    ring.add((a(1, 2) * a(2, 4) - a(2, 2) * a(1, 4)) * b(1, 1) + (a(3, 2) * a(4, 4) - a(4, 2) * a(3, 4)) * b(1, 3) -
             one);
    ring.notes["signature"] = "2,1,0,1";
    ring.notes["transcription"] = "ten equations; two repeat others up to sign";
  } else {
    Poly y1 = a(1, 3) * a(2, 4) - a(2, 3) * a(1, 4);
    Poly y2 = a(3, 3) * a(4, 4) - a(4, 3) * a(3, 4);
    ring.add(b(1, 1) * y1 + b(1, 3) * y2);
    ring.add(b(2, 1) * y1 + b(2, 3) * y2 - one);
    ring.add((a(1, 2) * a(2, 4) - a(2, 2) * a(1, 4)) * b(1, 1) + (a(3, 2) * a(4, 4) - a(4, 2) * a(3, 4)) * b(1, 3) -
             one);
    if (which == "3211") {
      ring.add((a(1, 2) * a(2, 3) - a(2, 2) * a(1, 3)) * b(1, 1) + (a(3, 2) * a(4, 3) - a(4, 2) * a(3, 3)) * b(1, 3));
      ring.notes["signature"] = "3,2,1,1";
    } else {
      ring.notes["signature"] = "4,3,2,1";
    }
  }
  close_inverse(ring);
  return ring;
}

// With u = column 2, c = column 3, d = column 4 of A restricted to rows
// 1..3: u x c = x1 c, x1 a43 = 0, u + x2 c = c x d, a42 + x2 a43 = 0.
Ideal so3_2101() {
  Ideal ring = fixture_ring(false, {"x1", "x2", "t"});
  auto a = [&](int r, int c) { return ring.var(a_var(r, c)); };
  Poly x1 = ring.var("x1"), x2 = ring.var("x2");
  auto cross = [&](int p, int q, int comp) {
    int r1 = (comp + 1) % 3 + 1, r2 = (comp + 2) % 3 + 1;
    return a(r1, p) * a(r2, q) - a(r2, p) * a(r1, q);
  };
  for (int comp = 0; comp < 3; ++comp) ring.add(cross(2, 3, comp) - x1 * a(comp + 1, 3));
  ring.add(x1 * a(4, 3));
  for (int comp = 0; comp < 3; ++comp) ring.add(a(comp + 1, 2) + x2 * a(comp + 1, 3) - cross(3, 4, comp));
  ring.add(a(4, 2) + x2 * a(4, 3));
  ring.add(ring.var("t") * det(a_matrix(ring, 4), ring.order) - ring.constant(1));
  ring.notes["kind"] = "fixture";
  ring.notes["source"] = "so3+A1";
  ring.notes["target"] = "A4.1";
  ring.notes["signature"] = "2,1,0,1";
  ring.notes["transcription"] =
      "rows 1, 2, 4 of the matrix identity B Y = G are multiplied through by A using A B = I, which introduces "
      "the virtual unknowns x1 and x2 for the unconstrained third row";
  return ring;
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"G32-regime1", "G32-regime2", "G41-4321", "G41-3211", "G41-2101", "SO3-2101"};
}

Ideal load_fixture(const std::string& id) {
  Ideal out;
  if (id == "G32-regime1") out = g32_regime(false);
  else if (id == "G32-regime2") out = g32_regime(true);
  else if (id == "G41-4321") out = g41("4321");
  else if (id == "G41-3211") out = g41("3211");
  else if (id == "G41-2101") out = g41("2101");
  else if (id == "SO3-2101") out = so3_2101();
  else throw UnknownName(id);
  out.notes["id"] = id;
  return out;
}

Poly transfer(const Poly& p, const VarList& from, const Ideal& to) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Term n{Monomial{}, t.c};
    for (std::size_t v = 0; v < from.size(); ++v)
      if (t.m.e[v]) n.m.e[to.vars.index(from.names()[v])] = t.m.e[v];
    n.m.refresh();
    terms.push_back(std::move(n));
  }
  return Poly::from_terms(std::move(terms), to.order);
}

bool in_linear_span(const Poly& p, const std::vector<Poly>& polys) {
  std::vector<Monomial> monos;
  auto index_of = [&](const Monomial& m) {
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (monos[k] == m) return k;
    monos.push_back(m);
    return monos.size() - 1;
  };
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> cols;
  std::vector<const Poly*> all;
  for (const auto& g : polys) all.push_back(&g);
  all.push_back(&p);
  for (const Poly* q : all) {
    cols.emplace_back();
    for (const auto& t : q->terms()) cols.back().push_back({index_of(t.m), t.c});
  }
  auto rank_of = [&](std::size_t ncols) {
    Matrix m(monos.size(), ncols);
    for (std::size_t c = 0; c < ncols; ++c)
      for (const auto& [r, v] : cols[c]) m(r, c) = Scalar(v);
    return m.rank();
  };
  return rank_of(polys.size()) == rank_of(polys.size() + 1);
}

std::vector<std::size_t> fixture_outside_span(const Ideal& fixture, const Ideal& generated,
                                              std::vector<std::size_t>* skipped) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < fixture.gens.size(); ++k) {
    Poly moved;
    try {
      moved = transfer(fixture.gens[k], fixture.vars, generated);
    } catch (const UnknownName&) {
      if (skipped) skipped->push_back(k);
      continue;
    }
    if (!in_linear_span(moved, generated.gens)) out.push_back(k);
  }
  return out;
}

std::vector<Scalar> assignment_for(const Ideal& ideal, const Matrix& a, const std::map<std::string, Scalar>& extra) {
  const std::size_t n = a.rows();
  const Scalar d = a.determinant();
  if (d.is_zero()) throw Singular("A is singular");
  const Matrix ainv = a.inverse();
  std::vector<Scalar> point;
  for (const auto& name : ideal.vars.names()) {
    if (auto it = extra.find(name); it != extra.end()) {
      point.push_back(it->second);
      continue;
    }
    if ((name[0] == 'a' || name[0] == 'b') && name.size() == 3 && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
      std::size_t r = name[1] - '1', c = name[2] - '1';
      if (r >= n || c >= n) throw DimensionMismatch("matrix too small for " + name);
      point.push_back(name[0] == 'a' ? a(r, c) : ainv(r, c));
    } else if (name == "t") {
      point.push_back(d.inverse());
    } else if (name == "I") {
      point.push_back(Scalar::imag_unit());
    } else {
      throw UnknownName("no value for variable " + name);
    }
  }
  return point;
}

Matrix matrix_from_assignment(const Ideal& ideal, const std::vector<Scalar>& point, std::size_t n) {
  Field f = Field::Rational;
  for (const auto& s : point)
    if (!s.is_real()) f = Field::Gaussian;
  Matrix m(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = point.at(ideal.vars.index(a_var(r + 1, c + 1))).in(f);
  return m;
}

}  // namespace iwc
