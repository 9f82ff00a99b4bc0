#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwc/matrix.hpp"
#include "iwc/scalar.hpp"

namespace iwc {

/// Structure constants c[i][j][k] = coefficient of e_k in [e_i, e_j].
/// Indices are 0-based internally; everything user-facing is 1-based.
class StructureTensor {
 public:
  static constexpr std::size_t kMaxDim = 8;

  StructureTensor() = default;
  StructureTensor(std::size_t n, Field f = Field::Rational);

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }

  /// Sets [e_i, e_j] component k and its antisymmetric partner (0-based).
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  /// Matrix of ad e_i acting on column vectors: (ad e_i)(k, j) = c[i][j][k].
  Matrix ad(std::size_t i) const;

  bool is_abelian() const;
  StructureTensor in(Field f) const;

  struct Bracket {
    std::size_t i, j, k;  // 1-based, i < j
    Scalar c;
  };
  /// Nonzero constants with i < j, in lexicographic (i, j, k) order.
  std::vector<Bracket> brackets() const;
  /// Human-readable "[e1,e2]=e1, [e3,e4]=e3" form.
  std::string str() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  Field field_ = Field::Rational;
  std::vector<Scalar> c_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::vector<std::size_t> where;  // 1-based: (i,j,k) or (i,j,k,k')
  Scalar value;
  std::string str() const;
};

/// Empty iff antisymmetry and the Jacobi identity hold exactly.
std::vector<Violation> validate(const StructureTensor& t);

/// c'_{i'j'}^{k'} = u^i_{i'} u^j_{j'} (u^-1)^{k'}_k c_{ij}^k, i.e. the algebra
/// written in the basis formed by the columns of U. Throws Singular.
StructureTensor change_basis(const StructureTensor& t, const Matrix& u);

/// Basis-independent invariants used to tell catalog algebras apart.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_series;  // dims until stable, starting with dim
  std::vector<std::size_t> lower_central;   // same for the lower central series
  std::size_t center = 0;
  std::size_t killing_rank = 0;
  /// (positive, negative) inertia of the Killing form; rational mode only.
  std::optional<std::pair<std::size_t, std::size_t>> killing_inertia;
  bool unimodular = false;
  std::size_t derivations = 0;  // dim Der
  /// Adjoint action on the derived algebra K: dim of {ad_x|K}, dim of its
  /// commutant in gl(K), and when that space is a line, the scale-free
  /// ratios c_j^k / c_k^j of the characteristic polynomial of a generator
  /// (k the first index with c_k != 0).
  std::size_t action_dim = 0;
  std::size_t action_commutant = 0;
  std::vector<Scalar> action_spectrum;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const StructureTensor& t);

struct CatalogEntry {
  std::string name;
  StructureTensor tensor;
  std::string source;
};

/// Canonical-basis tensor of a named algebra. With a field argument the
/// constants are re-tagged in that field (all shipped constants are rational).
CatalogEntry catalog_get(const std::string& name);
CatalogEntry catalog_get(const std::string& name, Field f);
/// Primary names (aliases excluded).
std::vector<std::string> catalog_names();
/// Names that belong to the real or complex classification lists.
std::vector<std::string> catalog_names(Field f, std::size_t dim);
/// Resolves aliases to the primary name; throws UnknownName.
std::string catalog_resolve(const std::string& name);

/// Unique candidate with the same fingerprint (candidates evaluated in the
/// field of t). Empty candidates means every catalog entry of matching field
/// and dimension. Throws Ambiguous if two distinct entries match.
std::optional<std::string> match_catalog(const StructureTensor& t,
                                         const std::vector<std::string>& candidates = {});

}  // namespace iwc
