#pragma once

#include <vector>

#include "iwc/algebra.hpp"
#include "iwc/matrix.hpp"
#include "iwc/signature.hpp"

namespace iwc {

struct DerivationBasis {
  std::size_t n = 0;
  /// Linearly independent n x n matrices spanning Der(g); the matrix acts on
  /// column vectors, so column j is the image of e_j.
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Exact null space of the n^2-unknown derivation system.
DerivationBasis derivation_basis(const StructureTensor& t);

bool is_derivation(const StructureTensor& t, const Matrix& gamma);

/// Integer tuples alpha with diag(alpha) in Der(g) in the canonical basis.
/// That set is the kernel of the integer matrix whose rows are
/// e_i + e_j - e_k for each nonzero c_ij^k.
class DiagonalLattice {
 public:
  explicit DiagonalLattice(const StructureTensor& t);

  std::size_t n() const { return n_; }
  /// Rows e_i + e_j - e_k (deduplicated).
  const std::vector<std::vector<long>>& constraints() const { return constraints_; }
  /// Z-basis of the kernel lattice.
  const std::vector<std::vector<long>>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  /// Membership through the lattice basis: alpha must be an integer
  /// combination of basis vectors.
  bool contains(const std::vector<long>& alpha) const;

  /// Every tuple of the lattice with 0 <= alpha_i <= max_exp, in
  /// lexicographic order of the raw tuple.
  std::vector<std::vector<long>> in_box(long max_exp) const;

 private:
  std::size_t n_;
  std::vector<std::vector<long>> constraints_;
  std::vector<std::vector<long>> basis_;
};

/// One representative per class (coordinate permutation plus positive
/// rescaling) of the box points of the diagonal lattice. The representative
/// is the first raw tuple of the class in lexicographic order whose entries
/// are coprime, so it is itself a diagonal derivation in the canonical basis.
std::vector<Signature> admissible_signatures(const StructureTensor& t, long max_exp);

/// Every raw box tuple of the lattice whose normalized class equals sig's.
/// These are the orderings under which a contraction with P = I can realize
/// the class.
std::vector<Signature> admissible_orderings(const StructureTensor& t, const Signature& sig);

}  // namespace iwc
