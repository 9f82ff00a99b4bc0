#pragma once

#include <string>
#include <vector>

namespace iwc {

/// Exponent tuple (alpha_1, ..., alpha_n) of W_eps = diag(eps^alpha_i).
/// Order matters for a contraction (it pairs with the canonical basis);
/// comparison between signatures goes through the normalized form.
struct Signature {
  std::vector<int> exponents;

  Signature() = default;
  explicit Signature(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }

  /// Non-increasing sort, then division by the gcd of the nonzero entries.
  Signature normalized() const;
  bool is_normalized() const { return normalized() == *this; }
  /// Every entry in {0, 1} after normalization.
  bool is_simple() const;
  Signature scaled(int k) const;

  /// "3,2,1,1"
  std::string str() const;
  static Signature parse(const std::string& s);

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Minimality order: lexicographic comparison of normalized tuples.
bool signature_less(const Signature& a, const Signature& b);

/// Strict-weak order for normalized signatures, usable with std::sort.
struct SignatureOrder {
  bool operator()(const Signature& a, const Signature& b) const { return signature_less(a, b); }
};

}  // namespace iwc
