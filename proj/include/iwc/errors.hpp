#pragma once

#include <stdexcept>
#include <string>

namespace iwc {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct FieldModeMismatch : std::invalid_argument {
  explicit FieldModeMismatch(const std::string& what = "mixed field modes")
      : std::invalid_argument(what) {}
};

struct Singular : std::domain_error {
  explicit Singular(const std::string& what = "singular matrix") : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : std::invalid_argument(what) {}
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& name) : std::invalid_argument("unknown name: " + name) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidAlgebra : std::invalid_argument {
  explicit InvalidAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by match_catalog when two candidates share a fingerprint.
struct Ambiguous : std::runtime_error {
  explicit Ambiguous(const std::string& what) : std::runtime_error(what) {}
};

struct OrderMismatch : std::invalid_argument {
  explicit OrderMismatch(const std::string& what = "variable or monomial order mismatch")
      : std::invalid_argument(what) {}
};

struct StructureMismatch : std::invalid_argument {
  explicit StructureMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace iwc
