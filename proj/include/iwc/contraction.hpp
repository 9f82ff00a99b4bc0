#pragma once

#include <optional>
#include <string>
#include <variant>

#include "iwc/algebra.hpp"
#include "iwc/eps.hpp"
#include "iwc/json_io.hpp"
#include "iwc/matrix.hpp"
#include "iwc/signature.hpp"

namespace iwc {

enum class Classification { Trivial, Improper, Proper };
const char* classification_name(Classification c);  // "trivial" | "improper" | "proper"

struct ContractionResult {
  StructureTensor tensor;
  Classification classification = Classification::Trivial;
  std::optional<std::string> matched;
};

/// A transformed structure constant with negative order at eps = 0.
struct NoLimit {
  std::size_t i = 0, j = 0, k = 0;  // 1-based
  int order = 0;
  std::string str() const;
};

using LimitOutcome = std::variant<ContractionResult, NoLimit>;

inline bool has_limit(const LimitOutcome& o) { return std::holds_alternative<ContractionResult>(o); }

/// Generalized IW data U_eps = A diag(eps^alpha) P.
struct IWSpec {
  Matrix a;
  Signature sig;
  std::optional<Matrix> p;  // identity when absent

  EpsMatrix contraction_matrix(Field f) const;
};

/// Classifies a limit against its source; the name lookup uses the default
/// candidates for the tensor's field and is left empty on ambiguity.
ContractionResult classify(const StructureTensor& source, StructureTensor limit);

/// Entry c_ij^k survives when alpha_i + alpha_j = alpha_k, vanishes when
/// the sum is larger, and diverges when smaller.
LimitOutcome iw_limit_diagonal(const StructureTensor& t, const Signature& sig);

/// Exact transformed constants U^i_i' U^j_j' (U^-1)^k'_k c_ij^k, then the
/// entrywise limit. Throws Singular.
LimitOutcome contract_with_matrix(const StructureTensor& t, const EpsMatrix& u);

/// Same without classification; used by property tests and the scan.
std::variant<StructureTensor, NoLimit> limit_tensor(const StructureTensor& t, const EpsMatrix& u);

enum class VerifyStatus { Success, NoLimit, MatchFailed };
const char* verify_status_name(VerifyStatus s);

struct VerificationReport {
  std::string source;
  std::string expected;
  IWSpec spec;
  VerifyStatus status = VerifyStatus::MatchFailed;
  std::optional<ContractionResult> result;
  std::optional<NoLimit> divergence;
  Fingerprint expected_fingerprint;
  std::optional<Fingerprint> result_fingerprint;

  bool success() const { return status == VerifyStatus::Success; }
  json to_json() const;
};

/// Throws Singular when A or P is singular.
VerificationReport verify_iw(const StructureTensor& t, const IWSpec& spec, const std::string& expected,
                             const std::string& source_name = "");

}  // namespace iwc
