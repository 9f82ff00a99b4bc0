#include "iwc/contraction.hpp"

#include <sstream>
#include <stdexcept>

namespace iwc {

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Trivial: return "trivial";
    case Classification::Improper: return "improper";
    case Classification::Proper: return "proper";
  }
  return "?";
}

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Success: return "success";
    case VerifyStatus::NoLimit: return "no-limit";
    case VerifyStatus::MatchFailed: return "match-failed";
  }
  return "?";
}

std::string NoLimit::str() const {
  std::ostringstream os;
  os << "no limit: constant (" << i << "," << j << "," << k << ") has order " << order;
  return os.str();
}

EpsMatrix IWSpec::contraction_matrix(Field f) const {
  const std::size_t n = a.rows();
  if (!a.square() || sig.size() != n) throw DimensionMismatch("IW spec sizes disagree");
  if (p && (p->rows() != n || !p->square())) throw DimensionMismatch("P size");
  if (a.in(f).determinant().is_zero()) throw Singular("A is singular");
  EpsMatrix u = EpsMatrix::from_constant(a.in(f)) * EpsMatrix::diag_powers(sig.exponents, f);
  if (p) {
    if (p->in(f).determinant().is_zero()) throw Singular("P is singular");
    u = u * EpsMatrix::from_constant(p->in(f));
  }
  return u;
}

ContractionResult classify(const StructureTensor& source, StructureTensor limit) {
  ContractionResult r;
  if (limit.is_abelian()) r.classification = Classification::Trivial;
  else if (fingerprint(limit) == fingerprint(source)) r.classification = Classification::Improper;
  else r.classification = Classification::Proper;
  try {
    r.matched = match_catalog(limit);
  } catch (const Ambiguous&) {
  }
  r.tensor = std::move(limit);
  return r;
}

LimitOutcome iw_limit_diagonal(const StructureTensor& t, const Signature& sig) {
  const std::size_t n = t.dim();
  if (sig.size() != n) throw DimensionMismatch("signature length");
  StructureTensor out(n, t.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t(i, j, k);
        if (c.is_zero()) continue;
        int s = sig[i] + sig[j] - sig[k];
        if (s < 0) return NoLimit{i + 1, j + 1, k + 1, s};
        if (s == 0) out.set_bracket(i, j, k, c);
      }
  return classify(t, std::move(out));
}

std::variant<StructureTensor, NoLimit> limit_tensor(const StructureTensor& t, const EpsMatrix& u) {
  const std::size_t n = t.dim();
  if (u.n() != n) throw DimensionMismatch("contraction matrix size");
  const Field f = t.field();
  const EpsMatrix uinv = u.inverse();

  struct Entry {
    std::size_t i, j, k;
    EpsRational c;
  };
  std::vector<Entry> nz;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) nz.push_back({i, j, k, EpsRational(t(i, j, k))});

  StructureTensor out(n, f);
  std::vector<EpsRational> partial(n, EpsRational(Scalar::zero(f)));
  for (std::size_t ip = 0; ip < n; ++ip)
    for (std::size_t jp = ip + 1; jp < n; ++jp) {
      for (auto& x : partial) x = EpsRational(Scalar::zero(f));
      for (const auto& e : nz) {
        const EpsRational& ui = u(e.i, ip);
        const EpsRational& uj = u(e.j, jp);
        if (ui.is_zero() || uj.is_zero()) continue;
        partial[e.k] = partial[e.k] + ui * uj * e.c;
      }
      for (std::size_t kp = 0; kp < n; ++kp) {
        EpsRational v(Scalar::zero(f));
        for (std::size_t k = 0; k < n; ++k)
          if (!partial[k].is_zero() && !uinv(kp, k).is_zero()) v = v + uinv(kp, k) * partial[k];
        auto lim = v.limit_at_zero();
        if (!lim) return NoLimit{ip + 1, jp + 1, kp + 1, *v.ord_at_zero()};
        if (!lim->is_zero()) out.set_bracket(ip, jp, kp, *lim);
      }
    }
  if (!validate(out).empty()) throw std::logic_error("contraction limit violates the Jacobi identity");
  return out;
}

LimitOutcome contract_with_matrix(const StructureTensor& t, const EpsMatrix& u) {
  auto r = limit_tensor(t, u);
  if (auto* nl = std::get_if<NoLimit>(&r)) return *nl;
  return classify(t, std::get<StructureTensor>(std::move(r)));
}

VerificationReport verify_iw(const StructureTensor& t, const IWSpec& spec, const std::string& expected,
                             const std::string& source_name) {
  VerificationReport rep;
  rep.source = source_name;
  rep.expected = catalog_resolve(expected);
  rep.spec = spec;
  const StructureTensor target = catalog_get(rep.expected, t.field()).tensor;
  if (target.dim() != t.dim()) throw DimensionMismatch("target dimension differs from source");
  rep.expected_fingerprint = fingerprint(target);

  auto out = contract_with_matrix(t, spec.contraction_matrix(t.field()));
  if (auto* nl = std::get_if<NoLimit>(&out)) {
    rep.status = VerifyStatus::NoLimit;
    rep.divergence = *nl;
    return rep;
  }
  rep.result = std::get<ContractionResult>(std::move(out));
  rep.result_fingerprint = fingerprint(rep.result->tensor);
  rep.status = *rep.result_fingerprint == rep.expected_fingerprint ? VerifyStatus::Success
                                                                   : VerifyStatus::MatchFailed;
  return rep;
}

json VerificationReport::to_json() const {
  json j;
  j["source"] = source;
  j["expected"] = expected;
  j["A"] = iwc::to_json(spec.a);
  if (spec.p) j["P"] = iwc::to_json(*spec.p);
  j["signature"] = {{"raw", spec.sig.exponents}, {"normalized", spec.sig.normalized().exponents}};
  j["status"] = verify_status_name(status);
  j["limit_exists"] = status != VerifyStatus::NoLimit;
  if (divergence)
    j["divergence"] = {{"i", divergence->i}, {"j", divergence->j}, {"k", divergence->k},
                       {"order", divergence->order}};
  if (result) {
    j["limit"] = brackets_to_json(result->tensor);
    j["classification"] = classification_name(result->classification);
    j["matched"] = result->matched ? json(*result->matched) : json(nullptr);
  }
  j["expected_fingerprint"] = expected_fingerprint.str();
  if (result_fingerprint) j["result_fingerprint"] = result_fingerprint->str();
  return j;
}

}  // namespace iwc
