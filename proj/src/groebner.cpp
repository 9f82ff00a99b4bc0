#include "iwc/groebner.hpp"

#include <algorithm>
#include <set>

#include "iwc/errors.hpp"

namespace iwc {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// out = a[from..] - c * m * g[1..]; the leading terms are known to cancel.
void merge_tail(std::vector<Term>& out, std::vector<Term>& a, std::size_t from, const mpq_class& c,
                const Monomial& m, const Poly& g, MonomialOrder o) {
  out.clear();
  const auto& gt = g.terms();
  out.reserve(a.size() - from + gt.size());
  std::size_t i = from, j = 1;
  Monomial shifted;
  std::size_t have = kNone;
  while (i < a.size() || j < gt.size()) {
    if (j < gt.size() && have != j) {
      shifted = gt[j].m * m;
      have = j;
    }
    int cmp = i == a.size() ? -1 : j == gt.size() ? 1 : compare(a[i].m, shifted, o);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      out.push_back({shifted, -c * gt[j++].c});
    } else {
      a[i].c -= c * gt[j].c;
      if (sgn(a[i].c) != 0) out.push_back({shifted, std::move(a[i].c)});
      ++i;
      ++j;
    }
  }
}

std::size_t find_divisor(const Monomial& m, const std::vector<const Poly*>& g) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k]->lead().m.divides(m)) return k;
  return kNone;
}

Poly reduce_by(const Poly& p, const std::vector<const Poly*>& g, std::vector<std::size_t>* used) {
  const MonomialOrder o = p.order();
  for (const Poly* q : g)
    if (q->order() != o) throw OrderMismatch("reducer uses a different monomial order");
  std::vector<Term> cur(p.terms()), next, out;
  std::set<std::size_t> hit;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& lt = cur[pos];
    std::size_t k = find_divisor(lt.m, g);
    if (k == kNone) {
      out.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    hit.insert(k);
    const Term& gl = g[k]->lead();
    mpq_class c = lt.c / gl.c;
    Monomial q = lt.m / gl.m;
    merge_tail(next, cur, pos + 1, c, q, *g[k], o);
    std::swap(cur, next);
    pos = 0;
  }
  if (used) used->assign(hit.begin(), hit.end());
  return Poly::from_sorted(std::move(out), o);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

struct Engine {
  const MonomialOrder order;
  std::vector<Poly> elems;
  std::vector<int> sugar;
  std::vector<TraceStep> steps;  // steps[k] produced elems[ngens + k]
  std::size_t ngens = 0;
  std::vector<std::size_t> active;  // ascending ids
  std::vector<Pair> pairs;

  const Monomial& lm(std::size_t id) const { return elems[id].lead().m; }

  Pair make_pair(std::size_t a, std::size_t b) const {
    Monomial l = lcm(lm(a), lm(b));
    int s = std::max(sugar[a] + int(l.deg) - int(lm(a).deg), sugar[b] + int(l.deg) - int(lm(b).deg));
    return {std::min(a, b), std::max(a, b), l, s};
  }

  // Gebauer-Moeller installation of element h.
  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<Pair> c;
    for (std::size_t g : active) c.push_back(make_pair(h, g));
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const std::size_t g1 = c[a].i == h ? c[a].j : c[a].i;
      bool keep = lh.coprime(lm(g1));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> e;
    for (auto& p : d) {
      const std::size_t g = p.i == h ? p.j : p.i;
      if (!lh.coprime(lm(g))) e.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + e.size());
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lh, lm(p.j)) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(p);
    pairs = std::move(kept);
    std::vector<std::size_t> next;
    for (std::size_t g : active)
      if (!lh.divides(lm(g))) next.push_back(g);
    next.push_back(h);
    active = std::move(next);
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      int c = compare(a.lcm, b.lcm, order);
      if (c < 0 || (c == 0 && (a.sugar < b.sugar || (a.sugar == b.sugar && std::tie(a.i, a.j) < std::tie(b.i, b.j)))))
        best = k;
    }
    return best;
  }
};

}  // namespace

PrunedTrace prune_trace(const std::vector<TraceStep>& steps, std::size_t ngens,
                        const std::vector<std::size_t>& targets) {
  std::vector<bool> need(ngens + steps.size(), false);
  std::size_t top = 0;
  for (auto t : targets) {
    need.at(t) = true;
    top = std::max(top, t);
  }
  for (std::size_t id = top + 1; id-- > ngens;) {
    if (!need[id]) continue;
    const TraceStep& s = steps[id - ngens];
    need[s.i] = need[s.j] = true;
    for (auto r : s.reducers) need[r] = true;
  }
  PrunedTrace out;
  out.renumber.assign(need.size(), kNone);
  for (std::size_t id = 0; id < ngens; ++id) out.renumber[id] = id;
  for (std::size_t id = ngens; id < need.size(); ++id) {
    if (!need[id]) continue;
    TraceStep s = steps[id - ngens];
    s.i = out.renumber[s.i];
    s.j = out.renumber[s.j];
    for (auto& r : s.reducers) r = out.renumber[r];
    out.renumber[id] = ngens + out.trace.size();
    out.trace.push_back(std::move(s));
  }
  return out;
}

Poly reduce(const Poly& p, const std::vector<Poly>& g, std::vector<std::size_t>* used) {
  std::vector<const Poly*> ptrs;
  std::vector<std::size_t> map;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!g[k].is_zero()) {
      ptrs.push_back(&g[k]);
      map.push_back(k);
    }
  Poly r = reduce_by(p, ptrs, used);
  if (used)
    for (auto& u : *used) u = map[u];
  return r;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = lcm(f.lead().m, g.lead().m);
  Poly a = f.mul_term(l / f.lead().m, 1 / f.lead().c);
  return a.sub_mul(1 / g.lead().c, l / g.lead().m, g);
}

bool is_groebner_basis(const std::vector<Poly>& g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      if (g[a].is_zero() || g[b].is_zero()) continue;
      if (g[a].lead().m.coprime(g[b].lead().m)) continue;
      if (!reduce(s_polynomial(g[a], g[b]), g).is_zero()) return false;
    }
  return true;
}

GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& opts) {
  Engine eng{ideal.order, {}, {}, {}, 0, {}, {}};
  GroebnerResult res;
  for (const auto& g : ideal.gens) {
    if (g.order() != ideal.order) throw OrderMismatch("generator order differs from the ideal's");
    eng.elems.push_back(g.monic());
    eng.sugar.push_back(g.total_degree());
  }
  eng.ngens = eng.elems.size();

  auto finish_unit = [&](std::size_t id) {
    res.unit = true;
    res.complete = true;
    res.basis = {Poly::constant(1, ideal.order)};
    if (opts.record_trace && id >= eng.ngens) res.trace = prune_trace(eng.steps, eng.ngens, {id}).trace;
    return res;
  };

  for (std::size_t id = 0; id < eng.ngens; ++id) {
    if (eng.elems[id].is_zero()) continue;
    if (eng.elems[id].is_constant()) return finish_unit(id);
    eng.update(id);
  }

  while (!eng.pairs.empty()) {
    if (res.pair_reductions >= opts.max_pair_reductions) {
      res.complete = false;
      for (auto id : eng.active) res.basis.push_back(eng.elems[id]);
      return res;
    }
    std::size_t k = eng.select();
    Pair p = eng.pairs[k];
    eng.pairs.erase(eng.pairs.begin() + static_cast<std::ptrdiff_t>(k));
    ++res.pair_reductions;

    std::vector<const Poly*> reducers;
    for (auto id : eng.active) reducers.push_back(&eng.elems[id]);
    std::vector<std::size_t> used;
    Poly h = reduce_by(s_polynomial(eng.elems[p.i], eng.elems[p.j]), reducers, opts.record_trace ? &used : nullptr);
    if (h.is_zero()) {
      ++res.zero_reductions;
      continue;
    }
    TraceStep step{p.i, p.j, {}};
    for (auto u : used) step.reducers.push_back(eng.active[u]);
    eng.steps.push_back(std::move(step));
    eng.elems.push_back(h.monic());
    eng.sugar.push_back(p.sugar);
    const std::size_t id = eng.elems.size() - 1;
    if (eng.elems[id].is_constant() && opts.stop_on_unit) return finish_unit(id);
    eng.update(id);
  }

  // Reduced basis: minimal leading monomials, tails reduced, monic, sorted.
  std::vector<Poly> minimal;
  for (auto id : eng.active) {
    bool redundant = false;
    for (auto other : eng.active)
      if (other != id && eng.lm(other).divides(eng.lm(id)) &&
          (!(eng.lm(other) == eng.lm(id)) || other < id))
        redundant = true;
    if (!redundant) minimal.push_back(eng.elems[id]);
  }
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Poly*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    // The leading term is irreducible by construction; only the tail moves.
    reduced.push_back(reduce_by(minimal[a], others, nullptr).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& x, const Poly& y) {
    return compare(x.lead().m, y.lead().m, ideal.order) < 0;
  });
  if (opts.record_trace) {
    res.derivation = std::move(eng.steps);
    res.active = eng.active;
  }
  res.complete = true;
  res.unit = reduced.size() == 1 && reduced[0].is_constant();
  res.basis = std::move(reduced);
  return res;
}

std::optional<std::vector<Poly>> replay_trace(const Ideal& ideal, const std::vector<TraceStep>& trace) {
  std::vector<Poly> elems;
  for (const auto& g : ideal.gens) elems.push_back(g.in(ideal.order).monic());
  for (const auto& s : trace) {
    const std::size_t n = elems.size();
    if (s.i >= n || s.j >= n || elems[s.i].is_zero() || elems[s.j].is_zero()) return std::nullopt;
    std::vector<Poly> reducers;
    for (auto r : s.reducers) {
      if (r >= n || elems[r].is_zero()) return std::nullopt;
      reducers.push_back(elems[r]);
    }
    Poly h = reduce(s_polynomial(elems[s.i], elems[s.j]), reducers);
    if (h.is_zero()) return std::nullopt;
    elems.push_back(h.monic());
  }
  return elems;
}

}  // namespace iwc
