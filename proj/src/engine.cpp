#include "sgb/engine.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

#include "sgb/geobucket.hpp"

namespace sgb {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end{};
  bool armed = false;
  void arm(std::uint64_t ms) {
    if (ms > 0) {
      end = Clock::now() + std::chrono::milliseconds(ms);
      armed = true;
    }
  }
  void poll() const {
    if (armed && Clock::now() > end) throw EngineTimeout();
  }
};

std::uint64_t ms_since(Clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

// Drops zero inputs (with a warning) and enforces a common ring.
std::vector<Polynomial> nonzero_inputs(const std::vector<Polynomial>& F) {
  std::vector<Polynomial> out;
  out.reserve(F.size());
  for (const auto& f : F) {
    if (f.is_zero())
      std::cerr << "warning: dropping zero input polynomial\n";
    else
      out.push_back(f);
  }
  for (const auto& f : out)
    if (!(f.ring() == out.front().ring())) throw RingMismatch();
  return out;
}

bool lm_less(const Polynomial& a, const Polynomial& b) {
  return mono_cmp(a.lm(), b.lm(), a.ring().order) == std::strong_ordering::less;
}

// s-polynomial on the plain polynomial level, used by the classical engine
// and by verification.
Polynomial plain_spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  Monomial uf = *mono_div(l, f.lm());
  Monomial ug = *mono_div(l, g.lm());
  return poly_axpy(term_times(f, g.lc(), uf), f.lc(), ug, g);
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
  if (p.is_zero()) return p;
  const Ring& ring = p.ring();
  Geobucket work(ring, p.terms());
  std::vector<Term> done;
  while (auto lead = work.pop_lead()) {
    bool stepped = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.lm(), lead->mono)) continue;
      Monomial t = *mono_div(lead->mono, g.lm());
      Fp c = g.lc() == ring.field.one() ? lead->coeff : ring.field.div(lead->coeff, g.lc());
      work.sub_mul(c, t, g.terms().data() + 1, g.terms().data() + g.term_count());
      stepped = true;
      break;
    }
    if (!stepped) done.push_back(std::move(*lead));
  }
  return Polynomial::from_sorted_terms(ring, std::move(done));
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> G) {
  std::vector<Polynomial> polys;
  polys.reserve(G.size());
  for (auto& g : G)
    if (!g.is_zero()) polys.push_back(g.monic());
  std::sort(polys.begin(), polys.end(), lm_less);

  // Minimalize: a divisor's lm sorts no later, so checking kept elements
  // suffices.
  std::vector<Polynomial> kept;
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : kept)
      if (mono_divides(q.lm(), p.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(p));
  }

  // Tail-reduce in ascending lm order; reducers of tail monomials are
  // already in final form.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form(kept[i], others).monic();
  }
  return kept;
}

bool criterion_nonminimal_syzygy(const CriticalPair& pair, const SyzygySet& syz) {
  return syz.divides_some(pair.pair_sig);
}

bool criterion_rewritable(const CriticalPair& pair,
                          const std::vector<LabeledPolynomial>& basis,
                          const RewriteRules& rules, RewriteFlavor flavor) {
  if (flavor == RewriteFlavor::arri_perry) {
    std::uint32_t side = pair.sig_from_i ? pair.i : pair.j;
    for (std::uint32_t k = side + 1; k < basis.size(); ++k)
      if (sig_divides(basis[k].sig, pair.pair_sig)) return true;
    return false;
  }
  auto component_rewritable = [&](std::uint32_t idx, const Monomial& u) {
    const LabeledPolynomial& h = basis[idx];
    Signature msig = sig_mul(u, h.sig);
    const auto& list = rules.per_index[msig.idx];
    for (std::uint32_t r = h.rule_pos + 1; r < list.size(); ++r)
      if (sig_divides(list[r], msig)) return true;
    return false;
  };
  return component_rewritable(pair.i, pair.u_i) || component_rewritable(pair.j, pair.u_j);
}

// ---------------------------------------------------------------------------
// Signature-based engines
// ---------------------------------------------------------------------------

namespace {

struct SigEngine {
  const EngineConfig& cfg;
  SigOrderSpec spec;
  std::vector<LabeledPolynomial> basis;
  SyzygySet syz;
  RewriteRules rules;
  RunStats stats;
  std::vector<TraceEntry> trace;
  std::optional<Signature> last_sig;
  std::uint64_t entry = 0;
  Deadline deadline;

  explicit SigEngine(const EngineConfig& c) : cfg(c) {}

  void init(const std::vector<Polynomial>& fs) {
    const Ring& ring = fs.front().ring();
    spec.kind = cfg.sig_order;
    spec.base = ring.order;
    const std::uint32_t m = static_cast<std::uint32_t>(fs.size());
    rules.per_index.resize(m);
    basis.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      LabeledPolynomial g;
      g.sig = Signature{Monomial(ring.nvars), i};
      g.poly = fs[i].monic();
      g.sugar = fs[i].deg();
      g.gen_deg = fs[i].deg();
      g.rule_pos = 0;
      spec.lead_of_gen.push_back(g.poly.lm());
      rules.per_index[i].push_back(g.sig);
      basis.push_back(std::move(g));
    }
    // Koszul syzygy signatures: the larger side of lm(f_j) e_i vs
    // lm(f_i) e_j under the active ordering.
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < i; ++j) {
        Signature a{basis[j].poly.lm(), i};
        Signature b{basis[i].poly.lm(), j};
        syz.add(sig_cmp(a, b, spec) == std::strong_ordering::greater ? a : b);
      }
  }

  bool discarded_by_criteria(const CriticalPair& p) {
    if (cfg.criteria.nonminimal_syzygy && criterion_nonminimal_syzygy(p, syz)) {
      ++stats.discarded_syzygy_criterion;
      return true;
    }
    if (cfg.criteria.rewritable &&
        criterion_rewritable(p, basis, rules, cfg.rewrite_flavor)) {
      ++stats.discarded_rewritable;
      return true;
    }
    return false;
  }

  std::optional<CriticalPair> build_pair(std::uint32_t i, std::uint32_t j) {
    auto p = make_pair(i, j, basis, spec);
    if (!p) {
      ++stats.discarded_nonminimal_pair;
      return std::nullopt;
    }
    if (discarded_by_criteria(*p)) return std::nullopt;
    p->entry_seq = entry++;
    return p;
  }

  // Reduces the pair's s-polynomial and extends the basis; calls emit_pair
  // for every surviving new critical pair.
  template <typename Emit>
  void process(const CriticalPair& p, Emit&& emit_pair) {
    LabeledPolynomial s = spoly(p, basis);
    ++stats.spoly_reductions;

    const std::int32_t sp_deg = s.poly.deg();
    if (p.sig_deg < p.pair_deg || p.pair_deg < sp_deg) ++stats.relation_violations;
    if (p.sig_deg > p.pair_deg || p.pair_deg > sp_deg) ++stats.relation_strict_events;
    if (s.sugar != sigdeg(s)) ++stats.sugar_sigdeg_mismatches;
    if (last_sig &&
        sig_cmp(p.pair_sig, *last_sig, spec) == std::strong_ordering::less)
      ++stats.sig_order_violations;
    last_sig = p.pair_sig;
    trace.push_back({p.pair_sig, p.sig_deg, p.pair_deg, sp_deg, s.sugar});

    ReduceOptions ropt{cfg.tail_reduce, cfg.sort_reducers_by_sig};
    LabeledPolynomial r = sig_safe_reduce(s, basis, spec, ropt, stats);
    if (r.poly.is_zero()) {
      ++stats.zero_reductions;
      syz.add(r.sig);
      rules.per_index[r.sig.idx].push_back(r.sig);
      return;
    }
    if (cfg.sig_redundant_filter && is_sig_redundant(r, basis)) {
      ++stats.sig_redundant_skips;
      return;
    }
    r.poly = r.poly.monic();
    if (r.sugar != sigdeg(r)) ++stats.sugar_sigdeg_mismatches;
    r.rule_pos = static_cast<std::uint32_t>(rules.per_index[r.sig.idx].size());
    rules.per_index[r.sig.idx].push_back(r.sig);
    const std::uint32_t newi = static_cast<std::uint32_t>(basis.size());
    basis.push_back(std::move(r));
    for (std::uint32_t j = 0; j < newi; ++j)
      if (auto np = build_pair(newi, j)) emit_pair(std::move(*np));
  }

  GrobnerResult finish(Clock::time_point t0) {
    GrobnerResult res;
    std::vector<Polynomial> polys;
    polys.reserve(basis.size());
    for (auto& g : basis) polys.push_back(std::move(g.poly));
    res.basis = interreduce(std::move(polys));
    stats.basis_size_final = res.basis.size();
    stats.elapsed_ms = ms_since(t0);
    res.stats = stats;
    res.trace = std::move(trace);
    return res;
  }
};

// Queue order: minimal pair signature first, insertion order on ties.
struct SigLess {
  const SigOrderSpec* spec;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    auto ord = sig_cmp(a.pair_sig, b.pair_sig, *spec);
    if (ord != std::strong_ordering::equal) return ord == std::strong_ordering::less;
    return a.entry_seq < b.entry_seq;
  }
};

// Presort order: pair degree buckets first, then the signature order.
struct DegSigLess {
  const SigOrderSpec* spec;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.pair_deg != b.pair_deg) return a.pair_deg < b.pair_deg;
    return SigLess{spec}(a, b);
  }
};

}  // namespace

GrobnerResult sba(const std::vector<Polynomial>& F, const EngineConfig& cfg) {
  auto t0 = Clock::now();
  auto fs = nonzero_inputs(F);
  SigEngine eng(cfg);
  if (fs.empty()) return eng.finish(t0);
  eng.deadline.arm(cfg.timeout_ms);
  eng.init(fs);

  std::multiset<CriticalPair, SigLess> P{SigLess{&eng.spec}};
  auto emit = [&](CriticalPair&& p) { P.insert(std::move(p)); };
  for (std::uint32_t i = 0; i < fs.size(); ++i)
    for (std::uint32_t j = 0; j < i; ++j)
      if (auto p = eng.build_pair(i, j)) emit(std::move(*p));

  while (!P.empty()) {
    eng.deadline.poll();
    CriticalPair p = *P.begin();
    P.erase(P.begin());
    if (eng.discarded_by_criteria(p)) continue;
    eng.process(p, emit);
  }
  return eng.finish(t0);
}

GrobnerResult f5_presort(const std::vector<Polynomial>& F, const EngineConfig& cfg) {
  auto t0 = Clock::now();
  auto fs = nonzero_inputs(F);
  SigEngine eng(cfg);
  if (fs.empty()) return eng.finish(t0);
  if (!degree_compatible(fs.front().ring().order))
    std::cerr << "warning: degree presorting expects a degree-compatible ordering\n";
  eng.deadline.arm(cfg.timeout_ms);
  eng.init(fs);

  std::multiset<CriticalPair, DegSigLess> P{DegSigLess{&eng.spec}};
  std::multiset<CriticalPair, SigLess> Q{SigLess{&eng.spec}};
  for (std::uint32_t i = 0; i < fs.size(); ++i)
    for (std::uint32_t j = 0; j < i; ++j)
      if (auto p = eng.build_pair(i, j)) P.insert(std::move(*p));

  std::int32_t bucket_deg = 0;
  auto emit = [&](CriticalPair&& p) {
    if (p.pair_deg > bucket_deg)
      P.insert(std::move(p));
    else
      Q.insert(std::move(p));
  };

  while (!P.empty() || !Q.empty()) {
    eng.deadline.poll();
    if (Q.empty()) {
      bucket_deg = P.begin()->pair_deg;
      while (!P.empty() && P.begin()->pair_deg == bucket_deg) {
        Q.insert(*P.begin());
        P.erase(P.begin());
      }
    }
    CriticalPair p = *Q.begin();
    Q.erase(Q.begin());
    if (eng.discarded_by_criteria(p)) continue;
    eng.process(p, emit);
  }
  return eng.finish(t0);
}

// ---------------------------------------------------------------------------
// Classical Buchberger with the sugar selection strategy
// ---------------------------------------------------------------------------

namespace {

struct SugaredPoly {
  Polynomial poly;
  std::int32_t sugar = 0;
};

struct BuchPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Monomial lcm;
  std::int32_t pair_deg = 0;
  std::int32_t sugar = 0;
  std::uint64_t entry_seq = 0;
};

// Threepartite selection: sugar, then degree, then the monomial ordering on
// the lcm; insertion order last for determinism.
struct BuchLess {
  OrderKind order;
  bool operator()(const BuchPair& a, const BuchPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.pair_deg != b.pair_deg) return a.pair_deg < b.pair_deg;
    auto ord = mono_cmp(a.lcm, b.lcm, order);
    if (ord != std::strong_ordering::equal) return ord == std::strong_ordering::less;
    return a.entry_seq < b.entry_seq;
  }
};

struct BuchEngine {
  std::vector<SugaredPoly> basis;
  std::multiset<BuchPair, BuchLess> pairs;
  std::uint64_t entry = 0;
  RunStats stats;

  explicit BuchEngine(OrderKind order) : pairs(BuchLess{order}) {}

  // Gebauer-Moeller update: prunes the pending set with the chain criterion
  // and filters the new pairs with the divisor and product criteria.
  void update(SugaredPoly h) {
    const std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    const Monomial& hlm = h.poly.lm();

    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) {
      Monomial l = mono_lcm(basis[i].poly.lm(), hlm);
      bool coprime = l.deg() == basis[i].poly.lm().deg() + hlm.deg();
      cands.push_back({i, std::move(l), coprime});
    }

    // Keep (h, g1) iff coprime or no other live candidate's lcm divides its
    // lcm; of equal lcms exactly one survives.
    std::vector<Cand> survivors;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      cands[a].alive = false;
      bool keep = cands[a].coprime;
      if (!keep) {
        bool dominated = false;
        for (const auto& other : cands)
          if (other.alive && mono_divides(other.lcm, cands[a].lcm)) {
            dominated = true;
            break;
          }
        if (!dominated)
          for (const auto& s : survivors)
            if (mono_divides(s.lcm, cands[a].lcm)) {
              dominated = true;
              break;
            }
        keep = !dominated;
      }
      if (keep) survivors.push_back(cands[a]);
    }

    // Chain criterion against the pending pairs.
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (mono_divides(hlm, it->lcm) &&
          !(mono_lcm(basis[it->i].poly.lm(), hlm) == it->lcm) &&
          !(mono_lcm(basis[it->j].poly.lm(), hlm) == it->lcm))
        it = pairs.erase(it);
      else
        ++it;
    }

    for (const auto& s : survivors) {
      if (s.coprime) continue;  // product criterion
      BuchPair p;
      p.i = t;
      p.j = s.i;
      p.lcm = s.lcm;
      p.pair_deg = static_cast<std::int32_t>(s.lcm.deg());
      Monomial uh = *mono_div(s.lcm, hlm);
      Monomial ug = *mono_div(s.lcm, basis[s.i].poly.lm());
      p.sugar = sugar_of_sum(sugar_of_mul(uh, h.sugar), sugar_of_mul(ug, basis[s.i].sugar));
      p.entry_seq = entry++;
      pairs.insert(std::move(p));
    }
    basis.push_back(std::move(h));
  }

  // Full normal form with sugar tracking.
  Polynomial reduce(Polynomial p, std::int32_t& sugar) {
    if (p.is_zero()) return p;
    const Ring& ring = p.ring();
    Geobucket work(ring, p.terms());
    std::vector<Term> done;
    while (auto lead = work.pop_lead()) {
      bool stepped = false;
      for (const auto& g : basis) {
        if (!mono_divides(g.poly.lm(), lead->mono)) continue;
        Monomial u = *mono_div(lead->mono, g.poly.lm());
        Fp c = g.poly.lc() == ring.field.one()
                   ? lead->coeff
                   : ring.field.div(lead->coeff, g.poly.lc());
        work.sub_mul(c, u, g.poly.terms().data() + 1,
                     g.poly.terms().data() + g.poly.term_count());
        ++stats.reduction_steps;
        sugar = sugar_of_sum(sugar, sugar_of_mul(u, g.sugar));
        stepped = true;
        break;
      }
      if (!stepped) done.push_back(std::move(*lead));
    }
    return Polynomial::from_sorted_terms(ring, std::move(done));
  }
};

}  // namespace

GrobnerResult buchberger_sugar(const std::vector<Polynomial>& F, const EngineConfig& cfg) {
  auto t0 = Clock::now();
  auto fs = nonzero_inputs(F);
  GrobnerResult res;
  if (fs.empty()) return res;
  Deadline deadline;
  deadline.arm(cfg.timeout_ms);

  BuchEngine eng(fs.front().ring().order);
  for (const auto& f : fs) eng.update({f.monic(), f.deg()});

  while (!eng.pairs.empty()) {
    deadline.poll();
    BuchPair p = *eng.pairs.begin();
    eng.pairs.erase(eng.pairs.begin());
    Polynomial s = plain_spoly(eng.basis[p.i].poly, eng.basis[p.j].poly);
    ++eng.stats.spoly_reductions;
    res.trace.push_back({Signature{}, 0, p.pair_deg, s.deg(), p.sugar});
    std::int32_t sugar = p.sugar;
    Polynomial nf = eng.reduce(std::move(s), sugar);
    if (nf.is_zero()) {
      ++eng.stats.zero_reductions;
      continue;
    }
    eng.update({nf.monic(), sugar});
  }

  std::vector<Polynomial> polys;
  polys.reserve(eng.basis.size());
  for (auto& g : eng.basis) polys.push_back(std::move(g.poly));
  res.basis = interreduce(std::move(polys));
  eng.stats.basis_size_final = res.basis.size();
  eng.stats.elapsed_ms = ms_since(t0);
  res.stats = eng.stats;
  return res;
}

GrobnerResult compute_groebner(const std::vector<Polynomial>& F, const EngineConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::sba:
      return sba(F, cfg);
    case Algorithm::f5_presort:
      return f5_presort(F, cfg);
    case Algorithm::buchberger_sugar:
      return buchberger_sugar(F, cfg);
  }
  throw std::logic_error("unknown algorithm");
}

bool verify_groebner(const std::vector<Polynomial>& G, const std::vector<Polynomial>& F,
                     const std::vector<Polynomial>* oracle_basis) {
  std::vector<Polynomial> g;
  for (const auto& p : G)
    if (!p.is_zero()) g.push_back(p);

  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!normal_form(plain_spoly(g[i], g[j]), g).is_zero()) return false;

  for (const auto& f : F)
    if (!f.is_zero() && !normal_form(f, g).is_zero()) return false;

  std::vector<Polynomial> oracle;
  if (oracle_basis == nullptr) {
    oracle = buchberger_sugar(F).basis;
    oracle_basis = &oracle;
  }
  for (const auto& p : g)
    if (!normal_form(p, *oracle_basis).is_zero()) return false;
  return true;
}

DehomogenizeResult dehomogenize_basis(const std::vector<Polynomial>& Gh) {
  DehomogenizeResult out;
  std::vector<Polynomial> affine = interreduce(dehomogenize(Gh));
  if (affine.empty()) return out;
  out.basis = buchberger_sugar(affine).basis;
  out.completion_added = !(out.basis == affine);
  return out;
}

}  // namespace sgb
