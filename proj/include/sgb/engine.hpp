// The Groebner basis engines: the generic signature-based algorithm, its
// degree-presorted variant, and the classical Buchberger/sugar engine with
// Gebauer-Moeller pair elimination that serves as the correctness oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sgb/labeled.hpp"
#include "sgb/polynomial.hpp"
#include "sgb/stats.hpp"

namespace sgb {

enum class Algorithm { sba, f5_presort, buchberger_sugar };
enum class RewriteFlavor { arri_perry, f5_rule_list };

struct CriteriaFlags {
  bool nonminimal_syzygy = true;
  bool rewritable = true;
};

struct EngineConfig {
  Algorithm algorithm = Algorithm::sba;
  SigOrderKind sig_order = SigOrderKind::pot;
  CriteriaFlags criteria;
  RewriteFlavor rewrite_flavor = RewriteFlavor::arri_perry;
  bool tail_reduce = true;
  bool sort_reducers_by_sig = false;
  // Disables the sig-redundancy filter; only used to audit its soundness.
  bool sig_redundant_filter = true;
  // Cooperative per-run deadline; 0 disables. Exceeding it throws
  // EngineTimeout.
  std::uint64_t timeout_ms = 0;
};

struct EngineTimeout : std::runtime_error {
  EngineTimeout() : std::runtime_error("engine exceeded its deadline") {}
};

// One processed pair: its signature and the degree bookkeeping audited by
// the invariant suites. The signature fields are defaulted for the
// classical engine, which has none.
struct TraceEntry {
  Signature sig;
  std::int32_t sig_deg = 0;
  std::int32_t pair_deg = 0;
  std::int32_t spoly_deg = 0;
  std::int32_t sugar = 0;
};

struct GrobnerResult {
  // The unique reduced basis: monic, interreduced, ascending by lm.
  std::vector<Polynomial> basis;
  RunStats stats;
  std::vector<TraceEntry> trace;
};

GrobnerResult sba(const std::vector<Polynomial>& F, const EngineConfig& cfg);
GrobnerResult f5_presort(const std::vector<Polynomial>& F, const EngineConfig& cfg);
GrobnerResult buchberger_sugar(const std::vector<Polynomial>& F, const EngineConfig& cfg = {});

// Dispatch on cfg.algorithm.
GrobnerResult compute_groebner(const std::vector<Polynomial>& F, const EngineConfig& cfg);

// Per-generator signature rule lists for the f5 rewriter flavor, in
// registration order.
struct RewriteRules {
  std::vector<std::vector<Signature>> per_index;
};

// True (discard) iff a known syzygy signature divides the pair signature.
bool criterion_nonminimal_syzygy(const CriticalPair& pair, const SyzygySet& syz);

// arri_perry: some later basis element's signature divides the pair
// signature. f5_rule_list: a later rule divides the multiplied signature of
// either pair component.
bool criterion_rewritable(const CriticalPair& pair,
                          const std::vector<LabeledPolynomial>& basis,
                          const RewriteRules& rules, RewriteFlavor flavor);

// Plain signature-free normal form of p modulo G.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G);

// Minimalizes, fully reduces, scales monic, sorts ascending by lm; on a
// Groebner basis this yields the unique reduced basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> G);

// Checks (a) all s-polynomials of G reduce to zero modulo G, (b) every f in
// F reduces to zero modulo G, and (c) every g in G reduces to zero modulo
// the oracle basis of F (computed here unless supplied).
bool verify_groebner(const std::vector<Polynomial>& G, const std::vector<Polynomial>& F,
                     const std::vector<Polynomial>* oracle_basis = nullptr);

// The homogenization workflow's back end: dehomogenize, interreduce, then
// close under Buchberger completion (a dehomogenized basis need not stay a
// Groebner basis). Reports whether completion added elements.
struct DehomogenizeResult {
  std::vector<Polynomial> basis;
  bool completion_added = false;
};
DehomogenizeResult dehomogenize_basis(const std::vector<Polynomial>& Gh);

}  // namespace sgb
