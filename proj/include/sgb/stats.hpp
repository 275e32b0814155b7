// Run counters shared by all engines. Everything except elapsed_ms is
// deterministic for a fixed input and configuration.
#pragma once

#include <cstdint>

namespace sgb {

struct RunStats {
  // One axpy cancellation inside a reduction.
  std::uint64_t reduction_steps = 0;
  // Divisor-matching reducers rejected solely by the signature condition.
  std::uint64_t higher_sig_detections = 0;
  // S-polynomials that reached the reducer.
  std::uint64_t spoly_reductions = 0;
  std::uint64_t zero_reductions = 0;
  // Pairs dropped because both multiplied signatures coincide.
  std::uint64_t discarded_nonminimal_pair = 0;
  std::uint64_t discarded_syzygy_criterion = 0;
  std::uint64_t discarded_rewritable = 0;
  std::uint64_t sig_redundant_skips = 0;
  std::uint64_t basis_size_final = 0;
  std::uint64_t elapsed_ms = 0;

  // Instrumentation for the invariant audits; all are violation counts and
  // stay zero on sound runs unless noted otherwise.
  //
  // sig_deg >= pair_deg >= deg(spoly) broken for a processed pair.
  std::uint64_t relation_violations = 0;
  // Strict inequality somewhere in the chain above; zero on homogeneous
  // input, expected and logged on inhomogeneous input.
  std::uint64_t relation_strict_events = 0;
  // Tracked sugar degree disagreeing with the signature degree.
  std::uint64_t sugar_sigdeg_mismatches = 0;
  // A reduction step failed lm decrease or touched the signature.
  std::uint64_t sigsafe_contract_violations = 0;
  // A processed pair signature compared below its predecessor.
  std::uint64_t sig_order_violations = 0;

  double higher_sig_ratio_pct() const {
    return reduction_steps == 0
               ? 0.0
               : 100.0 * static_cast<double>(higher_sig_detections) /
                     static_cast<double>(reduction_steps);
  }
};

}  // namespace sgb
