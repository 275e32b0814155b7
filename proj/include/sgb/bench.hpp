// Benchmark system generators (cyclic, katsura, eco), the suite harness, and
// the CSV row schema used for instrumentation output.
#pragma once

#include <string>
#include <vector>

#include "sgb/engine.hpp"
#include "sgb/polynomial.hpp"

namespace sgb {

struct GeneratedSystem {
  Ring ring;
  std::vector<std::string> varnames;
  std::vector<Polynomial> polys;
};

// Cyclic-n: the n-1 cyclic window sums plus x_1*...*x_n - 1.
GeneratedSystem gen_cyclic(int n, std::uint32_t p = PrimeField::kDefaultModulus,
                           OrderKind order = OrderKind::grevlex);

// Katsura-n in u_0..u_n: n quadratic convolution equations plus the linear
// normalization u_0 + 2*(u_1 + ... + u_n) - 1.
GeneratedSystem gen_katsura(int n, std::uint32_t p = PrimeField::kDefaultModulus,
                            OrderKind order = OrderKind::grevlex);

// Eco-n in x_1..x_n: n-2 cubic equations (x_k + sum x_i x_{i+k}) x_n - k plus
// x_1 + ... + x_{n-1} + 1.
GeneratedSystem gen_eco(int n, std::uint32_t p = PrimeField::kDefaultModulus,
                        OrderKind order = OrderKind::grevlex);

enum class BenchFamily { cyclic, katsura, eco, file };

const char* family_name(BenchFamily f);

struct BenchmarkSpec {
  BenchFamily family = BenchFamily::cyclic;
  int n = 0;
  bool homogenized = false;
  std::uint32_t p = PrimeField::kDefaultModulus;
  OrderKind order = OrderKind::grevlex;
  // For family == file: the externally supplied system and its row label.
  std::string label;
  std::vector<Polynomial> file_polys;
};

// Generates (or passes through) the system, homogenizing when requested.
GeneratedSystem materialize(const BenchmarkSpec& spec);

struct SuiteOptions {
  std::uint64_t cell_timeout_ms = 300'000;
};

// Fixed, versioned column order.
std::string csv_header();

// One row; `verified` is "true", "false" or "TIMEOUT".
std::string csv_row(const std::string& benchmark, int n, bool homogenized,
                    const EngineConfig& cfg, const RunStats& stats, const std::string& verified);

// Runs every (spec, engine) cell: computes the basis, verifies it against
// the classical oracle (computed once per spec), and emits one CSV row.
// Timeouts flag the row instead of aborting the suite.
std::vector<std::string> run_suite(const std::vector<BenchmarkSpec>& specs,
                                   const std::vector<EngineConfig>& engines,
                                   const SuiteOptions& opt = {});

std::string algorithm_name(Algorithm a);
std::string sig_order_name(const EngineConfig& cfg);
std::string criteria_name(const CriteriaFlags& c);

}  // namespace sgb
