#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "sgb/bench.hpp"

using namespace sgb;
using sgbtest::poly;

namespace {

// Splits a CSV row into fields.
std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("gen_cyclic expansions") {
  auto sys = gen_cyclic(3, 7);
  const Ring& R = sys.ring;
  REQUIRE(sys.polys.size() == 3);
  CHECK(sys.polys[0] == poly(R, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}}));
  CHECK(sys.polys[1] == poly(R, {{1, {1, 1, 0}}, {1, {0, 1, 1}}, {1, {1, 0, 1}}}));
  CHECK(sys.polys[2] == poly(R, {{1, {1, 1, 1}}, {-1, {0, 0, 0}}}));

  auto two = gen_cyclic(2, 7);
  CHECK(two.polys[0] == poly(two.ring, {{1, {1, 0}}, {1, {0, 1}}}));
  CHECK(two.polys[1] == poly(two.ring, {{1, {1, 1}}, {-1, {0, 0}}}));

  auto four = gen_cyclic(4);
  REQUIRE(four.polys.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(four.polys[k].deg() == k + 1);

  CHECK_THROWS(gen_cyclic(1));
}

TEST_CASE("gen_katsura expansions") {
  auto sys = gen_katsura(1, 7);
  const Ring& R = sys.ring;
  REQUIRE(sys.polys.size() == 2);
  // u_0^2 + 2u_1^2 - u_0 and u_0 + 2u_1 - 1.
  CHECK(sys.polys[0] == poly(R, {{1, {2, 0}}, {2, {0, 2}}, {-1, {1, 0}}}));
  CHECK(sys.polys[1] == poly(R, {{1, {1, 0}}, {2, {0, 1}}, {-1, {0, 0}}}));

  for (int n = 2; n <= 5; ++n) {
    auto k = gen_katsura(n);
    CHECK(k.polys.size() == static_cast<std::size_t>(n + 1));
    bool any_inhomog = false;
    for (const auto& p : k.polys) any_inhomog |= !p.is_homogeneous();
    CHECK(any_inhomog);
  }
  CHECK_THROWS(gen_katsura(0));
}

TEST_CASE("gen_eco expansions") {
  auto sys = gen_eco(3, 7);
  const Ring& R = sys.ring;
  REQUIRE(sys.polys.size() == 2);
  // (x1 + x1x2)x3 - 1 and x1 + x2 + 1.
  CHECK(sys.polys[0] == poly(R, {{1, {1, 0, 1}}, {1, {1, 1, 1}}, {-1, {0, 0, 0}}}));
  CHECK(sys.polys[1] == poly(R, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 0}}}));

  for (int n = 4; n <= 6; ++n) {
    auto e = gen_eco(n);
    CHECK(e.polys.size() == static_cast<std::size_t>(n - 1));
    for (const auto& p : e.polys) CHECK(!p.is_homogeneous());
  }
  CHECK_THROWS(gen_eco(2));
}

TEST_CASE("materialize homogenizes on request") {
  BenchmarkSpec spec;
  spec.family = BenchFamily::katsura;
  spec.n = 3;
  spec.homogenized = true;
  auto sys = materialize(spec);
  CHECK(sys.ring.homogenized);
  CHECK(sys.varnames.back() == "h");
  for (const auto& p : sys.polys) CHECK(p.is_homogeneous());
}

TEST_CASE("csv schema") {
  CHECK(csv_header().rfind("# sgb stats csv v1", 0) == 0);
  auto lines = csv_header();
  auto pos = lines.find('\n');
  std::string cols = lines.substr(pos + 1);
  CHECK(cols ==
        "benchmark,n,homogenized,algorithm,sig_order,criteria,reduction_steps,"
        "higher_sig_detections,ratio_pct,spoly_reductions,zero_reductions,"
        "discarded_nonminimal_pair,discarded_syzygy_criterion,discarded_rewritable,"
        "sig_redundant_skips,basis_size_final,verified,elapsed_ms");
}

TEST_CASE("run_suite emits verified deterministic rows") {
  BenchmarkSpec spec;
  spec.family = BenchFamily::cyclic;
  spec.n = 4;
  EngineConfig cfg;

  auto rows1 = run_suite({spec}, {cfg});
  auto rows2 = run_suite({spec}, {cfg});
  REQUIRE(rows1.size() == 1);
  auto f1 = fields(rows1[0]);
  auto f2 = fields(rows2[0]);
  REQUIRE(f1.size() == 18);

  CHECK(f1[0] == "cyclic");
  CHECK(f1[1] == "4");
  CHECK(f1[2] == "false");
  CHECK(f1[3] == "sba");
  CHECK(f1[4] == "pot");
  CHECK(f1[5] == "all");
  CHECK(f1[15] == "7");     // basis_size_final pinned by the oracle
  CHECK(f1[16] == "true");  // verified

  // Deterministic apart from elapsed_ms (the last column).
  f1.pop_back();
  f2.pop_back();
  CHECK(f1 == f2);

  // The ratio column is recomputed from the same row's counters.
  double steps = std::stod(f1[6]);
  double dets = std::stod(f1[7]);
  double ratio = std::stod(f1[8]);
  double expect = steps == 0 ? 0.0 : 100.0 * dets / steps;
  CHECK(ratio == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("run_suite smoke cell has finite counters") {
  BenchmarkSpec spec;
  spec.family = BenchFamily::cyclic;
  spec.n = 3;
  EngineConfig cfg;
  auto rows = run_suite({spec}, {cfg});
  REQUIRE(rows.size() == 1);
  CHECK(fields(rows[0])[16] == "true");
}

TEST_CASE("run_suite flags timeouts instead of aborting") {
  BenchmarkSpec spec;
  spec.family = BenchFamily::cyclic;
  spec.n = 6;
  EngineConfig cfg;
  SuiteOptions opt;
  opt.cell_timeout_ms = 1;
  auto rows = run_suite({spec}, {cfg}, opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].find("TIMEOUT") != std::string::npos);
}
