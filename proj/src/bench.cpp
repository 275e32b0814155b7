#include "sgb/bench.hpp"

#include <cstdio>
#include <stdexcept>

namespace sgb {

namespace {

Ring make_ring(std::size_t nvars, std::uint32_t p, OrderKind order) {
  return Ring{nvars, PrimeField(p), order, false};
}

std::vector<std::string> numbered_names(const char* stem, int from, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(from + i));
  return names;
}

}  // namespace

GeneratedSystem gen_cyclic(int n, std::uint32_t p, OrderKind order) {
  if (n < 2) throw std::invalid_argument("cyclic requires n >= 2");
  GeneratedSystem sys;
  sys.ring = make_ring(n, p, order);
  sys.varnames = numbered_names("x", 1, n);
  const Fp one = sys.ring.field.one();
  for (int k = 1; k < n; ++k) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
      MonomialBuilder mb(n);
      for (int j = 0; j < k; ++j) mb.raise((i + j) % n, 1);
      terms.push_back({mb.build(), one});
    }
    sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(terms)));
  }
  MonomialBuilder all(n);
  for (int i = 0; i < n; ++i) all.raise(i, 1);
  std::vector<Term> last{{all.build(), one}, {Monomial(n), sys.ring.field.from_int(-1)}};
  sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(last)));
  return sys;
}

GeneratedSystem gen_katsura(int n, std::uint32_t p, OrderKind order) {
  if (n < 1) throw std::invalid_argument("katsura requires n >= 1");
  const int nvars = n + 1;  // u_0..u_n
  GeneratedSystem sys;
  sys.ring = make_ring(nvars, p, order);
  sys.varnames = numbered_names("u", 0, nvars);
  const PrimeField& F = sys.ring.field;
  for (int m = 0; m < n; ++m) {
    std::vector<Term> terms;
    for (int k = -n; k <= n; ++k) {
      int a = k < 0 ? -k : k;
      int bm = m - k;
      int b = bm < 0 ? -bm : bm;
      if (b > n) continue;  // u_i = 0 beyond the index range
      MonomialBuilder mb(nvars);
      mb.raise(a, 1).raise(b, 1);
      terms.push_back({mb.build(), F.one()});
    }
    MonomialBuilder um(nvars);
    um.raise(m, 1);
    terms.push_back({um.build(), F.from_int(-1)});
    sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(terms)));
  }
  std::vector<Term> lin;
  for (int k = 0; k <= n; ++k) {
    MonomialBuilder mb(nvars);
    mb.raise(k, 1);
    lin.push_back({mb.build(), k == 0 ? F.one() : F.from_int(2)});
  }
  lin.push_back({Monomial(nvars), F.from_int(-1)});
  sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(lin)));
  return sys;
}

GeneratedSystem gen_eco(int n, std::uint32_t p, OrderKind order) {
  if (n < 3) throw std::invalid_argument("eco requires n >= 3");
  GeneratedSystem sys;
  sys.ring = make_ring(n, p, order);
  sys.varnames = numbered_names("x", 1, n);
  const PrimeField& F = sys.ring.field;
  for (int k = 1; k <= n - 2; ++k) {
    std::vector<Term> terms;
    MonomialBuilder head(n);
    head.raise(k - 1, 1).raise(n - 1, 1);
    terms.push_back({head.build(), F.one()});
    for (int i = 1; i <= n - k - 1; ++i) {
      MonomialBuilder mb(n);
      mb.raise(i - 1, 1).raise(i + k - 1, 1).raise(n - 1, 1);
      terms.push_back({mb.build(), F.one()});
    }
    terms.push_back({Monomial(n), F.from_int(-k)});
    sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(terms)));
  }
  std::vector<Term> lin;
  for (int i = 1; i <= n - 1; ++i) {
    MonomialBuilder mb(n);
    mb.raise(i - 1, 1);
    lin.push_back({mb.build(), F.one()});
  }
  lin.push_back({Monomial(n), F.one()});
  sys.polys.push_back(Polynomial::from_terms(sys.ring, std::move(lin)));
  return sys;
}

const char* family_name(BenchFamily f) {
  switch (f) {
    case BenchFamily::cyclic:
      return "cyclic";
    case BenchFamily::katsura:
      return "katsura";
    case BenchFamily::eco:
      return "eco";
    case BenchFamily::file:
      return "file";
  }
  return "?";
}

GeneratedSystem materialize(const BenchmarkSpec& spec) {
  GeneratedSystem sys;
  switch (spec.family) {
    case BenchFamily::cyclic:
      sys = gen_cyclic(spec.n, spec.p, spec.order);
      break;
    case BenchFamily::katsura:
      sys = gen_katsura(spec.n, spec.p, spec.order);
      break;
    case BenchFamily::eco:
      sys = gen_eco(spec.n, spec.p, spec.order);
      break;
    case BenchFamily::file:
      sys.polys = spec.file_polys;
      if (!sys.polys.empty()) sys.ring = sys.polys.front().ring();
      break;
  }
  if (spec.homogenized) {
    sys.polys = homogenize(sys.polys);
    if (!sys.polys.empty()) sys.ring = sys.polys.front().ring();
    sys.varnames.push_back("h");
  }
  return sys;
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::sba:
      return "sba";
    case Algorithm::f5_presort:
      return "f5_presort";
    case Algorithm::buchberger_sugar:
      return "buchberger_sugar";
  }
  return "?";
}

std::string sig_order_name(const EngineConfig& cfg) {
  if (cfg.algorithm == Algorithm::buchberger_sugar) return "none";
  return cfg.sig_order == SigOrderKind::pot ? "pot" : "schreyer";
}

std::string criteria_name(const CriteriaFlags& c) {
  if (c.nonminimal_syzygy && c.rewritable) return "all";
  if (c.nonminimal_syzygy) return "syz";
  if (c.rewritable) return "rewrite";
  return "none";
}

std::string csv_header() {
  return "# sgb stats csv v1\n"
         "benchmark,n,homogenized,algorithm,sig_order,criteria,reduction_steps,"
         "higher_sig_detections,ratio_pct,spoly_reductions,zero_reductions,"
         "discarded_nonminimal_pair,discarded_syzygy_criterion,discarded_rewritable,"
         "sig_redundant_skips,basis_size_final,verified,elapsed_ms";
}

std::string csv_row(const std::string& benchmark, int n, bool homogenized,
                    const EngineConfig& cfg, const RunStats& stats,
                    const std::string& verified) {
  char ratio[32];
  std::snprintf(ratio, sizeof(ratio), "%.4f", stats.higher_sig_ratio_pct());
  std::string row;
  row += benchmark;
  row += ',';
  row += std::to_string(n);
  row += ',';
  row += homogenized ? "true" : "false";
  row += ',';
  row += algorithm_name(cfg.algorithm);
  row += ',';
  row += sig_order_name(cfg);
  row += ',';
  row += criteria_name(cfg.criteria);
  row += ',';
  row += std::to_string(stats.reduction_steps);
  row += ',';
  row += std::to_string(stats.higher_sig_detections);
  row += ',';
  row += ratio;
  row += ',';
  row += std::to_string(stats.spoly_reductions);
  row += ',';
  row += std::to_string(stats.zero_reductions);
  row += ',';
  row += std::to_string(stats.discarded_nonminimal_pair);
  row += ',';
  row += std::to_string(stats.discarded_syzygy_criterion);
  row += ',';
  row += std::to_string(stats.discarded_rewritable);
  row += ',';
  row += std::to_string(stats.sig_redundant_skips);
  row += ',';
  row += std::to_string(stats.basis_size_final);
  row += ',';
  row += verified;
  row += ',';
  row += std::to_string(stats.elapsed_ms);
  return row;
}

std::vector<std::string> run_suite(const std::vector<BenchmarkSpec>& specs,
                                   const std::vector<EngineConfig>& engines,
                                   const SuiteOptions& opt) {
  std::vector<std::string> rows;
  for (const auto& spec : specs) {
    GeneratedSystem sys = materialize(spec);
    const std::string name = spec.label.empty() ? family_name(spec.family) : spec.label;

    // The classical oracle basis, computed once per system.
    bool oracle_ok = true;
    std::vector<Polynomial> oracle;
    try {
      EngineConfig ocfg;
      ocfg.algorithm = Algorithm::buchberger_sugar;
      ocfg.timeout_ms = opt.cell_timeout_ms;
      oracle = buchberger_sugar(sys.polys, ocfg).basis;
    } catch (const EngineTimeout&) {
      oracle_ok = false;
    }

    for (const auto& cfg : engines) {
      EngineConfig cell = cfg;
      cell.timeout_ms = opt.cell_timeout_ms;
      try {
        GrobnerResult res = compute_groebner(sys.polys, cell);
        bool ok = oracle_ok && verify_groebner(res.basis, sys.polys, &oracle);
        rows.push_back(csv_row(name, spec.n, spec.homogenized, cfg, res.stats,
                               ok ? "true" : "false"));
      } catch (const EngineTimeout&) {
        rows.push_back(csv_row(name, spec.n, spec.homogenized, cfg, RunStats{}, "TIMEOUT"));
      }
    }
  }
  return rows;
}

}  // namespace sgb
