// Command-line driver: parses an input system (file or stdin) or generates
// benchmark systems, runs the selected engine, prints the reduced basis and
// optionally a stats CSV row.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgb/bench.hpp"
#include "sgb/engine.hpp"
#include "sgb/io.hpp"

namespace {

constexpr const char* kFormatNotes =
    "Input format v1:\n"
    "  ring: p=<prime> vars=<v1,...,vn> order=<grevlex|lex>\n"
    "  one polynomial per nonempty line; '#' starts a comment.\n"
    "  Terms are joined by '+'/'-'; a term is an optional integer\n"
    "  coefficient and '*'-joined powers v^k or v; bare integers are\n"
    "  constant terms (example: 3*x^2*y - 2*z + 1).\n"
    "\n"
    "Stats CSV schema v1 (fixed column order):\n"
    "  benchmark,n,homogenized,algorithm,sig_order,criteria,reduction_steps,\n"
    "  higher_sig_detections,ratio_pct,spoly_reductions,zero_reductions,\n"
    "  discarded_nonminimal_pair,discarded_syzygy_criterion,discarded_rewritable,\n"
    "  sig_redundant_skips,basis_size_final,verified,elapsed_ms\n";

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void append_rows(const std::string& path, const std::vector<std::string>& rows) {
  bool fresh = !std::ifstream(path).good();
  std::ofstream out(path, std::ios::app);
  if (fresh) out << sgb::csv_header() << '\n';
  for (const auto& r : rows) out << r << '\n';
}

// "cyclic:4,katsura:5" -> specs
std::vector<sgb::BenchmarkSpec> parse_bench_arg(const std::string& arg, bool homogenize) {
  std::vector<sgb::BenchmarkSpec> specs;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--bench", "expected family:n, got '" + item + "'");
    std::string fam = item.substr(0, colon);
    sgb::BenchmarkSpec spec;
    if (fam == "cyclic")
      spec.family = sgb::BenchFamily::cyclic;
    else if (fam == "katsura")
      spec.family = sgb::BenchFamily::katsura;
    else if (fam == "eco")
      spec.family = sgb::BenchFamily::eco;
    else
      throw CLI::ValidationError("--bench", "unknown family '" + fam + "'");
    spec.n = std::stoi(item.substr(colon + 1));
    spec.homogenized = homogenize;
    spec.label = fam;
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner basis engine over GF(p): signature-based algorithms "
               "with a classical Buchberger/sugar oracle"};
  app.footer(kFormatNotes);

  std::string alg = "sba";
  std::string sig_order = "pot";
  std::string criteria = "all";
  std::string rewrite = "ap";
  std::string stats_path;
  std::string bench_arg;
  std::string input_path = "-";
  bool homogenize_flag = false;
  bool keep_h = false;
  bool check = false;
  bool raw_coeffs = false;
  bool no_tail = false;
  double timeout_sec = 300.0;

  app.add_option("--alg", alg, "Engine: sba | f5 | buchberger")
      ->check(CLI::IsMember({"sba", "f5", "buchberger"}));
  app.add_option("--sig-order", sig_order, "Signature ordering: pot | schreyer")
      ->check(CLI::IsMember({"pot", "schreyer"}));
  app.add_option("--criteria", criteria, "Pair criteria: none | syz | rewrite | all")
      ->check(CLI::IsMember({"none", "syz", "rewrite", "all"}));
  app.add_option("--rewrite", rewrite, "Rewritable criterion flavor: ap | f5")
      ->check(CLI::IsMember({"ap", "f5"}));
  app.add_flag("--homogenize", homogenize_flag,
               "Homogenize the input before computing; output is dehomogenized, "
               "interreduced and completed unless --keep-h is given");
  app.add_flag("--keep-h", keep_h, "Keep the homogenized basis (with variable h)");
  app.add_option("--stats", stats_path, "Append a stats CSV row to this file");
  app.add_flag("--check", check, "Verify the basis against the classical oracle; exit 1 on failure");
  app.add_option("--bench", bench_arg,
                 "Run generated systems instead of reading input, e.g. cyclic:4,eco:5");
  app.add_option("--timeout", timeout_sec, "Per-run timeout in seconds (0 disables)");
  app.add_flag("--raw-coeffs", raw_coeffs, "Print coefficients in [0,p) without symmetric display");
  app.add_flag("--no-tail-reduce", no_tail, "Head-only sig-safe reduction");
  app.add_option("input", input_path, "Input file, or '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  sgb::EngineConfig cfg;
  cfg.algorithm = alg == "sba"        ? sgb::Algorithm::sba
                  : alg == "f5"       ? sgb::Algorithm::f5_presort
                                      : sgb::Algorithm::buchberger_sugar;
  cfg.sig_order = sig_order == "pot" ? sgb::SigOrderKind::pot : sgb::SigOrderKind::schreyer;
  cfg.criteria.nonminimal_syzygy = criteria == "all" || criteria == "syz";
  cfg.criteria.rewritable = criteria == "all" || criteria == "rewrite";
  cfg.rewrite_flavor =
      rewrite == "ap" ? sgb::RewriteFlavor::arri_perry : sgb::RewriteFlavor::f5_rule_list;
  cfg.tail_reduce = !no_tail;
  cfg.timeout_ms = static_cast<std::uint64_t>(timeout_sec * 1000.0);

  try {
    if (!bench_arg.empty()) {
      auto specs = parse_bench_arg(bench_arg, homogenize_flag);
      sgb::SuiteOptions opt;
      opt.cell_timeout_ms = cfg.timeout_ms;
      auto rows = sgb::run_suite(specs, {cfg}, opt);
      if (!stats_path.empty()) {
        append_rows(stats_path, rows);
      } else {
        std::cout << sgb::csv_header() << '\n';
        for (const auto& r : rows) std::cout << r << '\n';
      }
      if (check) {
        for (const auto& r : rows)
          if (r.find(",true,") == std::string::npos) return 1;
      }
      return 0;
    }

    std::string text;
    if (input_path == "-") {
      text = read_stream(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return 2;
      }
      text = read_stream(in);
    }

    sgb::InputSystem sys = sgb::parse_input(text);
    std::vector<std::string> varnames = sys.varnames;
    std::vector<sgb::Polynomial> inputs = sys.polys;
    if (homogenize_flag) {
      for (const auto& v : varnames)
        if (v == "h") {
          std::cerr << "error: --homogenize reserves the variable name 'h'\n";
          return 2;
        }
      inputs = sgb::homogenize(inputs);
      varnames.push_back("h");
    }

    sgb::GrobnerResult res = sgb::compute_groebner(inputs, cfg);
    std::vector<sgb::Polynomial> basis = res.basis;
    if (homogenize_flag && !keep_h) {
      auto de = sgb::dehomogenize_basis(basis);
      if (de.completion_added)
        std::cerr << "note: completion extended the dehomogenized basis\n";
      basis = de.basis;
      varnames.pop_back();
    }

    bool verified = true;
    if (check) {
      const auto& against = (homogenize_flag && !keep_h) ? sys.polys : inputs;
      verified = sgb::verify_groebner(basis, against);
    }

    sgb::PrintOptions popt;
    popt.symmetric_coeffs = !raw_coeffs;
    for (const auto& p : basis) std::cout << sgb::format_polynomial(p, varnames, popt) << '\n';

    if (!stats_path.empty()) {
      append_rows(stats_path,
                  {sgb::csv_row("file", static_cast<int>(sys.polys.size()), homogenize_flag,
                                cfg, res.stats, verified ? "true" : "false")});
    }
    return verified ? 0 : 1;
  } catch (const sgb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const sgb::EngineTimeout&) {
    std::cerr << "error: computation exceeded the timeout\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
