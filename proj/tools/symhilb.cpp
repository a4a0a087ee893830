// symhilb: Hilbert series of circle quotients and finite diagonal groups.
#include <CLI11.hpp>

#include <iostream>

#include "symhilb/cli/commands.hpp"
#include "symhilb/errors.hpp"

using namespace symhilb;

namespace {

enum class Format { Json, Text };

std::size_t parse_count(const std::string& flag, long v) {
  if (v < 0) throw InputError(flag + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

void add_format_flags(CLI::App* cmd, Format& format) {
  auto* j = cmd->add_flag_callback("--json", [&format] { format = Format::Json; }, "JSON output (default)");
  auto* t = cmd->add_flag_callback("--text", [&format] { format = Format::Text; }, "plain text output");
  j->excludes(t);
}

struct SourceFlags {
  std::string weights;
  std::vector<std::string> series;
  bool off = false;

  void add(CLI::App* cmd) {
    auto* w = cmd->add_option("--weights", weights, "comma-separated nonzero integer weights");
    auto* s = cmd->add_option("--series", series, "fixture: one two-line file, or numerator and denominator files")
                  ->expected(1, 2);
    w->excludes(s);
    cmd->add_flag("--off", off, "use the off-shell series (weights only)");
  }

  cli::SeriesSource resolve() const {
    cli::SeriesSource src;
    if (!weights.empty()) src.weights = circle::parse_weights(weights);
    src.files = series;
    src.off_shell = off;
    return src;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert series, Laurent coefficients and symplecticity checks"};
  app.require_subcommand(1);
  Format format = Format::Json;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a symplectic circle quotient");
  std::string h_weights;
  bool h_off = false, h_terms = false;
  long h_verify = -1, h_slack = 16;
  hilbert->add_option("--weights", h_weights, "comma-separated nonzero integer weights")->required();
  hilbert->add_flag("--off", h_off, "off-shell series instead of on-shell");
  hilbert->add_option("--oracle-verify", h_verify, "check against monomial counts through this degree");
  hilbert->add_flag("--terms", h_terms, "include the per-weight U_a terms (generic weights)");
  hilbert->add_option("--slack", h_slack, "extra prefix terms for reconstruction");
  add_format_flags(hilbert, format);

  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients at x = 1");
  SourceFlags l_src;
  long l_order = 5;
  l_src.add(laurent);
  laurent->add_option("--order", l_order, "highest coefficient index K");
  add_format_flags(laurent, format);

  auto* symplectic = app.add_subcommand("symplectic", "check the conditions S_1..S_r");
  SourceFlags s_src;
  long s_order = 10;
  s_src.add(symplectic);
  symplectic->add_option("--order", s_order, "r");
  add_format_flags(symplectic, format);

  auto* finite = app.add_subcommand("finite", "Molien series of a finite diagonal unitary group");
  std::vector<std::string> f_gens;
  std::string f_group;
  long f_dim = -1, f_order = 3;
  finite->add_option("--gen", f_gens, "generator m:e1,...,en (repeatable)")->take_all();
  finite->add_option("--group", f_group, "cyclic:m:e1,...,en");
  finite->add_option("--dim", f_dim, "dimension (needed for the trivial group)");
  finite->add_option("--order", f_order, "r for the S_1..S_r check");
  add_format_flags(finite, format);

  auto* scan = app.add_subcommand("scan", "probability scan of the gamma0 integrality condition");
  long sc_n = 3, sc_level = 0;
  std::string sc_out, sc_format;
  bool sc_hits = false;
  scan->add_option("--n", sc_n, "number of weights (3 or more)");
  scan->add_option("--max-level", sc_level, "largest level L")->required();
  scan->add_option("--out", sc_out, "write per-level rows to this file");
  scan->add_option("--format", sc_format, "csv or jsonl (default from the --out extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_flag("--hits", sc_hits, "list the hits");
  add_format_flags(scan, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::Output out;
    if (hilbert->parsed()) {
      cli::HilbertRequest req;
      req.weights = circle::parse_weights(h_weights);
      req.off_shell = h_off;
      if (h_verify >= 0) req.oracle_verify = parse_count("--oracle-verify", h_verify);
      req.terms = h_terms;
      req.slack = parse_count("--slack", h_slack);
      out = cli::cmd_hilbert(req);
    } else if (laurent->parsed()) {
      out = cli::cmd_laurent({l_src.resolve(), parse_count("--order", l_order)});
    } else if (symplectic->parsed()) {
      out = cli::cmd_symplectic({s_src.resolve(), parse_count("--order", s_order)});
    } else if (finite->parsed()) {
      cli::FiniteRequest req;
      for (const auto& g : f_gens) req.generators.push_back(finite::parse_generator(g));
      if (!f_group.empty()) req.generators.push_back(finite::parse_group_spec(f_group));
      if (f_dim >= 0) req.dimension = parse_count("--dim", f_dim);
      req.order = parse_count("--order", f_order);
      out = cli::cmd_finite(req);
    } else {
      cli::ScanRequest req;
      req.n = parse_count("--n", sc_n);
      req.max_level = parse_count("--max-level", sc_level);
      if (!sc_out.empty()) req.out = sc_out;
      if (sc_format == "csv") req.format = cli::ScanFormat::Csv;
      if (sc_format == "jsonl") req.format = cli::ScanFormat::JsonLines;
      req.hits = sc_hits;
      out = cli::cmd_scan(req);
    }
    if (format == Format::Json)
      std::cout << out.document.dump(2) << "\n";
    else
      std::cout << out.text;
    return 0;
  } catch (const std::exception& e) {
    const int code = cli::exit_code(e);
    std::cerr << (code == 2 ? "error: " : "verification failed: ") << e.what() << "\n";
    return code;
  }
}
