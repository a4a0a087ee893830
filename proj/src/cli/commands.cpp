#include "symhilb/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "symhilb/analysis/laurent_analysis.hpp"
#include "symhilb/circle/hilbert.hpp"
#include "symhilb/circle/oracle.hpp"
#include "symhilb/cli/fixture.hpp"
#include "symhilb/diophantine/scan.hpp"
#include "symhilb/errors.hpp"

namespace symhilb::cli {

using exact::LaurentExpansion;
using exact::RationalFunction;

namespace {

template <typename T>
std::string join_plain(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

Json weights_json(const circle::WeightVector& a) {
  Json out = Json::array();
  for (long w : a) out.push_back(w);
  return out;
}

struct ResolvedSeries {
  RationalFunction f;
  Json request;
};

ResolvedSeries resolve(const SeriesSource& src) {
  if (src.weights.has_value() == !src.files.empty())
    throw InputError("give exactly one of --weights or --series");
  ResolvedSeries r;
  if (src.weights) {
    circle::HilbertOptions opts;
    opts.parallel = false;
    const auto h = circle::hilbert_series(*src.weights, opts);
    r.f = src.off_shell ? h.off_shell : h.on_shell;
    r.request["weights"] = weights_json(*src.weights);
    r.request["offShell"] = src.off_shell;
  } else {
    r.f = read_fixture(src.files).reduced();
    r.request["series"] = src.files;
  }
  return r;
}

std::string laurent_text(const LaurentExpansion& e) {
  std::ostringstream os;
  os << "pole order: " << e.pole_order << "\n";
  for (std::size_t k = 0; k < e.length(); ++k) os << "gamma" << k << " = " << exact::to_string(e[k]) << "\n";
  return os.str();
}

Json symplectic_json(const analysis::SymplecticReport& rep) {
  Json out;
  out["orderChecked"] = rep.order_checked;
  out["violations"] = rep.violations;
  out["residuals"] = rationals_json(rep.residuals);
  out["passes"] = rep.passes();
  return out;
}

std::string symplectic_text(const analysis::SymplecticReport& rep) {
  std::ostringstream os;
  os << "checked S_1..S_" << rep.order_checked << ": ";
  if (rep.passes())
    os << "all hold\n";
  else
    os << "violated for m = " << join_plain(rep.violations) << "\n";
  for (std::size_t m : rep.violations) os << "S_" << m << " = " << exact::to_string(rep.residuals[m - 1]) << "\n";
  return os.str();
}

}  // namespace

Output cmd_hilbert(const HilbertRequest& req) {
  circle::HilbertOptions opts;
  opts.slack = req.slack;
  opts.parallel = false;
  if (req.oracle_verify) opts.verify_degree = *req.oracle_verify;
  const auto h = circle::hilbert_series(req.weights, opts);
  const auto profile = circle::normalize(req.weights);

  std::optional<std::size_t> verified;
  if (req.oracle_verify && *req.oracle_verify > 0) {
    const auto counts = circle::oracle_series_serial(req.weights, *req.oracle_verify);
    const auto s = exact::series_of_rational(h.off_shell, *req.oracle_verify);
    for (std::size_t k = 0; k <= *req.oracle_verify; ++k)
      if (s[k] != BigRational(counts[k]))
        throw OracleMismatch("off-shell coefficient " + std::to_string(k) + " disagrees with the monomial count");
    verified = *req.oracle_verify;
  }

  const RationalFunction& f = req.off_shell ? h.off_shell : h.on_shell;
  Json request;
  request["weights"] = weights_json(req.weights);
  request["offShell"] = req.off_shell;
  if (req.oracle_verify) request["oracleVerify"] = *req.oracle_verify;
  Json result;
  result["shell"] = req.off_shell ? "off" : "on";
  result["method"] = circle::to_string(h.method);
  result["effectiveGcd"] = profile.effective_gcd;
  result["series"] = series_json(f);
  result["numeratorDegree"] = f.numerator().degree();
  result["denominatorDegree"] = f.denominator().degree();
  result["palindromicOnShellNumerator"] = h.palindromic;
  if (verified) result["oracleVerifiedThrough"] = *verified;

  std::ostringstream text;
  text << (req.off_shell ? "off" : "on") << "-shell Hilbert series of " << circle::to_string(req.weights) << " ["
       << circle::to_string(h.method) << "]\n"
       << "  numerator:   " << f.numerator().to_string() << "\n"
       << "  denominator: " << f.denominator().to_string() << "\n"
       << "  palindromic on-shell numerator: " << (h.palindromic ? "yes" : "no") << "\n";
  if (verified) text << "  oracle verified through degree " << *verified << "\n";

  if (req.terms) {
    if (!profile.is_generic()) throw NotApplicable("--terms needs pairwise distinct weights");
    Json terms = Json::array();
    const auto parts = circle::generic_terms(profile, opts);
    const auto w = profile.effective().weights();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Json t;
      t["weight"] = w[i];
      t["series"] = series_json(parts[i]);
      terms.push_back(t);
      text << "  U_" << w[i] << " phi_" << i + 1 << " = " << parts[i].to_string() << "\n";
    }
    result["terms"] = terms;
  }
  return {make_document("hilbert", request, result), text.str()};
}

Output cmd_laurent(const LaurentRequest& req) {
  const auto src = resolve(req.source);
  const LaurentExpansion e = exact::laurent_at_one(src.f, std::max<std::size_t>(req.order, 3));
  LaurentExpansion shown = e;
  shown.coefficients.resize(req.order + 1);

  Json request = src.request;
  request["order"] = req.order;
  Json result = laurent_json(shown);
  std::string text = laurent_text(shown);

  if (req.source.weights && !req.source.off_shell) {
    const auto profile = circle::normalize(*req.source.weights);
    const std::size_t n = profile.size();
    if (n >= 2) {
      Json closed;
      bool agree = true;
      const BigRational g0 = analysis::gamma0_closed(profile);
      closed["gamma0"] = rational_json(g0);
      agree = agree && g0 == e[0];
      text += "closed form gamma0 = " + exact::to_string(g0) + "\n";
      if (n >= 3) {
        const auto g = analysis::gamma2_closed(profile);
        closed["gamma2"] = rational_json(g.gamma2);
        closed["gamma3"] = rational_json(g.gamma2);
        closed["complementGcds"] = g.complement_gcds;
        closed["sumOfSquares"] = g.sum_of_squares.get_str();
        agree = agree && g.gamma2 == e[2] && g.gamma2 == e[3];
        text += "closed form gamma2 = gamma3 = " + exact::to_string(g.gamma2) + "\n";
        text += "12 gamma2 / gamma0 = " + exact::to_string(12 * g.gamma2 / g.gamma0) + "\n";
        closed["twelveGamma2OverGamma0"] = rational_json(12 * g.gamma2 / g.gamma0);
      }
      agree = agree && sgn(e[1]) == 0;
      closed["agreement"] = agree;
      result["closedForms"] = closed;
      text += std::string("closed forms agree with the expansion: ") + (agree ? "yes" : "no") + "\n";
    }
  }
  return {make_document("laurent", request, result), text};
}

Output cmd_symplectic(const SymplecticRequest& req) {
  if (req.order == 0) throw InputError("--order must be at least 1");
  const auto src = resolve(req.source);
  const LaurentExpansion e = exact::laurent_at_one(src.f, 2 * req.order - 1);
  const auto rep = analysis::symplectic_check(e, req.order);
  Json request = src.request;
  request["order"] = req.order;
  Json result = symplectic_json(rep);
  result["poleOrder"] = e.pole_order;
  return {make_document("symplectic", request, result), symplectic_text(rep)};
}

Output cmd_finite(const FiniteRequest& req) {
  std::size_t dim = 0;
  if (!req.generators.empty()) dim = req.generators.front().exponents.size();
  if (req.dimension) {
    if (dim != 0 && dim != *req.dimension) throw InputError("--dim disagrees with the generator length");
    dim = *req.dimension;
  }
  if (dim == 0) throw InputError("give at least one --gen or a --dim for the trivial group");
  if (req.order == 0) throw InputError("--order must be at least 1");

  const auto g = finite::enumerate_group(dim, req.generators);
  const auto r = finite::gfin_laurent(g);
  const auto e = req.order > 3 ? exact::laurent_at_one(r.series, 2 * req.order - 1) : r.expansion;
  const auto rep = analysis::symplectic_check(e, req.order);

  Json request;
  Json gens = Json::array();
  for (const auto& gen : req.generators) {
    std::string s = std::to_string(gen.order) + ":";
    for (std::size_t i = 0; i < gen.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(gen.exponents[i]);
    gens.push_back(s);
  }
  request["generators"] = gens;
  request["dimension"] = dim;
  request["order"] = req.order;

  Json result;
  result["groupOrder"] = g.order();
  result["exponent"] = g.exponent;
  result["series"] = series_json(r.series);
  result["laurent"] = laurent_json(r.expansion);
  Json prim = Json::array();
  for (const auto& p : r.reflections.primitive) prim.push_back(g.element_to_string(p));
  result["primitivePseudoreflections"] = prim;
  result["primitiveOrders"] = r.reflections.primitive_orders;
  result["pseudoreflectionCount"] = r.reflections.pseudoreflections.size();
  result["qSetSize"] = r.reflections.q_set.size();
  result["gamma2Closed"] = rational_json(r.gamma2_closed);
  result["qSum"] = rational_json(r.q_sum);
  result["relation"] = rational_json(r.relation);
  result["symplectic"] = symplectic_json(rep);

  std::ostringstream text;
  text << "group of order " << g.order() << " in U_" << dim << "\n"
       << "Molien series: " << r.series.to_string() << "\n"
       << laurent_text(r.expansion) << "primitive pseudoreflection orders: [" << join_plain(r.reflections.primitive_orders)
       << "]\n"
       << "closed form gamma2 = gamma3 = " << exact::to_string(r.gamma2_closed) << "\n"
       << "Q-sum = " << exact::to_string(r.q_sum) << "\n"
       << "gamma3 - 2 gamma4 + gamma5 = " << exact::to_string(r.relation) << "\n"
       << symplectic_text(rep);
  return {make_document("finite", request, result), text.str()};
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 2;
  return 3;
}

std::string scan_csv(const Json& levels) {
  std::ostringstream os;
  os << "level,hits,total,probability,probability_decimal\n";
  for (const auto& l : levels)
    os << l["level"].get<std::size_t>() << "," << l["hits"].get<std::string>() << "," << l["total"].get<std::string>()
       << "," << l["probability"].get<std::string>() << "," << l["probabilityDecimal"].get<std::string>() << "\n";
  return os.str();
}

std::string scan_jsonl(const Json& levels) {
  std::string out;
  for (const auto& l : levels) out += l.dump() + "\n";
  return out;
}

Output cmd_scan(const ScanRequest& req) {
  const auto results = diophantine::probability_scan(req.n, req.max_level, req.hits);
  Json levels = Json::array();
  for (const auto& r : results) {
    Json l;
    l["level"] = r.level;
    l["hits"] = r.hit_count.get_str();
    l["total"] = r.total.get_str();
    l["probability"] = rational_json(r.probability);
    l["probabilityDecimal"] = exact::to_decimal(r.probability, kDecimalDigits);
    if (req.hits) {
      Json h = Json::array();
      for (const auto& w : r.new_hits) h.push_back(weights_json(w));
      l["newHits"] = h;
    }
    levels.push_back(l);
  }

  Json request;
  request["n"] = req.n;
  request["maxLevel"] = req.max_level;
  if (req.out) request["out"] = *req.out;

  if (req.out) {
    ScanFormat fmt = ScanFormat::JsonLines;
    if (req.format)
      fmt = *req.format;
    else if (req.out->size() >= 4 && req.out->substr(req.out->size() - 4) == ".csv")
      fmt = ScanFormat::Csv;
    std::ofstream out(*req.out);
    if (!out) throw InputError("cannot write '" + *req.out + "'");
    out << (fmt == ScanFormat::Csv ? scan_csv(levels) : scan_jsonl(levels));
    request["format"] = fmt == ScanFormat::Csv ? "csv" : "jsonl";
  }

  const auto& last = results.back();
  Json result;
  result["final"] = levels.back();
  result["levels"] = levels;

  std::ostringstream text;
  text << "P(" << last.level << ") = " << last.hit_count << " / " << last.total << " = "
       << exact::to_decimal(last.probability, kDecimalDigits) << "\n";
  if (req.hits)
    for (const auto& r : results)
      for (const auto& w : r.new_hits) text << "  " << circle::to_string(w) << "\n";
  if (req.out) text << "wrote " << *req.out << "\n";
  return {make_document("scan", request, result), text.str()};
}

}  // namespace symhilb::cli
