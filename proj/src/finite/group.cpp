#include "symhilb/finite/group.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "symhilb/errors.hpp"

namespace symhilb::finite {

using exact::FactoredDenominator;
using exact::Polynomial;

std::size_t FiniteDiagonalGroup::element_order(const Element& g) const {
  std::size_t d = exponent;
  for (std::size_t k : g) d = std::gcd(d, k);
  return exponent / d;
}

std::size_t FiniteDiagonalGroup::coordinate_order(std::size_t i) const {
  std::size_t d = exponent;
  for (const auto& e : elements) d = std::gcd(d, e[i]);
  return exponent / d;
}

std::string FiniteDiagonalGroup::element_to_string(const Element& g) const {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ",";
    const std::size_t d = std::gcd(g[i], exponent);
    out += g[i] == 0 ? "0" : std::to_string(g[i] / d) + "/" + std::to_string(exponent / d);
  }
  return out + ")";
}

namespace {

long parse_long(const std::string& tok, const std::string& context) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || *end != '\0' || errno != 0) throw InputError("invalid integer '" + tok + "' in " + context);
  return v;
}

std::size_t mod(long v, std::size_t m) {
  const long r = v % static_cast<long>(m);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(m) : r);
}

}  // namespace

Generator parse_generator(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("generator '" + text + "' must look like m:e1,...,en");
  Generator g;
  const long m = parse_long(text.substr(0, colon), text);
  if (m < 1) throw InputError("generator order must be positive in '" + text + "'");
  g.order = static_cast<std::size_t>(m);
  std::stringstream rest(text.substr(colon + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) g.exponents.push_back(parse_long(tok, text));
  if (g.exponents.empty()) throw InputError("generator '" + text + "' has no exponents");
  return g;
}

Generator parse_group_spec(const std::string& text) {
  const std::string prefix = "cyclic:";
  if (text.rfind(prefix, 0) != 0) throw InputError("group spec '" + text + "' must start with cyclic:");
  return parse_generator(text.substr(prefix.size()));
}

FiniteDiagonalGroup enumerate_group(std::size_t dimension, const std::vector<Generator>& gens) {
  if (dimension == 0) throw InputError("dimension must be positive");
  FiniteDiagonalGroup g;
  g.dimension = dimension;
  g.generators = gens;
  for (const auto& gen : gens) {
    if (gen.order == 0) throw InputError("generator order must be positive");
    if (gen.exponents.size() != dimension) throw InputError("generator length differs from the dimension");
    g.exponent = std::lcm(g.exponent, gen.order);
  }
  std::vector<Element> scaled;
  for (const auto& gen : gens) {
    Element e(dimension);
    for (std::size_t i = 0; i < dimension; ++i) e[i] = mod(gen.exponents[i], gen.order) * (g.exponent / gen.order);
    scaled.push_back(e);
  }
  std::set<Element> seen{Element(dimension, 0)};
  std::vector<Element> frontier{Element(dimension, 0)};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& s : scaled) {
        Element y(dimension);
        for (std::size_t i = 0; i < dimension; ++i) y[i] = (x[i] + s[i]) % g.exponent;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  g.elements.assign(seen.begin(), seen.end());
  return g;
}

namespace {

// Invariant monomials: for every generator, sum_i (alpha_i - beta_i) e_i = 0 mod m.
// The state is the tuple of these residues in mixed radix.
struct CountTable {
  std::size_t states = 1;
  std::vector<std::size_t> radix;
  std::vector<std::size_t> shifts;  // state shift of z_i and of zbar_i, interleaved
  std::vector<BigInt> cells;
};

std::size_t add_states(const CountTable& t, std::size_t s, std::size_t delta) {
  std::size_t out = 0, mul = 1;
  for (std::size_t r : t.radix) {
    out += ((s % r + delta % r) % r) * mul;
    s /= r;
    delta /= r;
    mul *= r;
  }
  return out;
}

CountTable make_counts(const FiniteDiagonalGroup& g, std::size_t max_degree) {
  CountTable t;
  for (const auto& gen : g.generators) {
    t.radix.push_back(gen.order);
    t.states *= gen.order;
  }
  for (std::size_t i = 0; i < g.dimension; ++i)
    for (int sign : {1, -1}) {
      std::size_t delta = 0, mul = 1;
      for (const auto& gen : g.generators) {
        delta += mod(sign * gen.exponents[i], gen.order) * mul;
        mul *= gen.order;
      }
      t.shifts.push_back(delta);
    }
  t.cells.assign((max_degree + 1) * t.states, 0);
  t.cells[0] = 1;
  return t;
}

// Source state s' with s' + delta = s, for every s.
std::vector<std::size_t> sources(const CountTable& t, std::size_t delta) {
  std::vector<std::size_t> src(t.states);
  for (std::size_t s = 0; s < t.states; ++s) src[add_states(t, s, delta)] = s;
  return src;
}

std::vector<BigInt> extract(const CountTable& t, std::size_t max_degree) {
  std::vector<BigInt> out(max_degree + 1);
  for (std::size_t d = 0; d <= max_degree; ++d) out[d] = t.cells[d * t.states];
  return out;
}

}  // namespace

std::vector<BigInt> molien_counts_serial(const FiniteDiagonalGroup& g, std::size_t max_degree) {
  CountTable t = make_counts(g, max_degree);
  for (std::size_t delta : t.shifts) {
    const auto src = sources(t, delta);
    for (std::size_t d = 1; d <= max_degree; ++d)
      for (std::size_t s = 0; s < t.states; ++s) t.cells[d * t.states + s] += t.cells[(d - 1) * t.states + src[s]];
  }
  return extract(t, max_degree);
}

std::vector<BigInt> molien_counts_parallel(const FiniteDiagonalGroup& g, std::size_t max_degree) {
  CountTable t = make_counts(g, max_degree);
  const long states = static_cast<long>(t.states);
  for (std::size_t delta : t.shifts) {
    const auto src = sources(t, delta);
    for (std::size_t d = 1; d <= max_degree; ++d) {
#pragma omp parallel for schedule(static)
      for (long s = 0; s < states; ++s) {
        const auto us = static_cast<std::size_t>(s);
        t.cells[d * t.states + us] += t.cells[(d - 1) * t.states + src[us]];
      }
    }
  }
  return extract(t, max_degree);
}

std::vector<BigInt> molien_counts(const FiniteDiagonalGroup& g, std::size_t max_degree) {
  std::size_t states = 1;
  for (const auto& gen : g.generators) states *= gen.order;
  if (states * max_degree >= (1u << 14)) return molien_counts_parallel(g, max_degree);
  return molien_counts_serial(g, max_degree);
}

exact::RationalFunction molien_series(const FiniteDiagonalGroup& g, std::size_t slack) {
  FactoredDenominator::FactorMap factors;
  for (std::size_t i = 0; i < g.dimension; ++i) factors[g.coordinate_order(i)] += 2;
  const FactoredDenominator den(factors);
  const std::size_t bound = den.degree() - 2 * g.dimension;
  const std::size_t order = den.degree() + bound + slack;
  const auto counts = molien_counts(g, order);
  std::vector<BigRational> c(counts.begin(), counts.end());
  const Polynomial num = exact::rational_reconstruct(exact::TruncatedSeries(std::move(c), order), den, bound, slack);
  return exact::RationalFunction(num, den).reduced();
}

ReflectionData reflection_analysis(const FiniteDiagonalGroup& g, TieBreak tie) {
  ReflectionData out;
  for (const auto& e : g.elements) {
    const auto nontrivial = std::count_if(e.begin(), e.end(), [](std::size_t k) { return k != 0; });
    if (nontrivial == 1) out.pseudoreflections.push_back(e);
    if (nontrivial == 2) out.q_set.push_back(e);
  }
  auto powers = [&](const Element& x) {
    std::vector<Element> ps;
    Element y = x;
    for (std::size_t k = 1; k < g.element_order(x); ++k) {
      ps.push_back(y);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + x[i]) % g.exponent;
    }
    return ps;
  };

  std::vector<Element> candidates = out.pseudoreflections;
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Element& a, const Element& b) {
    const std::size_t oa = g.element_order(a), ob = g.element_order(b);
    if (oa != ob) return oa > ob;
    return tie == TieBreak::Ascending ? a < b : b < a;
  });
  std::set<Element> covered;
  for (const auto& c : candidates) {
    if (covered.count(c)) continue;
    out.primitive.push_back(c);
    out.primitive_orders.push_back(g.element_order(c));
    for (const auto& p : powers(c)) covered.insert(p);
  }

  for (const auto& p : out.pseudoreflections) {
    std::size_t owners = 0;
    for (const auto& prim : out.primitive) {
      const auto ps = powers(prim);
      owners += static_cast<std::size_t>(std::count(ps.begin(), ps.end(), p));
    }
    if (owners != 1)
      throw PrimitiveCoverFailure("pseudoreflection " + g.element_to_string(p) + " is a power of " +
                                  std::to_string(owners) + " primitive elements");
  }
  return out;
}

namespace {

BigRational pow_sum(const std::vector<std::size_t>& orders, long c4, long c2, long c0) {
  BigRational s = 0;
  for (std::size_t m : orders) {
    const BigInt mm = BigInt(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
    s += BigRational(c4 * mm * mm + c2 * mm + c0);
  }
  return s / 720;
}

}  // namespace

GFinLaurent gfin_laurent(const FiniteDiagonalGroup& g) {
  GFinLaurent out;
  out.series = molien_series(g);
  out.expansion = exact::laurent_at_one(out.series, 5);
  out.reflections = reflection_analysis(g);
  const auto& e = out.expansion;
  const BigRational order(static_cast<unsigned long>(g.order()));

  auto fail = [&](const std::string& what) { throw TheoremInconsistency("finite group of order " + order.get_str() + ": " + what); };
  if (e.pole_order != static_cast<long>(2 * g.dimension)) fail("pole order " + std::to_string(e.pole_order));
  if (e[0] != 1 / order) fail("gamma0 = " + exact::to_string(e[0]));
  if (sgn(e[1]) != 0) fail("gamma1 = " + exact::to_string(e[1]));

  BigRational s2 = 0;
  for (std::size_t m : out.reflections.primitive_orders) s2 += static_cast<long>(m * m - 1);
  out.gamma2_closed = s2 / (12 * order);
  if (e[2] != out.gamma2_closed || e[3] != out.gamma2_closed)
    fail("gamma2/gamma3 = " + exact::to_string(e[2]) + "/" + exact::to_string(e[3]) + ", closed form " +
         exact::to_string(out.gamma2_closed));

  const auto& orders = out.reflections.primitive_orders;
  out.q_sum = order * e[4] - pow_sum(orders, -1, 50, -49);
  if (order * e[5] != pow_sum(orders, -2, 40, -38) + 2 * out.q_sum) fail("gamma5 formula disagrees with gamma4");
  out.relation = e[3] - 2 * e[4] + e[5];
  if (sgn(out.relation) != 0) fail("gamma3 - 2 gamma4 + gamma5 = " + exact::to_string(out.relation));
  return out;
}

BigRational gessel_sum(std::size_t m, GesselKind kind) {
  const BigInt mm = BigInt(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
  switch (kind) {
    case GesselKind::Quad: return exact::make_rational(-(mm - 1), 12);
    case GesselKind::Cube1: return exact::make_rational(-(mm - 1), 24);
    case GesselKind::Cube2: return exact::make_rational(mm - 1, 24);
    case GesselKind::Quart1:
    case GesselKind::Quart3: return exact::make_rational(mm * mm - 20 * mm + 19, 720);
    case GesselKind::Quart2: return exact::make_rational(mm * mm + 10 * mm - 11, 720);
  }
  return 0;
}

}  // namespace symhilb::finite
