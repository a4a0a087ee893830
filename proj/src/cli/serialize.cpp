#include "symhilb/cli/serialize.hpp"

#include "symhilb/errors.hpp"

namespace symhilb::cli {

using exact::FactoredDenominator;
using exact::Polynomial;
using exact::RationalFunction;

Json rational_json(const BigRational& q) { return exact::to_string(q); }

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw InputError("expected a rational string or an integer, got " + j.dump());
}

Json rationals_json(const std::vector<BigRational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json decimals_json(const std::vector<BigRational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(exact::to_decimal(q, kDecimalDigits));
  return out;
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_json(c));
  if (out.empty()) out.push_back("0");
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a coefficient list");
  std::vector<BigRational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Polynomial(std::move(c));
}

Json series_json(const RationalFunction& f) {
  Json out;
  out["numerator"] = polynomial_json(f.numerator());
  Json den = Json::array();
  for (const auto& [m, e] : f.denominator().factors()) den.push_back({m, e});
  out["denominator"] = den;
  if (f.denominator().monomial_shift() > 0) out["denominatorShift"] = f.denominator().monomial_shift();
  if (!f.denominator().is_cyclotomic()) out["denominatorExtra"] = polynomial_json(f.denominator().other());
  return out;
}

RationalFunction series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
    throw InputError("series payload needs numerator and denominator");
  FactoredDenominator::FactorMap factors;
  for (const auto& pair : j.at("denominator")) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("denominator entries must be [m, e] pairs");
    const long m = pair[0].get<long>(), e = pair[1].get<long>();
    if (m < 1 || e < 1) throw InputError("denominator pairs need m >= 1 and e >= 1");
    factors[static_cast<std::size_t>(m)] += static_cast<std::size_t>(e);
  }
  const std::size_t shift = j.contains("denominatorShift") ? j.at("denominatorShift").get<std::size_t>() : 0;
  const Polynomial extra = j.contains("denominatorExtra") ? polynomial_from_json(j.at("denominatorExtra")) : Polynomial{1};
  return RationalFunction(polynomial_from_json(j.at("numerator")), FactoredDenominator(factors, shift, extra));
}

Json laurent_json(const exact::LaurentExpansion& e) {
  Json out;
  out["poleOrder"] = e.pole_order;
  out["coefficients"] = rationals_json(e.coefficients);
  out["coefficientsDecimal"] = decimals_json(e.coefficients);
  return out;
}

Json make_document(const std::string& command, Json request, Json result) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["command"] = command;
  doc["request"] = std::move(request);
  doc["result"] = std::move(result);
  return doc;
}

}  // namespace symhilb::cli
