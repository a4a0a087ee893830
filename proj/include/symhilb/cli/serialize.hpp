#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symhilb/exact/laurent.hpp"
#include "symhilb/exact/rational_function.hpp"

namespace symhilb::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr int kDecimalDigits = 12;

/// Exact rationals travel as "p/q" strings (integers as "p").
Json rational_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

Json rationals_json(const std::vector<BigRational>& v);
Json decimals_json(const std::vector<BigRational>& v);

/// Degree-ascending coefficient list.
Json polynomial_json(const exact::Polynomial& p);
exact::Polynomial polynomial_from_json(const Json& j);

/// {"numerator": [...], "denominator": [[m, e], ...]} plus "denominatorShift"
/// and "denominatorExtra" when the denominator has a power of x or a
/// non-cyclotomic factor.
Json series_json(const exact::RationalFunction& f);
exact::RationalFunction series_from_json(const Json& j);

Json laurent_json(const exact::LaurentExpansion& e);

Json make_document(const std::string& command, Json request, Json result);

}  // namespace symhilb::cli
