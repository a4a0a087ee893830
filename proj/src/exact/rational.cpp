#include "symhilb/exact/rational.hpp"

#include <cctype>

#include "symhilb/errors.hpp"

namespace symhilb::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

std::string to_decimal(const BigRational& q, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigRational scaled = abs(q) * scale;
  // round half away from zero
  BigInt rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string body = rounded.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = sgn(q) < 0 && rounded != 0 ? "-" : "";
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  return out;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational binomial(const BigRational& t, unsigned long k) {
  BigRational r = 1;
  for (unsigned long j = 0; j < k; ++j) {
    r *= (t - BigRational(static_cast<long>(j)));
    r /= BigRational(static_cast<long>(j + 1));
  }
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace symhilb::exact
