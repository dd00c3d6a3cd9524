#include "isospec/scalar.hpp"

#include <cctype>
#include <string>

#include "isospec/errors.hpp"

namespace isospec {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view numerator = body.substr(0, slash);
  std::string_view denominator =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(numerator) || !all_digits(denominator)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer den(std::string(denominator), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Integer num(std::string(numerator), 10);
  if (s.front() == '-') num = -num;
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Scalar pochhammer(const Scalar& x, unsigned long k) {
  Scalar r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x + i;
  return r;
}

Scalar binomial(const Scalar& x, unsigned long k) {
  Scalar r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= x - i;
  return r / Scalar(factorial(k));
}

Scalar power(const Scalar& base, unsigned long exponent) {
  Scalar r = 1;
  for (unsigned long i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace isospec
