#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isospec {

// Exact rational. GMP keeps every value canonical: gcd(p, q) = 1 and q > 0.
using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", with optional sign and surrounding blanks. Throws
// ParseError on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Scalar& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Scalar pochhammer(const Scalar& x, unsigned long k);

// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x.
Scalar binomial(const Scalar& x, unsigned long k);

Scalar power(const Scalar& base, unsigned long exponent);

}  // namespace isospec
