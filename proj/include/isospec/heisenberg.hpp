#pragma once

#include <compare>
#include <map>

#include "isospec/scalar.hpp"

namespace isospec {

// A normal-ordered word b^m a^n.
struct Word {
  int b_degree = 0;
  int a_degree = 0;

  auto operator<=>(const Word&) const = default;
};

// Element of the universal enveloping algebra of [a, b] = 1, kept as a finite
// sum of normal-ordered words b^m a^n. Zero coefficients are never stored, so
// two elements are equal iff their term maps are equal.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar>;

  AlgebraElement() = default;

  static AlgebraElement constant(const Scalar& c);
  static AlgebraElement word(int b_degree, int a_degree, const Scalar& c = 1);
  static AlgebraElement a() { return word(0, 1); }
  static AlgebraElement b() { return word(1, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(int b_degree, int a_degree) const;

  // Largest m - n over the stored words; the amount by which the element can
  // raise polynomial degree in the continuum representation.
  int degree_shift() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement u, const AlgebraElement& v) { return u += v; }
  friend AlgebraElement operator-(AlgebraElement u, const AlgebraElement& v) { return u -= v; }
  friend AlgebraElement operator-(AlgebraElement u) { return u *= -1; }
  friend AlgebraElement operator*(AlgebraElement u, const Scalar& c) { return u *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement u) { return u *= c; }
  friend AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void accumulate(const Word& w, const Scalar& c);

  Terms terms_;
};

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v);

// Product rewritten to normal order with
//   a^n b^m = sum_k k! C(n,k) C(m,k) b^(m-k) a^(n-k).
AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v);

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v);

AlgebraElement power(const AlgebraElement& u, unsigned exponent);

enum class Sl2Kind { kPlus, kZero, kMinus };

// Spin-n generators: J+ = b^2 a - n b, J0 = b a - n/2, J- = a.
AlgebraElement sl2_generator(Sl2Kind kind, int n);

}  // namespace isospec
