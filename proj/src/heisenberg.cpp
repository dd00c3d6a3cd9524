#include "isospec/heisenberg.hpp"

#include <algorithm>
#include <limits>

#include "isospec/errors.hpp"

namespace isospec {

AlgebraElement AlgebraElement::constant(const Scalar& c) { return word(0, 0, c); }

AlgebraElement AlgebraElement::word(int b_degree, int a_degree, const Scalar& c) {
  if (b_degree < 0 || a_degree < 0) throw DomainError("word degrees must be non-negative");
  AlgebraElement e;
  e.accumulate(Word{b_degree, a_degree}, c);
  return e;
}

Scalar AlgebraElement::coefficient(int b_degree, int a_degree) const {
  auto it = terms_.find(Word{b_degree, a_degree});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int AlgebraElement::degree_shift() const {
  int shift = std::numeric_limits<int>::min();
  for (const auto& [w, c] : terms_) shift = std::max(shift, w.b_degree - w.a_degree);
  return terms_.empty() ? 0 : shift;
}

void AlgebraElement::accumulate(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) accumulate(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) accumulate(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

// (b^m1 a^n1)(b^m2 a^n2) = b^m1 (a^n1 b^m2) a^n2, and only the middle factor
// needs reordering.
AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement result;
  for (const auto& [wu, cu] : u.terms_) {
    for (const auto& [wv, cv] : v.terms_) {
      const int n = wu.a_degree;
      const int m = wv.b_degree;
      const Scalar c = cu * cv;
      for (int k = 0; k <= std::min(n, m); ++k) {
        const Integer weight = factorial(k) * binomial(n, k) * binomial(m, k);
        result.accumulate(Word{wu.b_degree + m - k, n - k + wv.a_degree}, c * Scalar(weight));
      }
    }
  }
  return result;
}

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) { return u + v; }

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) { return u * v; }

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v) {
  return u * v - v * u;
}

AlgebraElement power(const AlgebraElement& u, unsigned exponent) {
  AlgebraElement r = AlgebraElement::constant(1);
  for (unsigned i = 0; i < exponent; ++i) r = r * u;
  return r;
}

AlgebraElement sl2_generator(Sl2Kind kind, int n) {
  if (n < 0) throw DomainError("sl2 spin must be a non-negative integer");
  const Scalar spin(n);
  switch (kind) {
    case Sl2Kind::kPlus:
      return AlgebraElement::word(2, 1) - AlgebraElement::word(1, 0, spin);
    case Sl2Kind::kZero:
      return AlgebraElement::word(1, 1) - AlgebraElement::constant(spin / 2);
    case Sl2Kind::kMinus:
      return AlgebraElement::a();
  }
  return {};
}

}  // namespace isospec
