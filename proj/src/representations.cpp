#include "isospec/representations.hpp"

#include <vector>

#include "isospec/errors.hpp"

namespace isospec {

ShiftOperator::ShiftOperator(GridStep step, const Terms& terms) : step_(std::move(step)) {
  for (const auto& [k, p] : terms) accumulate(k, p);
}

ShiftOperator ShiftOperator::identity(const GridStep& step) {
  return term(step, 0, Polynomial::constant(1));
}

ShiftOperator ShiftOperator::term(const GridStep& step, int shift, const Polynomial& coeff) {
  ShiftOperator s(step);
  s.accumulate(shift, coeff);
  return s;
}

Polynomial ShiftOperator::coefficient(int shift) const {
  auto it = terms_.find(shift);
  return it == terms_.end() ? Polynomial() : it->second;
}

int ShiftOperator::width() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first - terms_.begin()->first;
}

void ShiftOperator::accumulate(int shift, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (!coeff.basis().is_monomial()) {
    throw DomainError("shift-operator coefficients must be in the monomial basis");
  }
  auto [it, inserted] = terms_.try_emplace(shift, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void ShiftOperator::require_same_step(const ShiftOperator& other) const {
  if (!(step_ == other.step_)) {
    throw DomainError("grid step mismatch: " + to_string(step_.value()) + " vs " +
                      to_string(other.step_.value()));
  }
}

ShiftOperator& ShiftOperator::operator+=(const ShiftOperator& other) {
  require_same_step(other);
  for (const auto& [k, p] : other.terms_) accumulate(k, p);
  return *this;
}

ShiftOperator& ShiftOperator::operator-=(const ShiftOperator& other) {
  require_same_step(other);
  for (const auto& [k, p] : other.terms_) accumulate(k, p * Scalar(-1));
  return *this;
}

ShiftOperator& ShiftOperator::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, p] : terms_) p *= c;
  return *this;
}

// (p S_k)(q S_l) = p(x) q(x + k delta) S_{k+l}
ShiftOperator operator*(const ShiftOperator& s, const ShiftOperator& t) {
  s.require_same_step(t);
  ShiftOperator result(s.step_);
  for (const auto& [k, p] : s.terms_) {
    const Scalar offset = s.step_.value() * k;
    for (const auto& [l, q] : t.terms_) result.accumulate(k + l, p * q.shifted(offset));
  }
  return result;
}

ShiftOperator shift_compose(const ShiftOperator& s, const ShiftOperator& t) { return s * t; }

Polynomial quasi_monomial(int n, const GridStep& step) {
  if (n < 0) throw DomainError("quasi-monomial degree must be non-negative");
  Polynomial p = Polynomial::constant(1);
  for (int k = 0; k < n; ++k) p = p * Polynomial({Scalar(-step.value() * k), Scalar(1)});
  return p;
}

namespace {

// Peels off the top quasi-monomial until nothing is left.
Polynomial monomial_to_quasi(const Polynomial& p, const GridStep& step) {
  std::vector<Scalar> out(p.coeffs().size());
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    const Scalar c = rest.leading();
    out[static_cast<std::size_t>(d)] = c;
    rest -= quasi_monomial(d, step) * c;
  }
  return Polynomial(std::move(out), BasisTag::quasi(step));
}

Polynomial quasi_to_monomial(const Polynomial& p) {
  const GridStep& step = p.basis().step();
  Polynomial out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c != 0) out += quasi_monomial(k, step) * c;
  }
  return out;
}

}  // namespace

Polynomial convert_basis(const Polynomial& p, const BasisTag& target) {
  if (p.basis() == target) return p;
  if (p.basis().is_quasi() && target.is_quasi()) {
    throw DomainError("cannot convert between " + p.basis().describe() + " and " +
                      target.describe());
  }
  if (p.basis().is_monomial()) return monomial_to_quasi(p, target.step());
  return quasi_to_monomial(p);
}

Polynomial apply_continuum(const AlgebraElement& e, const Polynomial& p) {
  const Polynomial input = convert_basis(p, BasisTag::monomial());
  Polynomial result;
  // Terms are ordered by (m, n); derivatives are recomputed per term, which
  // is cheap at the degrees used here.
  for (const auto& [w, c] : e.terms()) {
    Polynomial image = input;
    for (int i = 0; i < w.a_degree && !image.is_zero(); ++i) image = image.derivative();
    if (image.is_zero()) continue;
    std::vector<Scalar> raised(static_cast<std::size_t>(w.b_degree), Scalar(0));
    raised.insert(raised.end(), image.coeffs().begin(), image.coeffs().end());
    result += Polynomial(std::move(raised)) * c;
  }
  return result;
}

ShiftOperator realize_lattice(const AlgebraElement& e, const GridStep& step) {
  const Scalar inv = 1 / step.value();
  const ShiftOperator lower = ShiftOperator::term(step, 1, Polynomial::constant(inv)) +
                              ShiftOperator::term(step, 0, Polynomial::constant(-inv));
  const ShiftOperator raise = ShiftOperator::term(step, -1, Polynomial({Scalar(0), Scalar(1)}));

  std::vector<ShiftOperator> lower_powers{ShiftOperator::identity(step)};
  std::vector<ShiftOperator> raise_powers{ShiftOperator::identity(step)};
  ShiftOperator result(step);
  for (const auto& [w, c] : e.terms()) {
    while (static_cast<int>(raise_powers.size()) <= w.b_degree) {
      raise_powers.push_back(raise_powers.back() * raise);
    }
    while (static_cast<int>(lower_powers.size()) <= w.a_degree) {
      lower_powers.push_back(lower_powers.back() * lower);
    }
    result += raise_powers[static_cast<std::size_t>(w.b_degree)] *
              lower_powers[static_cast<std::size_t>(w.a_degree)] * c;
  }
  return result;
}

Polynomial apply_lattice(const ShiftOperator& s, const Polynomial& p) {
  const Polynomial input = convert_basis(p, BasisTag::monomial());
  Polynomial result;
  for (const auto& [k, coeff] : s.terms()) result += coeff * input.shifted(s.step().value() * k);
  return result;
}

Polynomial fock_vector(int n, const GridStep& step) {
  if (n < 0) throw DomainError("Fock level must be non-negative");
  const ShiftOperator raise = realize_lattice(AlgebraElement::b(), step);
  Polynomial v = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) v = apply_lattice(raise, v);
  return v;
}

}  // namespace isospec
