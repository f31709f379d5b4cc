#include "landen/reduction.hpp"

#include "landen/errors.hpp"

namespace landen {

SymmetricDenominator::SymmetricDenominator(int p, std::vector<Rational> d)
    : p_(p), d_(std::move(d)) {
  if (p_ < 1) throw Error("SymmetricDenominator: p must be >= 1");
  if (static_cast<int>(d_.size()) != p_)
    throw Error("SymmetricDenominator: expected p entries d_1..d_p");
  if (!expand().is_positive_on_nonneg_axis()) {
    throw Error("SymmetricDenominator: expanded polynomial is not positive on [0, inf)");
  }
}

SymmetricDenominator SymmetricDenominator::from_polynomial(const EvenPolynomial& q) {
  if (q.is_zero() || !q.is_symmetric())
    throw NotSymmetric("SymmetricDenominator: polynomial is not palindromic");
  int deg = q.degree2();
  if (deg % 2 != 0 || deg == 0)
    throw NotSymmetric("SymmetricDenominator: degree in z^2 must be even and positive");
  if (q.leading() != Rational(1))
    throw NotSymmetric("SymmetricDenominator: polynomial must be monic (normalize first)");
  int p = deg / 2;
  std::vector<Rational> d(static_cast<size_t>(p));
  // ascending coeff(k) = d_{p+1-k} for 1 <= k <= p-1; coeff(p) = 2 d_1
  for (int k = 1; k <= p - 1; ++k) d[static_cast<size_t>(p - k)] = q.coeff(k);
  d[0] = q.coeff(p) / Rational(2);
  return SymmetricDenominator(p, std::move(d));
}

const Rational& SymmetricDenominator::d(int j) const {
  static const Rational kOne(1);
  if (j == p_ + 1) return kOne;
  if (j < 1 || j > p_) throw Error("SymmetricDenominator: d index out of range");
  return d_[static_cast<size_t>(j - 1)];
}

EvenPolynomial SymmetricDenominator::expand() const {
  std::vector<Rational> c(static_cast<size_t>(2 * p_ + 1));
  for (int k = 0; k <= p_; ++k) {
    c[static_cast<size_t>(k)] += d(p_ + 1 - k);
    c[static_cast<size_t>(2 * p_ - k)] += d(p_ + 1 - k);
  }
  return EvenPolynomial(std::move(c));
}

EvenPolynomial build_Ep_raw(int p, const std::vector<Rational>& d) {
  if (p < 1 || static_cast<int>(d.size()) != p) throw Error("build_Ep_raw: bad parameters");
  auto dj = [&](int j) { return j == p + 1 ? Rational(1) : d[static_cast<size_t>(j - 1)]; };
  std::vector<Rational> c(static_cast<size_t>(p + 1));
  Rational lead;
  for (int j = 1; j <= p + 1; ++j) lead += dj(j);
  c[static_cast<size_t>(p)] = lead;
  for (int i = 1; i <= p; ++i) {
    Rational s;
    for (int j = 1; j <= p - i + 1; ++j) {
      s += Rational(j + i - 1, i) * Rational(binomial(j + 2 * i - 2, j - 1)) * dj(j + i);
    }
    c[static_cast<size_t>(p - i)] = pow2(2 * i - 1) * s;
  }
  return EvenPolynomial(std::move(c));
}

EvenPolynomial build_Ep(const SymmetricDenominator& den) {
  return build_Ep_raw(den.p(), den.d_vector());
}

std::vector<ReductionTerm> reduce_monomial(int n, const SymmetricDenominator& den, int m) {
  int p = den.p();
  int top = 2 * p * (m + 1) - 1;
  if (n < 0 || n > top) {
    throw OutOfConvergenceRange("reduce_monomial: exponent outside [0, " + std::to_string(top) +
                                "]");
  }
  if (n > (m + 1) * p - 1) n = top - n;  // symmetry rule, z -> 1/z
  std::vector<ReductionTerm> terms;
  int jmax = (m + 1) * p - n - 1;
  terms.reserve(static_cast<size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    Rational w = pow2(-m) * pow2(2 * j) * Rational(binomial((m + 1) * p - n - 1 + j, 2 * j));
    terms.push_back({w, (m + 1) * p - 1 - j});
  }
  return terms;
}

EvenRationalIntegrand reduce_function(const EvenRationalIntegrand& r) {
  const EvenPolynomial& q = r.denominator();
  if (!q.is_symmetric()) throw NotSymmetric("reduce_function: denominator is not palindromic");
  if (q.degree2() % 2 != 0) {
    throw NotSymmetric("reduce_function: denominator degree in z^2 must be even (2p)");
  }
  Rational g = q.leading();
  EvenPolynomial monic = q.scaled(g.inverse());
  SymmetricDenominator den = SymmetricDenominator::from_polynomial(monic);
  int m = r.power() - 1;
  int p = den.p();
  std::vector<Rational> out(static_cast<size_t>((m + 1) * p));
  for (int n = 0; n <= r.numerator().degree2(); ++n) {
    const Rational& b = r.numerator().coeff(n);
    if (b.is_zero()) continue;
    for (const auto& t : reduce_monomial(n, den, m)) {
      out[static_cast<size_t>(t.exponent)] += b * t.coefficient;
    }
  }
  // fold the content of the original denominator: 1/(g Dhat)^{m+1}
  Rational scale = g.pow(-(m + 1));
  EvenPolynomial new_num = EvenPolynomial(std::move(out)).scaled(scale);
  return EvenRationalIntegrand(std::move(new_num), build_Ep(den), r.power());
}

}  // namespace landen
