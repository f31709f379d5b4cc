#include "landen/even_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "landen/errors.hpp"

namespace landen {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Sign of p(t) as t -> +inf.
int sign_at_infinity(const std::vector<Rational>& c) {
  return c.empty() ? 0 : c.back().sign();
}

int sign_at_zero(const std::vector<Rational>& c) {
  for (const auto& x : c)
    if (!x.is_zero()) return x.sign();  // lowest nonzero term dominates at 0+
  return 0;
}

// Remainder of polynomial division a by b over Q, coefficients ascending in t.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

EvenPolynomial::EvenPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

EvenPolynomial::EvenPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim(coeffs_);
}

EvenPolynomial EvenPolynomial::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return EvenPolynomial(std::move(v));
}

const Rational& EvenPolynomial::coeff(int k) const {
  static const Rational kZero;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

Rational EvenPolynomial::leading() const {
  return coeffs_.empty() ? Rational() : coeffs_.back();
}

EvenPolynomial EvenPolynomial::operator+(const EvenPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return EvenPolynomial(std::move(out));
}

EvenPolynomial EvenPolynomial::operator-(const EvenPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  }
  return EvenPolynomial(std::move(out));
}

EvenPolynomial EvenPolynomial::operator*(const EvenPolynomial& o) const {
  if (is_zero() || o.is_zero()) return EvenPolynomial();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return EvenPolynomial(std::move(out));
}

EvenPolynomial EvenPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return EvenPolynomial(std::move(out));
}

EvenPolynomial EvenPolynomial::times_z2(int k) const {
  if (is_zero()) return EvenPolynomial();
  std::vector<Rational> out(coeffs_.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
  return EvenPolynomial(std::move(out));
}

EvenPolynomial EvenPolynomial::reflected() const {
  if (is_zero()) throw Error("reflect: zero polynomial");
  std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
  return EvenPolynomial(std::move(out));
}

bool EvenPolynomial::is_symmetric() const {
  size_t n = coeffs_.size();
  for (size_t i = 0; i < n / 2; ++i) {
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  }
  return true;
}

Rational EvenPolynomial::eval_at(const Rational& t) const {
  Rational r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
  return r;
}

EvenPolynomial EvenPolynomial::derivative_t() const {
  if (coeffs_.size() <= 1) return EvenPolynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return EvenPolynomial(std::move(out));
}

bool EvenPolynomial::is_positive_on_nonneg_axis() const {
  if (is_zero()) return false;
  if (constant().sign() <= 0 || sign_at_infinity(coeffs_) <= 0) return false;
  bool all_nonneg = std::all_of(coeffs_.begin(), coeffs_.end(),
                                [](const Rational& c) { return c.sign() >= 0; });
  if (all_nonneg) return true;  // fast path: positive coefficients
  // Sturm chain in t counts distinct real roots in (0, inf); any root there
  // (or at 0, excluded above) means the polynomial is not strictly positive.
  std::vector<std::vector<Rational>> chain;
  chain.push_back(coeffs_);
  chain.push_back(derivative_t().coeffs());
  while (!chain.back().empty() && chain.back().size() > 1) {
    auto r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at0, atinf;
  at0.reserve(chain.size());
  atinf.reserve(chain.size());
  for (const auto& p : chain) {
    at0.push_back(sign_at_zero(p));
    atinf.push_back(sign_at_infinity(p));
  }
  return sign_variations(at0) - sign_variations(atinf) == 0;
}

std::string EvenPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    if (k == 0) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << "*";
      os << var << "^" << 2 * k;
    }
  }
  return os.str();
}

}  // namespace landen
