#include "landen/landen_transform.hpp"

#include <algorithm>

#include "landen/errors.hpp"
#include "landen/reduction.hpp"

namespace landen {

void ParameterPoint::validate() const {
  if (p < 2) throw Error("ParameterPoint: p must be >= 2");
  if (static_cast<int>(a.size()) != p - 1 || static_cast<int>(b.size()) != p)
    throw Error("ParameterPoint: expected p-1 a-entries and p b-entries");
  for (const auto& v : a)
    if (v.sign() <= 0) throw Error("ParameterPoint: a-entries must be positive");
  for (const auto& v : b)
    if (v.sign() <= 0) throw Error("ParameterPoint: b-entries must be positive");
}

EvenRationalIntegrand ParameterPoint::integrand() const {
  validate();
  std::vector<Rational> den(static_cast<size_t>(p) + 1);
  den[0] = Rational(1);
  den[static_cast<size_t>(p)] = Rational(1);
  for (int k = 1; k <= p - 1; ++k) den[static_cast<size_t>(k)] = a[static_cast<size_t>(p - 1 - k)];
  std::vector<Rational> num(static_cast<size_t>(p));
  for (int k = 0; k <= p - 1; ++k) num[static_cast<size_t>(k)] = b[static_cast<size_t>(p - 1 - k)];
  return EvenRationalIntegrand(EvenPolynomial(std::move(num)), EvenPolynomial(std::move(den)), 1);
}

RealParameterPoint RealParameterPoint::of(const ParameterPoint& x, mpfr_prec_t prec) {
  x.validate();
  RealParameterPoint out;
  out.p = x.p;
  for (const auto& v : x.a) out.a.push_back(Real::of(v, prec));
  for (const auto& v : x.b) out.b.push_back(Real::of(v, prec));
  return out;
}

RealEvenRational RealParameterPoint::integrand(mpfr_prec_t prec) const {
  std::vector<Real> den(static_cast<size_t>(p) + 1, Real::of(1, prec));
  for (int k = 1; k <= p - 1; ++k) den[static_cast<size_t>(k)] = a[static_cast<size_t>(p - 1 - k)];
  std::vector<Real> num;
  for (int k = 0; k <= p - 1; ++k) num.push_back(b[static_cast<size_t>(p - 1 - k)]);
  return RealEvenRational(std::move(num), std::move(den), 1);
}

bool RealParameterPoint::all_positive() const {
  for (const auto& v : a)
    if (v.sign() <= 0) return false;
  for (const auto& v : b)
    if (v.sign() <= 0) return false;
  return true;
}

namespace {

// The shared skeleton of the step: from ascending denominator/numerator
// coefficient vectors of the normalized function, produce alpha (descending
// E_p coefficients) and beta (descending reduced-numerator coefficients).
template <typename T, typename FromLong>
void step_core(int p, const std::vector<T>& den_asc, const std::vector<T>& num_asc,
               FromLong from_long, std::vector<T>* alpha, std::vector<T>* beta) {
  std::vector<T> refl(den_asc.rbegin(), den_asc.rend());
  // C = P * reflect(Q); D = Q * reflect(Q)
  std::vector<T> C((num_asc.size() + refl.size()) - 1, from_long(0));
  for (size_t i = 0; i < num_asc.size(); ++i)
    for (size_t j = 0; j < refl.size(); ++j) C[i + j] = C[i + j] + num_asc[i] * refl[j];
  std::vector<T> D((den_asc.size() + refl.size()) - 1, from_long(0));
  for (size_t i = 0; i < den_asc.size(); ++i)
    for (size_t j = 0; j < refl.size(); ++j) D[i + j] = D[i + j] + den_asc[i] * refl[j];
  // d_j from the palindromic D (monic since a_0 = a_p = 1)
  std::vector<T> d(static_cast<size_t>(p) + 2, from_long(0));  // d[1..p+1]
  for (int k = 1; k <= p - 1; ++k) d[static_cast<size_t>(p + 1 - k)] = D[static_cast<size_t>(k)];
  d[1] = D[static_cast<size_t>(p)] * from_long(1) / from_long(2);
  d[static_cast<size_t>(p) + 1] = from_long(1);
  // alpha_p(i), descending coefficients of E_p
  alpha->assign(static_cast<size_t>(p) + 1, from_long(0));
  T lead = from_long(1);
  for (int j = 1; j <= p; ++j) lead = lead + d[static_cast<size_t>(j)];
  (*alpha)[0] = lead;
  for (int i = 1; i <= p; ++i) {
    T s = from_long(0);
    for (int j = 1; j <= p - i + 1; ++j) {
      long w = static_cast<long>(mpz_get_si(
          Integer(binomial(j + 2 * i - 2, j - 1) * (j + i - 1)).get_mpz_t()));
      s = s + d[static_cast<size_t>(j + i)] * from_long(w) / from_long(i);
    }
    (*alpha)[static_cast<size_t>(i)] = s * from_long(1L << (2 * i - 1));
  }
  // fold the numerator through the m = 0 reduction weights
  std::vector<T> w(static_cast<size_t>(p), from_long(0));
  for (int k = 0; k <= p - 1; ++k)
    w[static_cast<size_t>(k)] = C[static_cast<size_t>(k)] + C[static_cast<size_t>(2 * p - 1 - k)];
  beta->assign(static_cast<size_t>(p), from_long(0));
  for (int k = 0; k <= p - 1; ++k) {
    for (int j = 0; j <= p - 1 - k; ++j) {
      long weight = static_cast<long>(
          mpz_get_si(Integer(binomial(p - 1 - k + j, 2 * j) * pow2(2 * j).numerator()).get_mpz_t()));
      (*beta)[static_cast<size_t>(j)] = (*beta)[static_cast<size_t>(j)] +
                                        w[static_cast<size_t>(k)] * from_long(weight);
    }
  }
}

}  // namespace

RealParameterPoint landen_step_real(const RealParameterPoint& x) {
  int p = x.p;
  if (p < 2) throw Error("landen_step_real: p must be >= 2");
  mpfr_prec_t prec = x.a.empty() ? x.b[0].precision() : x.a[0].precision();
  std::vector<Real> den(static_cast<size_t>(p) + 1, Real::of(1, prec));
  for (int k = 1; k <= p - 1; ++k) den[static_cast<size_t>(k)] = x.a[static_cast<size_t>(p - 1 - k)];
  std::vector<Real> num;
  for (int k = 0; k <= p - 1; ++k) num.push_back(x.b[static_cast<size_t>(p - 1 - k)]);

  std::vector<Real> alpha, beta;
  auto from_long = [&](long v) { return Real::of(v, prec); };
  step_core<Real>(p, den, num, from_long, &alpha, &beta);

  Real lambda2 = (alpha[static_cast<size_t>(p)] / alpha[0]).rootn(static_cast<unsigned long>(p));
  Real lambda = lambda2.sqrt();
  RealParameterPoint out;
  out.p = p;
  const Real& ap = alpha[static_cast<size_t>(p)];
  for (int i = 1; i <= p - 1; ++i) {
    out.a.push_back(alpha[static_cast<size_t>(i)] * lambda2.pow_si(p - i) / ap);
  }
  for (int i = 0; i <= p - 1; ++i) {
    out.b.push_back(beta[static_cast<size_t>(i)] * lambda.pow_si(2 * (p - 1 - i) + 1) / ap);
  }
  return out;
}

ExactLandenStep landen_step_exact(const EvenRationalIntegrand& r) {
  if (r.power() != 1)
    throw UnsupportedPower("landen_step_exact: only m = 0 (power 1) is supported");
  if (!r.normalized()) throw NotNormalized("landen_step_exact: requires a_0 = a_p = 1");
  int p = r.denominator().degree2();
  if (p < 2) throw Error("landen_step_exact: requires p >= 2");
  if (r.numerator().degree2() > p - 1)
    throw OutOfConvergenceRange("landen_step_exact: numerator degree exceeds p-1");
  for (int k = 0; k <= p; ++k)
    if (r.denominator().coeff(k).sign() <= 0)
      throw Error("landen_step_exact: denominator coefficients must be positive");
  for (int k = 0; k <= p - 1; ++k)
    if (r.numerator().coeff(k).sign() <= 0)
      throw Error("landen_step_exact: numerator coefficients must be positive");

  std::vector<Rational> den = r.denominator().coeffs();
  std::vector<Rational> num = r.numerator().coeffs();
  num.resize(static_cast<size_t>(p), Rational(0));
  std::vector<Rational> alpha, beta;
  auto from_long = [](long v) { return Rational(v); };
  step_core<Rational>(p, den, num, from_long, &alpha, &beta);

  ExactLandenStep out;
  out.p = p;
  out.rho = alpha[static_cast<size_t>(p)] / alpha[0];
  Expression rho = Expression::rational(out.rho);
  const Rational& ap = alpha[static_cast<size_t>(p)];
  for (int i = 1; i <= p - 1; ++i) {
    out.a.push_back(Expression::product(
        {Expression::rational(alpha[static_cast<size_t>(i)] / ap),
         Expression::power(rho, Rational(p - i, p))}));
  }
  for (int i = 0; i <= p - 1; ++i) {
    out.b.push_back(Expression::product(
        {Expression::rational(beta[static_cast<size_t>(i)] / ap),
         Expression::power(rho, Rational(2 * (p - 1 - i) + 1, 2 * p))}));
  }
  return out;
}

RealParameterPoint phi6(const RealParameterPoint& x) {
  if (x.p != 3) throw Error("phi6: requires p = 3");
  mpfr_prec_t prec = x.a[0].precision();
  const Real &a1 = x.a[0], &a2 = x.a[1], &b0 = x.b[0], &b1 = x.b[1], &b2 = x.b[2];
  Real two = Real::of(2, prec), three = Real::of(3, prec);
  Real s = a1 + a2 + two;
  Real s13 = s.rootn(3);
  Real s23 = s13 * s13;
  Real s43 = s23 * s23;
  RealParameterPoint out;
  out.p = 3;
  out.a = {(Real::of(9, prec) + Real::of(5, prec) * (a1 + a2) + a1 * a2) / s43,
           (a1 + a2 + Real::of(6, prec)) / s23};
  out.b = {(b0 + b1 + b2) / s23,
           (b0 * (a2 + three) + two * b1 + b2 * (a1 + three)) / s,
           (b0 + b2) / s13};
  return out;
}

RealParameterPoint phi8(const RealParameterPoint& x) {
  if (x.p != 4) throw Error("phi8: requires p = 4");
  mpfr_prec_t prec = x.a[0].precision();
  const Real &a1 = x.a[0], &a2 = x.a[1], &a3 = x.a[2];
  const Real &b0 = x.b[0], &b1 = x.b[1], &b2 = x.b[2], &b3 = x.b[3];
  auto C = [&](long v) { return Real::of(v, prec); };
  Real s = a1 + a2 + a3 + C(2);
  Real s14 = s.rootn(4);
  Real s12 = s14 * s14;
  Real s34 = s12 * s14;
  Real s54 = s * s14;
  Real s32 = s * s12;
  RealParameterPoint out;
  out.p = 4;
  out.a = {(a2 * (a1 + a3) + C(4) * a1 * a3 + C(10) * (a1 + a3) + C(8) * (a2 + C(2))) / s32,
           (a1 * a3 + C(6) * (a1 + a3) + C(2) * (a2 + C(10))) / s,
           (a1 + a3 + C(8)) / s12};
  out.b = {(b0 + b1 + b2 + b3) / s34,
           (b3 * (C(3) * a1 + a2 + C(6)) + b2 * (a1 + C(4)) + b1 * (a3 + C(4)) +
            b0 * (C(3) * a3 + a2 + C(6))) / s54,
           (b3 * (a1 + C(5)) + b2 + b1 + b0 * (a3 + C(5))) / s34,
           (b0 + b3) / s14};
  return out;
}

IterationResult iterate(const ParameterPoint& x0, int digits, double tol, int max_iter) {
  x0.validate();
  digits = std::max(50, digits);
  if (max_iter <= 0) max_iter = 200;
  mpfr_prec_t prec = bits_for_digits(digits);
  Real tolerance = tol > 0 ? Real::of_double(tol, prec) : Real::pow10(-(digits - 10), prec);

  int p = x0.p;
  std::vector<Real> a_target, b_weight;
  for (int i = 1; i <= p - 1; ++i)
    a_target.push_back(Real::of(Rational(binomial(p, i)), prec));
  for (int i = 0; i <= p - 1; ++i)
    b_weight.push_back(Real::of(Rational(binomial(p - 1, i)), prec));
  Real two_pm1 = Real::of(Rational(pow2(p - 1)), prec);

  IterationResult res;
  RealParameterPoint x = RealParameterPoint::of(x0, prec);
  res.trajectory.push_back(x);
  auto extract_L = [&](const RealParameterPoint& pt) {
    Real s = Real::of(0, prec);
    for (const auto& v : pt.b) s += v;
    return s / two_pm1;
  };
  res.limit_L = extract_L(x);
  res.status = IterationStatus::MaxIterations;
  Real one = Real::of(1, prec);
  for (int k = 1; k <= max_iter; ++k) {
    RealParameterPoint next = landen_step_real(x);
    res.trajectory.push_back(next);
    res.iterations = k;
    if (!next.all_positive()) {
      res.status = IterationStatus::DomainExit;
      x = next;
      break;
    }
    Real adist = Real::of(0, prec);
    for (size_t i = 0; i < next.a.size(); ++i) {
      Real d = (next.a[i] - a_target[i]).abs();
      if (d > adist) adist = d;
    }
    Real brel = Real::of(0, prec);
    for (size_t i = 0; i < next.b.size(); ++i) {
      Real scale = next.b[i].abs();
      if (scale < one) scale = one;
      Real d = (next.b[i] - x.b[i]).abs() / scale;
      if (d > brel) brel = d;
    }
    Real L = extract_L(next);
    Real ragree = Real::of(0, prec);
    for (size_t i = 0; i < next.b.size(); ++i) {
      Real d = (next.b[i] / b_weight[i] - L).abs() / L.abs();
      if (d > ragree) ragree = d;
    }
    res.limit_L = L;
    x = next;
    if (adist < tolerance && brel < tolerance && ragree < tolerance) {
      res.status = IterationStatus::Converged;
      break;
    }
  }
  res.integral = res.limit_L * Real::pi(prec) * Real::of_double(0.5, prec);
  return res;
}

Real agm(const Real& a, const Real& b, int digits) {
  if (a.sign() <= 0 || b.sign() <= 0) throw Error("agm: arguments must be positive");
  mpfr_prec_t prec = bits_for_digits(digits + 10);
  Real x = Real::of(0, prec) + a;
  Real y = Real::of(0, prec) + b;
  Real eps = Real::pow10(-(digits + 5), prec);
  for (int i = 0; i < 400; ++i) {
    Real am = (x + y) * Real::of_double(0.5, prec);
    Real gm = (x * y).sqrt();
    x = am;
    y = gm;
    if ((x - y).abs() <= eps * x.abs()) break;
  }
  return (x + y) * Real::of_double(0.5, prec);
}

}  // namespace landen
