#include "landen/computability.hpp"

#include <algorithm>

#include "landen/closed_form.hpp"
#include "landen/errors.hpp"
#include "landen/reduction.hpp"

namespace landen {

std::string PathStep::str() const {
  switch (kind) {
    case Kind::Degree2Base: return "Degree2Base";
    case Kind::QuarticBase: return "QuarticBase";
    case Kind::Sym8Base: return "Sym8Base";
    case Kind::Reduce: return "Reduce(" + std::to_string(param) + ")";
    case Kind::PalindromeSplit: return "PalindromeSplit";
    case Kind::SymmetryRule: return "SymmetryRule";
  }
  return "?";
}

namespace {

// Exact division in t = z^2; throws unless the remainder vanishes.
EvenPolynomial exact_divide(const EvenPolynomial& num, const EvenPolynomial& den) {
  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quot(num.coeffs().size() - den.coeffs().size() + 1);
  const auto& d = den.coeffs();
  while (rem.size() >= d.size()) {
    Rational q = rem.back() / d.back();
    size_t shift = rem.size() - d.size();
    quot[shift] = q;
    for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= q * d[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (rem.size() < d.size()) break;
  }
  if (!rem.empty()) throw Error("exact_divide: division is not exact");
  return EvenPolynomial(std::move(quot));
}

void push_unique(std::vector<PathStep>* path, PathStep step) {
  if (std::find(path->begin(), path->end(), step) == path->end()) path->push_back(step);
}

std::optional<Expression> classify_impl(const EvenRationalIntegrand& r, int depth,
                                        std::vector<PathStep>* path) {
  const EvenPolynomial& den = r.denominator();
  int deg = den.degree2();
  if (deg == 1) {
    push_unique(path, {PathStep::Kind::Degree2Base, 0});
    return integrate_degree2_family(r);
  }
  if (deg == 2) {
    push_unique(path, {PathStep::Kind::QuarticBase, 0});
    return integrate_quartic_family(r);
  }
  if (!den.is_symmetric()) return std::nullopt;
  if (deg == 4) {
    push_unique(path, {PathStep::Kind::Sym8Base, 0});
    return integrate_sym8_family(r);
  }
  if (depth <= 0) return std::nullopt;
  if (deg % 2 == 0) {
    int p = deg / 2;
    int m = r.power() - 1;
    if (r.numerator().degree2() > (m + 1) * p - 1) {
      push_unique(path, {PathStep::Kind::SymmetryRule, 0});
    }
    push_unique(path, {PathStep::Kind::Reduce, p});
    return classify_impl(reduce_function(r), depth - 1, path);
  }
  // odd-degree palindrome: (t+1) divides it exactly, quotient palindromic
  push_unique(path, {PathStep::Kind::PalindromeSplit, 0});
  EvenPolynomial z2_plus_1{1, 1};
  EvenPolynomial rest = exact_divide(den, z2_plus_1);
  auto pieces = split_two_factor(r.numerator(), z2_plus_1, r.power(), rest, r.power());
  std::vector<Expression> parts;
  for (const auto& piece : pieces) {
    if (piece.numerator.is_zero()) continue;
    EvenRationalIntegrand sub(piece.numerator, piece.factor, piece.power);
    auto v = classify_impl(sub, depth - 1, path);
    if (!v) return std::nullopt;
    parts.push_back(*v);
  }
  return Expression::sum(std::move(parts));
}

}  // namespace

ComputabilityReport classify(const EvenRationalIntegrand& r, int max_depth) {
  ComputabilityReport report;
  auto v = classify_impl(r, max_depth, &report.path);
  if (v) {
    report.verdict = Verdict::ClosedForm;
    report.value = std::move(*v);
  } else {
    report.verdict = Verdict::NumericOnly;
  }
  return report;
}

namespace {

using Affine = std::vector<Rational>;  // [const, coeff_1, ..., coeff_k]

Affine aff_sub(const Affine& x, const Affine& y) {
  Affine out(std::max(x.size(), y.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < x.size()) out[i] += x[i];
    if (i < y.size()) out[i] -= y[i];
  }
  return out;
}

Affine aff_scaled(const Affine& x, const Rational& c) {
  Affine out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] * c;
  return out;
}

Affine aff_add(const Affine& x, const Affine& y) {
  Affine out(std::max(x.size(), y.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < x.size()) out[i] += x[i];
    if (i < y.size()) out[i] += y[i];
  }
  return out;
}

// E_p coefficients as affine forms in (d_1..d_p); build_Ep_raw is affine in
// d, so unit-vector evaluation recovers the forms exactly.
std::vector<Affine> ep_affine(int p) {
  std::vector<Rational> zero(static_cast<size_t>(p));
  EvenPolynomial base = build_Ep_raw(p, zero);
  std::vector<Affine> out(static_cast<size_t>(p) + 1, Affine(static_cast<size_t>(p) + 1));
  for (int i = 0; i <= p; ++i) out[static_cast<size_t>(i)][0] = base.coeff(i);
  for (int j = 1; j <= p; ++j) {
    std::vector<Rational> unit(static_cast<size_t>(p));
    unit[static_cast<size_t>(j - 1)] = Rational(1);
    EvenPolynomial ej = build_Ep_raw(p, unit);
    for (int i = 0; i <= p; ++i) {
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] = ej.coeff(i) - base.coeff(i);
    }
  }
  return out;
}

// Solves `eqs` (affine forms required to vanish) for the first `nbound`
// symbols in terms of the rest.  Returns rows [const, free_1, ...] per
// bound symbol.
std::vector<Affine> solve_affine(const std::vector<Affine>& eqs, int nbound, int nsym) {
  size_t n = eqs.size();
  RationalMatrix A(n, std::vector<Rational>(static_cast<size_t>(nbound)));
  RationalMatrix B(n, std::vector<Rational>(static_cast<size_t>(nsym - nbound) + 1));
  for (size_t r = 0; r < n; ++r) {
    for (int c = 0; c < nbound; ++c) A[r][static_cast<size_t>(c)] = eqs[r][static_cast<size_t>(c + 1)];
    B[r][0] = -eqs[r][0];
    for (int c = nbound + 1; c <= nsym; ++c) {
      B[r][static_cast<size_t>(c - nbound)] = -eqs[r][static_cast<size_t>(c)];
    }
  }
  return solve_exact_multi(std::move(A), std::move(B));
}

}  // namespace

std::vector<Rational> SymmetryConstraintFamily::instantiate(
    const std::vector<Rational>& free_values) const {
  if (free_values.size() != free_names.size())
    throw Error("SymmetryConstraintFamily: wrong number of free values");
  std::vector<Rational> d(static_cast<size_t>(p));
  for (size_t i = 0; i < bound_indices.size(); ++i) {
    Rational v = offset[i];
    for (size_t j = 0; j < free_values.size(); ++j) v += columns[j][i] * free_values[j];
    d[static_cast<size_t>(bound_indices[i] - 1)] = v;
  }
  for (size_t j = 0; j < free_values.size(); ++j) {
    d[d.size() - free_values.size() + j] = free_values[j];
  }
  return d;
}

SymmetryConstraintFamily solve_symmetry_family(int p) {
  if (p != 4 && p != 8) throw Error("solve_symmetry_family: p must be 4 or 8");
  SymmetryConstraintFamily fam;
  fam.p = p;
  if (p == 4) {
    auto E = ep_affine(4);  // affine in d1..d4
    std::vector<Affine> eqs = {aff_sub(E[0], E[4]), aff_sub(E[1], E[3])};
    auto rows = solve_affine(eqs, 2, 4);  // d1, d2 in terms of d3, d4
    fam.free_names = {"d3", "d4"};
    fam.bound_indices = {1, 2};
    fam.offset = {rows[0][0], rows[1][0]};
    fam.columns = {{rows[0][1], rows[1][1]}, {rows[0][2], rows[1][2]}};
    return fam;
  }
  // p = 8: stage one makes E_8 palindromic
  auto E8 = ep_affine(8);  // affine in d1..d8
  std::vector<Affine> eqs1;
  for (int i = 0; i < 4; ++i) eqs1.push_back(aff_sub(E8[static_cast<size_t>(i)], E8[static_cast<size_t>(8 - i)]));
  auto stage1 = solve_affine(eqs1, 4, 8);  // d1..d4 = [const, d5, d6, d7, d8]

  // Substitute stage one into E_8: coefficients become affine in (d5..d8).
  auto subst = [&](const Affine& form) {
    Affine out(5);
    out[0] = form[0];
    for (int j = 5; j <= 8; ++j) out[static_cast<size_t>(j - 4)] = form[static_cast<size_t>(j)];
    for (int u = 1; u <= 4; ++u) {
      const Rational& c = form[static_cast<size_t>(u)];
      if (c.is_zero()) continue;
      out = aff_add(out, aff_scaled(stage1[static_cast<size_t>(u - 1)], c));
    }
    return out;
  };
  std::vector<Affine> G;
  for (const auto& form : E8) G.push_back(subst(form));

  // Stage two: the reduced E_4 of the (palindromic, scaled) G must be
  // palindromic too.  G = g0 * D_4(d') with d'_4 g0 = G[1], d'_3 g0 = G[2],
  // d'_2 g0 = G[3], 2 d'_1 g0 = G[4]; E_4 coefficients are affine in d', so
  // multiplying the palindromy conditions by g0 keeps them linear in d5..d8.
  auto E4 = ep_affine(4);  // affine in d'_1..d'_4
  Affine dprime_g0[5];
  dprime_g0[4] = G[1];
  dprime_g0[3] = G[2];
  dprime_g0[2] = G[3];
  dprime_g0[1] = aff_scaled(G[4], Rational(1, 2));
  auto stage2_coeff = [&](const Affine& form4) {
    Affine out = aff_scaled(G[0], form4[0]);
    for (int j = 1; j <= 4; ++j) {
      const Rational& c = form4[static_cast<size_t>(j)];
      if (!c.is_zero()) out = aff_add(out, aff_scaled(dprime_g0[j], c));
    }
    return out;
  };
  std::vector<Affine> F4;
  for (const auto& form : E4) F4.push_back(stage2_coeff(form));
  std::vector<Affine> eqs2 = {aff_sub(F4[0], F4[4]), aff_sub(F4[1], F4[3])};
  auto stage2 = solve_affine(eqs2, 2, 4);  // d5, d6 = [const, d7, d8]

  fam.free_names = {"d7", "d8"};
  fam.bound_indices = {1, 2, 3, 4, 5, 6};
  fam.offset.resize(6);
  fam.columns = {std::vector<Rational>(6), std::vector<Rational>(6)};
  for (int u = 0; u < 4; ++u) {
    const Affine& row = stage1[static_cast<size_t>(u)];  // [const, d5, d6, d7, d8]
    fam.offset[static_cast<size_t>(u)] =
        row[0] + row[1] * stage2[0][0] + row[2] * stage2[1][0];
    fam.columns[0][static_cast<size_t>(u)] =
        row[3] + row[1] * stage2[0][1] + row[2] * stage2[1][1];
    fam.columns[1][static_cast<size_t>(u)] =
        row[4] + row[1] * stage2[0][2] + row[2] * stage2[1][2];
  }
  for (int u = 0; u < 2; ++u) {
    fam.offset[static_cast<size_t>(4 + u)] = stage2[static_cast<size_t>(u)][0];
    fam.columns[0][static_cast<size_t>(4 + u)] = stage2[static_cast<size_t>(u)][1];
    fam.columns[1][static_cast<size_t>(4 + u)] = stage2[static_cast<size_t>(u)][2];
  }
  return fam;
}

XcdPoint xcd_family(const Rational& c, const Rational& d) {
  if (d.is_zero()) throw Error("xcd_family: d must be nonzero");
  XcdPoint out;
  out.a1 = c + d;
  out.a2 = c * d + d.inverse();
  out.linear_factor = EvenPolynomial({d, Rational(1)});
  out.quartic_factor = EvenPolynomial({d.inverse(), c, Rational(1)});
  out.in_domain = out.a1.sign() > 0 && out.a2.sign() > 0;
  EvenPolynomial product = out.linear_factor * out.quartic_factor;
  EvenPolynomial expected({Rational(1), out.a2, out.a1, Rational(1)});
  if (product != expected) throw Error("xcd_family: factorization witness failed");
  return out;
}

std::pair<Rational, Rational> x1_point(const Rational& t) {
  if (t.sign() <= 0) throw Error("x1_point: t must be positive");
  Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  Rational a1 = (t5 - t4 + Rational(2) * t3 - t2 + t + Rational(1)) / t2;
  Rational a2 = (t5 + t4 - t3 + Rational(2) * t2 - t + Rational(1)) / t3;
  return {a1, a2};
}

std::vector<PartialFractionPiece> split_two_factor(const EvenPolynomial& num,
                                                   const EvenPolynomial& a_factor, int ja,
                                                   const EvenPolynomial& b_factor, int jb) {
  if (ja < 1 || jb < 1) throw Error("split_two_factor: powers must be >= 1");
  int da = a_factor.degree2(), db = b_factor.degree2();
  if (da < 1 || db < 1) throw Error("split_two_factor: factors must be nonconstant");
  int nunk = ja * da + jb * db;
  if (!num.is_zero() && num.degree2() >= nunk)
    throw Error("split_two_factor: numerator degree too high");

  std::vector<EvenPolynomial> a_pow(static_cast<size_t>(ja) + 1),
      b_pow(static_cast<size_t>(jb) + 1);
  a_pow[0] = EvenPolynomial::one();
  for (int i = 1; i <= ja; ++i) a_pow[static_cast<size_t>(i)] = a_pow[static_cast<size_t>(i - 1)] * a_factor;
  b_pow[0] = EvenPolynomial::one();
  for (int i = 1; i <= jb; ++i) b_pow[static_cast<size_t>(i)] = b_pow[static_cast<size_t>(i - 1)] * b_factor;

  RationalMatrix M(static_cast<size_t>(nunk), std::vector<Rational>(static_cast<size_t>(nunk)));
  int col = 0;
  auto add_columns = [&](const EvenPolynomial& base, int deg) {
    for (int dgr = 0; dgr < deg; ++dgr) {
      EvenPolynomial shifted = base.times_z2(dgr);
      for (int row = 0; row < nunk; ++row) M[static_cast<size_t>(row)][static_cast<size_t>(col)] = shifted.coeff(row);
      ++col;
    }
  };
  for (int i = 1; i <= ja; ++i) add_columns(a_pow[static_cast<size_t>(ja - i)] * b_pow[static_cast<size_t>(jb)], da);
  for (int i = 1; i <= jb; ++i) add_columns(b_pow[static_cast<size_t>(jb - i)] * a_pow[static_cast<size_t>(ja)], db);

  std::vector<Rational> rhs(static_cast<size_t>(nunk));
  for (int k = 0; k <= num.degree2(); ++k) rhs[static_cast<size_t>(k)] = num.coeff(k);
  std::vector<Rational> sol = solve_exact(std::move(M), std::move(rhs));

  std::vector<PartialFractionPiece> pieces;
  int idx = 0;
  for (int i = 1; i <= ja; ++i) {
    std::vector<Rational> c(static_cast<size_t>(da));
    for (int dgr = 0; dgr < da; ++dgr) c[static_cast<size_t>(dgr)] = sol[static_cast<size_t>(idx++)];
    pieces.push_back({EvenPolynomial(std::move(c)), a_factor, i});
  }
  for (int i = 1; i <= jb; ++i) {
    std::vector<Rational> c(static_cast<size_t>(db));
    for (int dgr = 0; dgr < db; ++dgr) c[static_cast<size_t>(dgr)] = sol[static_cast<size_t>(idx++)];
    pieces.push_back({EvenPolynomial(std::move(c)), b_factor, i});
  }
  return pieces;
}

Expression integrate_with_factorization(const EvenPolynomial& num, const EvenPolynomial& a_factor,
                                        const EvenPolynomial& b_factor, int power) {
  auto pieces = split_two_factor(num, a_factor, power, b_factor, power);
  std::vector<Expression> parts;
  for (const auto& piece : pieces) {
    if (piece.numerator.is_zero()) continue;
    EvenRationalIntegrand sub(piece.numerator, piece.factor, piece.power);
    switch (piece.factor.degree2()) {
      case 1:
        parts.push_back(integrate_degree2_family(sub));
        break;
      case 2:
        parts.push_back(integrate_quartic_family(sub));
        break;
      case 4:
        parts.push_back(integrate_sym8_family(sub));
        break;
      default:
        throw Error("integrate_with_factorization: unsupported factor degree");
    }
  }
  return Expression::sum(std::move(parts));
}

}  // namespace landen
