#include "landen/expression.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "landen/errors.hpp"

namespace landen {

struct Expression::Node {
  Kind kind;
  Rational value;                     // Rational constant or Power exponent
  std::vector<Expression> children;   // Sum/Product members; Power base at [0]
};

namespace {

// Internal signal: an interval straddles zero where a sign is needed, so the
// evaluation must be retried at higher precision.
struct IndeterminateSign {};

// True only when the expression provably evaluates to a nonnegative real.
bool known_nonneg(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Rational:
      return e.value().sign() >= 0;
    case Expression::Kind::Pi:
      return true;
    case Expression::Kind::Power:
      return known_nonneg(e.children()[0]);
    case Expression::Kind::Sum:
    case Expression::Kind::Product: {
      for (const auto& c : e.children())
        if (!known_nonneg(c)) return false;
      return true;
    }
  }
  return false;
}

// Exact q-th root of a nonnegative rational if one exists.
bool exact_root(const Rational& b, unsigned long q, Rational* out) {
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), b.numerator().get_mpz_t(), q);
  if (!exact_n) return false;
  int exact_d = mpz_root(rd.get_mpz_t(), b.denominator().get_mpz_t(), q);
  if (!exact_d) return false;
  *out = Rational(Integer(rn), Integer(rd));
  return true;
}

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> out;
    std::vector<bool> sieve(1024, true);
    for (long i = 2; i < 1024; ++i) {
      if (!sieve[static_cast<size_t>(i)]) continue;
      out.push_back(i);
      for (long j = i * i; j < 1024; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
  }();
  return primes;
}

// b^e with b > 0 rational, e = p/q not an integer, decomposed over small
// primes: integer exponent parts fold into `constant`, fractional parts
// accumulate per-exponent products of coprime bases in `surds`.
void accumulate_surd(const Rational& b, const Rational& e, Rational* constant,
                     std::map<Rational, Rational>* surds) {
  auto add_part = [&](const Integer& base, const Rational& expo) {
    if (base == 1) return;
    Integer num = expo.numerator(), den = expo.denominator();
    mpz_class tq, rem;
    mpz_tdiv_qr(tq.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long ipart = static_cast<long>(mpz_get_si(tq.get_mpz_t()));
    if (ipart != 0) *constant *= Rational(base).pow(ipart);
    if (rem == 0) return;
    Rational frac{Integer(rem), den};
    Rational& acc = (*surds)[frac];
    if (acc.is_zero()) acc = Rational(1);
    acc *= Rational(base);
  };
  mpz_class u = b.numerator(), v = b.denominator();
  for (long p : small_primes()) {
    if (u == 1 && v == 1) break;
    mpz_class pz(p);
    unsigned long eu = mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
    unsigned long ev = mpz_remove(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    long net = static_cast<long>(eu) - static_cast<long>(ev);
    if (net != 0) add_part(Integer(pz), e * Rational(net));
  }
  add_part(Integer(u), e);
  // leftover denominator: v^{-e}
  add_part(Integer(v), -e);
}

}  // namespace

int compare(const Expression& a, const Expression& b) {
  auto rank = [](Expression::Kind k) {
    switch (k) {
      case Expression::Kind::Rational: return 0;
      case Expression::Kind::Pi: return 1;
      case Expression::Kind::Power: return 2;
      case Expression::Kind::Sum: return 3;
      case Expression::Kind::Product: return 4;
    }
    return 5;
  };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Expression::Kind::Pi:
      return 0;
    case Expression::Kind::Rational:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case Expression::Kind::Power: {
      int c = compare(a.children()[0], b.children()[0]);
      if (c != 0) return c;
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    }
    case Expression::Kind::Sum:
    case Expression::Kind::Product: {
      size_t n = std::min(a.children().size(), b.children().size());
      for (size_t i = 0; i < n; ++i) {
        int c = compare(a.children()[i], b.children()[i]);
        if (c != 0) return c;
      }
      if (a.children().size() == b.children().size()) return 0;
      return a.children().size() < b.children().size() ? -1 : 1;
    }
  }
  return 0;
}

Expression Expression::rational(Rational r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->value = std::move(r);
  return Expression(std::move(n));
}

Expression Expression::pi() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pi;
  return Expression(std::move(n));
}

Expression::Kind Expression::kind() const { return node_->kind; }
const Rational& Expression::value() const { return node_->value; }
const std::vector<Expression>& Expression::children() const { return node_->children; }

Expression Expression::sum(std::vector<Expression> terms) {
  std::vector<Expression> flat;
  Rational constant(0);
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.children()) {
        if (c.is_rational()) constant += c.value();
        else flat.push_back(c);
      }
    } else if (t.is_rational()) {
      constant += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const Expression& a, const Expression& b) { return compare(a, b) < 0; });
  if (!constant.is_zero()) flat.insert(flat.begin(), rational(constant));
  if (flat.empty()) return rational(Rational(0));
  if (flat.size() == 1) return flat[0];
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(flat);
  return Expression(std::move(n));
}

Expression Expression::product(std::vector<Expression> factors) {
  std::vector<Expression> flat;
  Rational constant(1);
  bool pi_seen = false;
  int pi_count = 0;
  // exponent -> accumulated rational base, for nonneg rational-base powers
  std::map<Rational, Rational> surds;
  std::vector<Expression> general;

  std::vector<Expression> queue = std::move(factors);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Expression f = queue[qi];
    switch (f.kind()) {
      case Kind::Product:
        for (const auto& c : f.children()) queue.push_back(c);
        break;
      case Kind::Rational:
        constant *= f.value();
        break;
      case Kind::Pi:
        pi_seen = true;
        ++pi_count;
        break;
      case Kind::Power: {
        const Expression& base = f.children()[0];
        const Rational& e = f.value();
        if (base.is_rational() && !e.is_integer() && base.value().sign() > 0) {
          accumulate_surd(base.value(), e, &constant, &surds);
        } else if (base.is_rational() && !e.is_integer() && base.value().is_zero() &&
                   e.sign() > 0) {
          return rational(Rational(0));
        } else {
          general.push_back(f);
        }
        break;
      }
      default:
        general.push_back(f);
        break;
    }
  }
  if (constant.is_zero()) return rational(Rational(0));

  // Finalize the collected surds; exact q-th roots of leftover bases fold
  // back into the rational constant.
  for (const auto& [e, b] : surds) {
    if (b == Rational(1) || b.is_zero()) continue;
    Rational base_pow = b.pow(static_cast<long>(mpz_get_si(e.numerator().get_mpz_t())));
    Rational root;
    if (exact_root(base_pow, mpz_get_ui(e.denominator().get_mpz_t()), &root)) {
      constant *= root;
    } else {
      auto n = std::make_shared<Node>();
      n->kind = Kind::Power;
      n->value = e;
      n->children = {rational(b)};
      general.emplace_back(Expression(std::move(n)));
    }
  }

  std::sort(general.begin(), general.end(),
            [](const Expression& a, const Expression& b) { return compare(a, b) < 0; });
  std::vector<Expression> out;
  if (constant != Rational(1) || (general.empty() && !pi_seen)) out.push_back(rational(constant));
  if (pi_seen) {
    for (int i = 0; i < pi_count; ++i) out.push_back(pi());
  }
  for (auto& g : general) out.push_back(std::move(g));
  if (out.size() == 1) return out[0];
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(out);
  return Expression(std::move(n));
}

Expression Expression::power(Expression base, Rational exponent) {
  if (exponent.is_zero()) return rational(Rational(1));
  if (exponent == Rational(1)) return base;
  if (base.is_rational()) {
    const Rational& b = base.value();
    if (exponent.is_integer()) {
      long e = static_cast<long>(mpz_get_si(exponent.numerator().get_mpz_t()));
      if (b.is_zero() && e < 0) throw Error("power: zero base with negative exponent");
      return rational(b.pow(e));
    }
    if (b.is_zero()) {
      if (exponent.sign() > 0) return rational(Rational(0));
      throw Error("power: zero base with negative exponent");
    }
    if (b.sign() > 0) {
      // delegate folding to the product machinery
      auto n = std::make_shared<Node>();
      n->kind = Kind::Power;
      n->value = std::move(exponent);
      n->children = {std::move(base)};
      return product({Expression(std::move(n))});
    }
    // negative base, fractional exponent: kept; evaluation reports it
  }
  if (base.kind() == Kind::Power && known_nonneg(base.children()[0])) {
    return power(base.children()[0], base.value() * exponent);
  }
  if (base.kind() == Kind::Product && exponent.is_integer() == false) {
    // (r * x)^e with r a positive rational: pull the constant out so that
    // folded forms stay folded.  Only done when every factor is known
    // nonnegative, where the split is valid over the reals.
    if (known_nonneg(base)) {
      const auto& kids = base.children();
      if (!kids.empty() && kids[0].is_rational()) {
        std::vector<Expression> rest(kids.begin() + 1, kids.end());
        Expression tail = product(std::move(rest));
        return product({power(rational(kids[0].value()), exponent),
                        power(std::move(tail), exponent)});
      }
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->value = std::move(exponent);
  n->children = {std::move(base)};
  return Expression(std::move(n));
}

bool Expression::operator==(const Expression& o) const { return compare(*this, o) == 0; }

namespace {

Interval eval_node(const Expression& e, mpfr_prec_t prec);

Interval eval_power(const Expression& e, mpfr_prec_t prec) {
  const Expression& base = e.children()[0];
  const Rational& expo = e.value();
  Interval b = eval_node(base, prec);
  if (expo.is_integer()) {
    long p = static_cast<long>(mpz_get_si(expo.numerator().get_mpz_t()));
    if (p < 0 && !b.definitely_positive()) {
      if (b.definitely_negative()) {
        // negative base, integer exponent is fine unless it spans zero
        return b.pow_int(p);
      }
      throw IndeterminateSign{};
    }
    return b.pow_int(p);
  }
  if (b.definitely_negative()) {
    throw NegativeBaseFractionalPower("fractional power of a negative base in subtree: " +
                                      e.str());
  }
  if (b.contains_negative()) {
    // cannot certify the sign at this precision
    if (base.is_rational()) {
      throw NegativeBaseFractionalPower("fractional power of a negative base in subtree: " +
                                        e.str());
    }
    throw IndeterminateSign{};
  }
  if (expo.sign() < 0 && !b.definitely_positive()) throw IndeterminateSign{};
  return b.pow_rational(expo);
}

Interval eval_node(const Expression& e, mpfr_prec_t prec) {
  switch (e.kind()) {
    case Expression::Kind::Rational:
      return Interval::exact(e.value(), prec);
    case Expression::Kind::Pi:
      return Interval::pi(prec);
    case Expression::Kind::Sum: {
      Interval acc = Interval::exact(0L, prec);
      for (const auto& c : e.children()) acc = acc + eval_node(c, prec);
      return acc;
    }
    case Expression::Kind::Product: {
      Interval acc = Interval::exact(1L, prec);
      for (const auto& c : e.children()) acc = acc * eval_node(c, prec);
      return acc;
    }
    case Expression::Kind::Power:
      return eval_power(e, prec);
  }
  throw Error("expression: unknown node kind");
}

}  // namespace

Interval Expression::eval_interval(mpfr_prec_t prec) const {
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return eval_node(*this, prec);
    } catch (const IndeterminateSign&) {
      prec *= 2;
    }
  }
  throw PrecisionNotReached("expression evaluation: sign could not be certified");
}

namespace {

Interval eval_to_bound(const Expression& e, int digits) {
  mpfr_prec_t prec = bits_for_digits(digits) + 32;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Interval v = e.eval_interval(prec);
    Real w = v.width();
    Real scale = v.midpoint().abs();
    Real floor = Real::pow10(-digits, prec);
    if (scale < floor) scale = floor;
    Real target = scale * Real::pow10(-(digits + 2), prec);
    if (w <= target) return v;
    prec *= 2;
  }
  throw PrecisionNotReached("expression evaluation: requested digits not certified");
}

}  // namespace

std::string Expression::eval_decimal(int digits) const {
  return eval_to_bound(*this, digits).midpoint().str(digits);
}

Real Expression::eval_real(int digits) const {
  return eval_to_bound(*this, digits).midpoint();
}

namespace {

bool is_half(const Rational& r) { return r == Rational(1, 2); }

std::string print_expr(const Expression& e, bool parenthesize_sum);

// One multiplicative atom for the product printer.
std::string print_factor(const Expression& e) {
  return print_expr(e, /*parenthesize_sum=*/true);
}

std::string print_product(const Expression& e) {
  // split into numerator and denominator parts
  std::vector<std::string> num, den;
  bool negative = false;
  for (const auto& f : e.children()) {
    if (f.is_rational()) {
      Rational r = f.value();
      if (r.sign() < 0) {
        negative = !negative;
        r = -r;
      }
      if (r.numerator() != 1 || r.denominator() == 1) num.push_back(r.numerator().get_str());
      if (r.denominator() != 1) den.push_back(r.denominator().get_str());
      continue;
    }
    if (f.kind() == Expression::Kind::Power && f.value().sign() < 0) {
      Expression flipped = Expression::power(f.children()[0], -f.value());
      den.push_back(print_factor(flipped));
      continue;
    }
    num.push_back(print_factor(f));
  }
  if (num.empty()) num.push_back("1");
  std::string out;
  for (size_t i = 0; i < num.size(); ++i) {
    if (i) out += "*";
    out += num[i];
  }
  if (!den.empty()) {
    std::string d;
    for (size_t i = 0; i < den.size(); ++i) {
      if (i) d += "*";
      d += den[i];
    }
    bool wrap = den.size() > 1 || den[0].find_first_of("*^+- ") != std::string::npos;
    // sqrt(...) needs no wrapping even though it contains parentheses
    if (den.size() == 1 && den[0].rfind("sqrt(", 0) == 0 && den[0].back() == ')') wrap = false;
    out += "/";
    out += wrap ? "(" + d + ")" : d;
  }
  return negative ? "-" + out : out;
}

std::string print_expr(const Expression& e, bool parenthesize_sum) {
  switch (e.kind()) {
    case Expression::Kind::Rational:
      return e.value().str();
    case Expression::Kind::Pi:
      return "pi";
    case Expression::Kind::Power: {
      const Expression& base = e.children()[0];
      if (e.value().sign() < 0) {
        return "1/" + print_factor(Expression::power(base, -e.value()));
      }
      if (is_half(e.value())) return "sqrt(" + print_expr(base, false) + ")";
      std::string b = print_expr(base, true);
      if (base.kind() != Expression::Kind::Rational &&
          base.kind() != Expression::Kind::Pi) {
        if (b.front() != '(') b = "(" + b + ")";
      } else if (base.is_rational() &&
                 (base.value().sign() < 0 || !base.value().is_integer())) {
        b = "(" + b + ")";
      }
      const Rational& x = e.value();
      std::string es = x.is_integer() && x.sign() > 0 ? x.str() : "(" + x.str() + ")";
      return b + "^" + es;
    }
    case Expression::Kind::Sum: {
      std::string out;
      bool first = true;
      for (const auto& t : e.children()) {
        std::string s = print_expr(t, false);
        if (first) {
          out = s;
          first = false;
        } else if (!s.empty() && s[0] == '-') {
          out += " - " + s.substr(1);
        } else {
          out += " + " + s;
        }
      }
      return parenthesize_sum ? "(" + out + ")" : out;
    }
    case Expression::Kind::Product:
      return print_product(e);
  }
  return "?";
}

}  // namespace

std::string Expression::str() const { return print_expr(*this, false); }

}  // namespace landen
