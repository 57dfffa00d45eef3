#include "greenseq/laurent.hpp"

#include <sstream>
#include <utility>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

using Coeffs = std::vector<Integer>;

void trim_back(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer content_of(const Coeffs& c) {
  Integer g = 0;
  for (const auto& x : c) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Coeffs& c) {
  const Integer g = content_of(c);
  if (g > 1)
    for (auto& x : c) x /= g;
}

// Remainder of a by b up to a nonzero constant factor; both nonzero, ascending.
Coeffs scaled_remainder(Coeffs a, const Coeffs& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    const Integer g = gcd(la, lb);
    const Integer fa = lb / g, fb = la / g;
    for (auto& x : a) x *= fa;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= fb * b[i];
    trim_back(a);
    make_primitive(a);
  }
  return a;
}

Coeffs quotient(Coeffs a, const Coeffs& b) {
  if (b.empty()) throw InternalError("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InternalError("inexact polynomial division");
  Coeffs q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    if (top % lb != 0) throw InternalError("inexact polynomial division");
    q[k] = top / lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim_back(a);
  if (!a.empty()) throw InternalError("inexact polynomial division");
  return q;
}

Coeffs gcd_coeffs(Coeffs a, Coeffs b) {
  trim_back(a);
  trim_back(b);
  if (a.empty()) std::swap(a, b);
  if (a.empty()) return {};
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {Integer(1)};
    Coeffs r = scaled_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

void append_term(std::ostringstream& os, const Integer& c, int e, bool first) {
  const bool negative = c < 0;
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  const Integer mag = negative ? Integer(-c) : c;
  if (e == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << ' ';
  os << 'v';
  if (e != 1) os << '^' << e;
}

} // namespace

LaurentPolynomial::LaurentPolynomial(Integer constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coefficient, int exponent) {
  LaurentPolynomial p(std::move(coefficient));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(int low, std::vector<Integer> coefficients) {
  LaurentPolynomial p;
  p.low_ = low;
  p.c_ = std::move(coefficients);
  p.trim();
  return p;
}

void LaurentPolynomial::trim() {
  trim_back(c_);
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

Integer LaurentPolynomial::content() const { return content_of(c_); }

LaurentPolynomial LaurentPolynomial::divided_by(const Integer& d) const {
  LaurentPolynomial p = *this;
  for (auto& x : p.c_) {
    if (x % d != 0) throw InternalError("inexact content division");
    x /= d;
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low_, b.low_);
  const int high = std::max(a.high(), b.high());
  Coeffs c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i + static_cast<std::size_t>(a.low_ - low)] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + static_cast<std::size_t>(b.low_ - low)] += b.c_[i];
  return LaurentPolynomial::from_coefficients(low, std::move(c));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Coeffs c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return LaurentPolynomial::from_coefficients(a.low_ + b.low_, std::move(c));
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Integer& c = c_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    append_term(os, c, e, first);
    first = false;
  }
  return os.str();
}

LaurentPolynomial exact_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return {};
  if (a.low() != 0 || b.low() != 0) throw InternalError("exact_quotient expects ordinary polynomials");
  return LaurentPolynomial::from_coefficients(0, quotient(a.coefficients(), b.coefficients()));
}

LaurentPolynomial polynomial_gcd(LaurentPolynomial a, LaurentPolynomial b) {
  if ((!a.is_zero() && a.low() != 0) || (!b.is_zero() && b.low() != 0))
    throw InternalError("polynomial_gcd expects ordinary polynomials");
  return LaurentPolynomial::from_coefficients(0, gcd_coeffs(a.coefficients(), b.coefficients()));
}

LaurentFraction::LaurentFraction(LaurentPolynomial numerator)
    : num_(std::move(numerator)), den_(Integer(1)) {}

LaurentFraction::LaurentFraction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void LaurentFraction::normalize() {
  if (den_.is_zero()) throw InvalidInput("zero denominator");
  if (num_.is_zero()) {
    den_ = Integer(1);
    return;
  }
  const int shift = num_.low() - den_.low();
  LaurentPolynomial n = num_.shifted(-num_.low());
  LaurentPolynomial d = den_.shifted(-den_.low());
  if (d.high() > 0 && n.high() >= 0) {
    const LaurentPolynomial g = polynomial_gcd(n, d);
    if (g.high() > 0) {
      n = exact_quotient(n, g);
      d = exact_quotient(d, g);
    }
  }
  Integer c = gcd(n.content(), d.content());
  if (d.leading() < 0) c = -c;
  if (c != 1) {
    n = n.divided_by(c);
    d = d.divided_by(c);
  }
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

LaurentFraction LaurentFraction::operator-() const { return {-num_, den_, Normalized{}}; }

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  const LaurentPolynomial g = polynomial_gcd(a.den_, b.den_);
  const LaurentPolynomial ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
  return {a.num_ * bd + b.num_ * ad, a.den_ * bd};
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) { return a + (-b); }

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel so the product is already coprime; only content and sign
  // remain to be fixed.
  LaurentPolynomial an = a.num_.shifted(-a.num_.low()), bn = b.num_.shifted(-b.num_.low());
  LaurentPolynomial ad = a.den_, bd = b.den_;
  if (bd.high() > 0 && an.high() > 0) {
    const LaurentPolynomial g = polynomial_gcd(an, bd);
    if (g.high() > 0) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  if (ad.high() > 0 && bn.high() > 0) {
    const LaurentPolynomial g = polynomial_gcd(bn, ad);
    if (g.high() > 0) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  LaurentPolynomial n = an * bn, d = ad * bd;
  const Integer c = gcd(n.content(), d.content()); // d stays positive-leading
  if (c != 1) {
    n = n.divided_by(c);
    d = d.divided_by(c);
  }
  return {n.shifted(a.num_.low() + b.num_.low()), std::move(d), LaurentFraction::Normalized{}};
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return a * LaurentFraction(b.den_, b.num_);
}

std::string LaurentFraction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace greenseq
