#include "greenseq/qseries.hpp"

#include <numeric>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

// Sums fractions bucketed by denominator so that equal denominators cost a
// polynomial addition instead of a gcd.
LaurentFraction sum(const std::vector<LaurentFraction>& parts) {
  std::vector<std::pair<LaurentPolynomial, LaurentPolynomial>> buckets; // denominator, numerator sum
  for (const auto& f : parts) {
    bool placed = false;
    for (auto& [den, num] : buckets)
      if (den == f.denominator()) {
        num = num + f.numerator();
        placed = true;
        break;
      }
    if (!placed) buckets.emplace_back(f.denominator(), f.numerator());
  }
  LaurentFraction total;
  for (auto& [den, num] : buckets)
    if (!num.is_zero()) total += LaurentFraction(num, den);
  return total;
}

} // namespace

int total_degree(const Exponent& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

SeriesContext::SeriesContext(std::size_t n_vars, int truncation,
                             std::vector<std::vector<long long>> form)
    : n(n_vars), order(truncation), lambda(std::move(form)) {
  if (truncation < 0) throw InvalidInput("truncation order must be nonnegative");
  if (lambda.size() != n) throw InvalidInput("lambda must be an n x n matrix");
  for (std::size_t u = 0; u < n; ++u) {
    if (lambda[u].size() != n) throw InvalidInput("lambda must be an n x n matrix");
    for (std::size_t v = 0; v < n; ++v)
      if (lambda[u][v] != -lambda[v][u]) throw InvalidInput("lambda must be skew-symmetric");
  }
}

long long SeriesContext::pairing(const Exponent& a, const Exponent& b) const {
  long long s = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (b[v] != 0) s += static_cast<long long>(a[u]) * b[v] * lambda[u][v];
  }
  return s;
}

QSeries::QSeries(SeriesContext ctx) : ctx_(std::move(ctx)) {}

QSeries QSeries::one(SeriesContext ctx) {
  QSeries s(std::move(ctx));
  s.add(Exponent(s.ctx_.n, 0), LaurentFraction(LaurentPolynomial(Integer(1))));
  return s;
}

QSeries QSeries::monomial(SeriesContext ctx, const Exponent& alpha, LaurentFraction c) {
  QSeries s(std::move(ctx));
  s.add(alpha, c);
  return s;
}

LaurentFraction QSeries::coefficient(const Exponent& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? LaurentFraction() : it->second;
}

void QSeries::add(const Exponent& alpha, const LaurentFraction& c) {
  if (alpha.size() != ctx_.n) throw InvalidInput("exponent has the wrong number of variables");
  for (int a : alpha)
    if (a < 0) throw InvalidInput("exponents must be nonnegative");
  if (c.is_zero() || total_degree(alpha) > ctx_.order) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw InvalidInput("series have different contexts");
  QSeries out = a;
  for (const auto& [alpha, c] : b.terms_) out.add(alpha, c);
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw InvalidInput("series have different contexts");
  QSeries out = a;
  for (const auto& [alpha, c] : b.terms_) out.add(alpha, -c);
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw InvalidInput("series have different contexts");
  const SeriesContext& ctx = a.ctx_;
  std::map<Exponent, std::vector<LaurentFraction>, GradedLex> pending;
  for (const auto& [alpha, ca] : a.terms_) {
    const int da = total_degree(alpha);
    if (da > ctx.order) break;
    for (const auto& [beta, cb] : b.terms_) {
      if (da + total_degree(beta) > ctx.order) break; // terms are sorted by degree
      Exponent gamma(ctx.n);
      for (std::size_t u = 0; u < ctx.n; ++u) gamma[u] = alpha[u] + beta[u];
      const long long twist = ctx.pairing(alpha, beta);
      LaurentFraction term = ca * cb;
      if (twist != 0)
        term = term * LaurentFraction(LaurentPolynomial::monomial(1, static_cast<int>(twist)));
      pending[gamma].push_back(std::move(term));
    }
  }
  QSeries out(ctx);
  for (const auto& [gamma, parts] : pending) {
    LaurentFraction c = sum(parts);
    if (!c.is_zero()) out.terms_.emplace(gamma, std::move(c));
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

QSeries QSeries::inverse() const {
  const Exponent zero(ctx_.n, 0);
  if (!(coefficient(zero) == LaurentFraction(LaurentPolynomial(Integer(1)))))
    throw InvalidInput("only series with constant term 1 are inverted");
  // With A = 1 + R, the inverse solves X = 1 - R X; each pass fixes one more
  // degree, so order + 1 passes reach the fixed point.
  QSeries r = *this;
  r.terms_.erase(zero);
  QSeries x = one(ctx_);
  for (int pass = 0; pass < ctx_.order; ++pass) x = one(ctx_) - r * x;
  return x;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  for (const auto& [alpha, c] : terms_) {
    os << "y^(";
    for (std::size_t u = 0; u < alpha.size(); ++u) os << (u ? "," : "") << alpha[u];
    os << ") : " << c.to_string() << '\n';
  }
  return os.str();
}

} // namespace greenseq
