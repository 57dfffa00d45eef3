#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenseq/laurent.hpp"

namespace greenseq {

/// Nonnegative exponent vector of a monomial y^alpha.
using Exponent = std::vector<int>;

int total_degree(const Exponent& alpha);

/// Total degree first, then reverse lexicographic, so y1 comes before y2.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Shape shared by all series that are multiplied together: number of
/// variables, truncation order and the skew form lambda(e_u, e_v).
struct SeriesContext {
  std::size_t n = 0;
  int order = 0;
  std::vector<std::vector<long long>> lambda;

  SeriesContext(std::size_t n_vars, int truncation, std::vector<std::vector<long long>> form);

  long long pairing(const Exponent& a, const Exponent& b) const;
  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

/// Truncated series in the quantum torus y^a y^b = v^lambda(a,b) y^(a+b),
/// with v = q^(1/2). Terms of total degree above the order are dropped and
/// zero coefficients are never stored.
class QSeries {
public:
  explicit QSeries(SeriesContext ctx);
  static QSeries one(SeriesContext ctx);
  static QSeries monomial(SeriesContext ctx, const Exponent& alpha, LaurentFraction c);

  const SeriesContext& context() const { return ctx_; }
  const std::map<Exponent, LaurentFraction, GradedLex>& terms() const { return terms_; }
  LaurentFraction coefficient(const Exponent& alpha) const;

  /// Adds c y^alpha; ignored beyond the truncation order.
  void add(const Exponent& alpha, const LaurentFraction& c);

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b);

  /// Requires constant term 1.
  QSeries inverse() const;

  /// One line per monomial in graded order: "y^(a1,...,an) : (num)/(den)".
  std::string to_string() const;

private:
  SeriesContext ctx_;
  std::map<Exponent, LaurentFraction, GradedLex> terms_;
};

} // namespace greenseq
