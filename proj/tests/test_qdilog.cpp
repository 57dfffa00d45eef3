#include <doctest.h>

#include "corpus.hpp"
#include "greenseq/bipartite.hpp"
#include "greenseq/dilog.hpp"
#include "greenseq/errors.hpp"

using namespace greenseq;

namespace {

using LP = LaurentPolynomial;

LP v(int e) { return LP::monomial(Integer(1), e); }

SeriesContext one_variable(int order) { return {1, order, {{0}}}; }

std::vector<std::vector<int>> supports(const SignedWord& word) {
  std::vector<std::vector<int>> out;
  for (const auto& l : word) {
    std::vector<int> s;
    for (std::size_t j = 0; j < l.beta.size(); ++j)
      if (l.beta[j] != 0) s.push_back(static_cast<int>(j) + 1);
    out.push_back(s);
  }
  return out;
}

bool same_invariant(const Quiver& q, const MutationSequence& s1, const MutationSequence& s2, int order) {
  return dt_invariant(q, s1, order) == dt_invariant(q, s2, order);
}

} // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const LP p = v(2) - Integer(1);
  CHECK(p.to_string() == "v^2 - 1");
  CHECK((p * p).to_string() == "v^4 - 2 v^2 + 1");
  CHECK((v(1) + v(-1)).to_string() == "v + v^-1");
  CHECK((p - p).is_zero());
  CHECK(LP(Integer(-3)).to_string() == "-3");
  CHECK(LP::from_coefficients(-1, {Integer(0), Integer(2), Integer(0)}) == LP(Integer(2)));
  CHECK((LP(Integer(6)) * v(3) + v(3) * Integer(4)).content() == 10);
  CHECK(exact_quotient(v(4) - Integer(1), v(1) - Integer(1)).to_string() == "v^3 + v^2 + v + 1");
  CHECK_THROWS_AS(exact_quotient(v(2) + Integer(1), v(1) - Integer(1)), InternalError);
  CHECK(polynomial_gcd(v(4) - Integer(1), Integer(2) * (v(2) - Integer(2) * v(1) + Integer(1))).to_string() == "v - 1");
}

TEST_CASE("Laurent fractions have one canonical form") {
  const LaurentFraction a(v(2) - Integer(1), v(1) - Integer(1));
  CHECK(a == LaurentFraction(v(1) + Integer(1)));
  CHECK(a.denominator() == LP(Integer(1)));

  const LaurentFraction b(Integer(2) * v(1), Integer(4) * v(3));
  CHECK(b.to_string() == "(v^-2)/(2)");

  const LaurentFraction c(Integer(1), -v(1) - Integer(1));
  CHECK(c.to_string() == "(-1)/(v + 1)");

  const LaurentFraction x(Integer(1), v(1) - Integer(1)), y(Integer(1), v(1) + Integer(1));
  CHECK((x + y) == LaurentFraction(Integer(2) * v(1), v(2) - Integer(1)));
  CHECK((x - x).is_zero());
  CHECK((x * y) * LaurentFraction(v(2) - Integer(1)) == LaurentFraction(Integer(1)));
  CHECK((x / y) == LaurentFraction(v(1) + Integer(1), v(1) - Integer(1)));
  CHECK_THROWS(LaurentFraction(Integer(1), LP{}));
}

TEST_CASE("quantum torus multiplication twists by the skew form") {
  const Quiver a2 = corpus::quiver("a2.q");
  const SeriesContext ctx = series_context(a2, 3);
  const QSeries y1 = QSeries::monomial(ctx, {1, 0}, LP(Integer(1)));
  const QSeries y2 = QSeries::monomial(ctx, {0, 1}, LP(Integer(1)));
  CHECK((y1 * y2) == QSeries::monomial(ctx, {1, 1}, v(1)));
  CHECK((y2 * y1) == QSeries::monomial(ctx, {1, 1}, v(-1)));
  CHECK((y1 * QSeries::one(ctx)) == y1);
  CHECK((y1 * y2 * y1 * y2).terms().empty()); // degree 4 is past the order
}

TEST_CASE("contexts must carry a skew-symmetric form") {
  CHECK_THROWS_AS(SeriesContext(2, 3, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(SeriesContext(2, 3, {{0, 1}}), InvalidInput);
}

TEST_CASE("dilogarithm series coefficients") {
  const QSeries e = dilog({1}, one_variable(2));
  CHECK(e.to_string() ==
        "y^(0) : (1)/(1)\n"
        "y^(1) : (v)/(v^2 - 1)\n"
        "y^(2) : (v^2)/(v^6 - v^4 - v^2 + 1)\n");
  CHECK(dilog({2}, one_variable(3)).terms().size() == 2);
  CHECK_THROWS_AS(dilog({0}, one_variable(2)), InvalidInput);
  CHECK_THROWS_AS(dilog({-1}, one_variable(2)), InvalidInput);
}

TEST_CASE("dilogarithm inverse") {
  const SeriesContext ctx = one_variable(6);
  const QSeries e = dilog({1}, ctx);
  CHECK((e * dilog_inverse({1}, ctx)) == QSeries::one(ctx));
  CHECK(dilog_inverse({1}, ctx) == e.inverse());

  const SeriesContext two = series_context(corpus::quiver("a2.q"), 4);
  const QSeries p = dilog({1, 0}, two) * dilog({0, 1}, two);
  CHECK((p * p.inverse()) == QSeries::one(two));
  CHECK(p.inverse() == dilog_inverse({0, 1}, two) * dilog_inverse({1, 0}, two));
}

TEST_CASE("letters of the maximal green sequences") {
  const Quiver a2 = corpus::quiver("a2.q");
  const SignedWord w = dt_word(a2, one_based({2, 1, 2}));
  CHECK(supports(w) == std::vector<std::vector<int>>{{2}, {1, 2}, {1}});
  for (const auto& l : w) CHECK(l.sign == 1);

  const Quiver a3 = corpus::quiver("alternating_a3.q");
  const SignedWord w3 = dt_word(a3, one_based({1, 3, 2, 1, 3, 2}));
  CHECK(supports(w3) == std::vector<std::vector<int>>{{1}, {3}, {1, 2, 3}, {2, 3}, {1, 2}, {2}});
  CHECK(to_report(a2, dt_word(a2, one_based({1, 1}))) ==
        "letter_1: vertex=1 sign=+ beta=(1,0)\n"
        "letter_2: vertex=1 sign=- beta=(-1,0)\n");
}

TEST_CASE("pentagon identity") {
  const Quiver a2 = corpus::quiver("a2.q");
  CHECK(same_invariant(a2, one_based({1, 2}), one_based({2, 1, 2}), 6));
  CHECK(identity_report(dt_invariant(a2, one_based({1, 2}), 6), dt_invariant(a2, one_based({2, 1, 2}), 6)) ==
        "equal: true\norder: 6\nterms: " +
            std::to_string(dt_invariant(a2, one_based({1, 2}), 6).terms().size()) + "\n");

  // With the opposite form the two products differ.
  const SeriesContext ctx = series_context(opposite(a2), 4);
  const QSeries lhs = word_product(dt_word(a2, one_based({1, 2})), ctx);
  const QSeries rhs = word_product(dt_word(a2, one_based({2, 1, 2})), ctx);
  CHECK_FALSE(lhs == rhs);
  CHECK(identity_report(lhs, rhs).find("first_difference: y^(1,1)") != std::string::npos);
}

TEST_CASE("alternating A3 identity") {
  const Quiver a3 = corpus::quiver("alternating_a3.q");
  CHECK(same_invariant(a3, one_based({2, 1, 3}), one_based({1, 3, 2, 1, 3, 2}), 6));
}

TEST_CASE("twist of A3 identity") {
  const Quiver q = corpus::quiver("twist_a3.q");
  const MutationSequence s1 = one_based({1, 3, 4, 6, 2, 5, 1, 3, 4, 6, 2, 5});
  const MutationSequence s2 = one_based({2, 5, 1, 3, 4, 6, 2, 5, 1, 3, 4, 6});
  CHECK(same_invariant(q, s1, s2, 4));
  CHECK(supports(dt_word(q, s1)) == std::vector<std::vector<int>>{
                                        {1}, {3}, {4}, {6}, {1, 2, 3}, {4, 5, 6}, {2, 3}, {1, 2}, {5, 6}, {4, 5}, {2}, {5}});
  // The last four letters pairwise commute (no arrows among 1, 3, 4, 6).
  CHECK(supports(dt_word(q, s2)) == std::vector<std::vector<int>>{
                                        {2}, {5}, {1, 5}, {3, 5}, {2, 4}, {2, 6}, {2, 4, 6}, {1, 3, 5}, {3}, {1}, {6}, {4}});
}

TEST_CASE("red letters enter as inverse dilogarithms") {
  const Quiver a2 = corpus::quiver("a2.q");
  const SignedWord w = dt_word(a2, one_based({1, 1, 1, 2}));
  CHECK(w[1].sign == -1);
  CHECK(same_invariant(a2, one_based({1, 1, 1, 2}), one_based({1, 2}), 6));

  // Every reddening sequence of linear A3 up to length 6 gives the same product.
  const Quiver a3 = Quiver::from_arrows(3, 0, std::vector<Arrow>{{0, 1, 1}, {1, 2, 1}});
  const QSeries reference = dt_invariant(a3, one_based({1, 2, 3}), 4);
  std::size_t with_red = 0;
  for (std::size_t len = 3; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      MutationSequence s;
      for (std::size_t i = 0, c = code; i < len; ++i, c /= 3) s.push_back(c % 3);
      const SequenceReport r = verify_sequence(a3, s);
      if (!r.is_reddening || r.is_maximal_green) continue;
      ++with_red;
      CHECK(dt_invariant(a3, s, 4) == reference);
    }
  }
  CHECK(with_red > 0);
  CHECK_THROWS_AS(dt_invariant(a3, one_based({1, 2}), 4), InvalidInput);
}

TEST_CASE("restriction to a block keeps its letters") {
  const QuiverFile f = corpus::load("twist_a3.q");
  const MutationSequence s = one_based({1, 3, 4, 6, 2, 5, 1, 3, 4, 6, 2, 5});
  const SignedWord first = check_restriction(f.quiver, s, *f.partition, 0);
  CHECK(supports(first) == std::vector<std::vector<int>>{{1}, {3}, {1, 2, 3}, {2, 3}, {1, 2}, {2}});
  const SignedWord second = check_restriction(f.quiver, s, *f.partition, 1);
  CHECK(supports(second) == std::vector<std::vector<int>>{{4}, {6}, {4, 5, 6}, {5, 6}, {4, 5}, {5}});

  const SignedWord whole = dt_word(f.quiver, s);
  CHECK(support_confined(whole, *f.partition));
  CHECK(restrict_word(whole, {0, 1, 2, 3, 4, 5}).size() == whole.size());

  // Singletons with a source sequence give unit letters.
  const Quiver acyclic = corpus::quiver("acyclic5.q");
  const SignedWord units = check_restriction(acyclic, one_based({4, 1, 2, 3, 5}), VertexPartition::singletons(5), 0);
  CHECK(supports(units) == std::vector<std::vector<int>>{{1}});

  CHECK_THROWS_AS(check_restriction(f.quiver, one_based({2, 1, 3}), *f.partition, 0), InvalidInput);
}
