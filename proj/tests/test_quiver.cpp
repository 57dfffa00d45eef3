#include <doctest.h>

#include "corpus.hpp"
#include "greenseq/errors.hpp"
#include "greenseq/quiver.hpp"

using namespace greenseq;

namespace {

Quiver a2() { return Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 1, 1}}); }

CVector vec(std::initializer_list<int> xs) {
  CVector v;
  for (int x : xs) v.push_back(x);
  return v;
}

} // namespace

TEST_CASE("from_arrows encodes signed multiplicities") {
  const Quiver q = a2();
  CHECK(q(0, 1) == 1);
  CHECK(q(1, 0) == -1);
  CHECK(q(0, 0) == 0);

  const Quiver torus = corpus::quiver("torus.q");
  CHECK(torus(2, 3) == 2);
  CHECK(torus(3, 0) == 1);
  CHECK(torus.arrows().size() == 6);
}

TEST_CASE("from_arrows rejects malformed arrow lists") {
  CHECK_THROWS_AS(Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 1, 1}, {1, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_arrows(1, 2, std::vector<Arrow>{{1, 2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 5, 1}}), InvalidInput);
  // Repeating an arrow in the same direction adds up.
  CHECK(Quiver::from_arrows(2, 0, std::vector<Arrow>{{0, 1, 1}, {0, 1, 2}})(0, 1) == 3);
}

TEST_CASE("framed adds one frozen copy per vertex") {
  const Quiver f = framed(a2());
  CHECK(f.n_mutable() == 2);
  CHECK(f.n_frozen() == 2);
  CHECK(f(0, 1) == 1);
  CHECK(f(0, 2) == 1);
  CHECK(f(1, 3) == 1);
  CHECK(f(0, 3) == 0);
  CHECK(f.vertex_name(2) == "1'");

  const Quiver one = framed(Quiver(1, 0));
  CHECK(one.size() == 2);
  CHECK(one(0, 1) == 1);

  const Quiver torus = framed(corpus::quiver("torus.q"));
  CHECK(torus.size() == 8);
  for (Vertex i = 0; i < 4; ++i) {
    CVector e(4, 0);
    e[i] = 1;
    CHECK(c_vector(torus, i) == e);
    CHECK(vertex_color(torus, i) == Color::Green);
  }
  CHECK_THROWS_AS(framed(torus), InvalidInput);
}

TEST_CASE("mutation follows the matrix rule") {
  CHECK(mutate(a2(), 0)(0, 1) == -1);
  CHECK_THROWS_AS(mutate(framed(a2()), 2), InvalidInput);

  const Quiver f1 = mutate(framed(a2()), 0);
  CHECK(c_vector(f1, 0) == vec({-1, 0}));
  CHECK(vertex_color(f1, 0) == Color::Red);
  CHECK(vertex_color(f1, 1) == Color::Green);

  const Quiver f21 = apply_sequence(framed(a2()), {1, 0});
  CHECK(c_vector(f21, 0) == vec({-1, -1}));

  // Composing through a vertex creates arrows; opposite 2-paths cancel.
  const Quiver path = Quiver::from_arrows(3, 0, std::vector<Arrow>{{0, 1, 2}, {1, 2, 3}});
  const Quiver m = mutate(path, 1);
  CHECK(m(0, 2) == 6);
  CHECK(m(1, 0) == 2);
  const Quiver tri = Quiver::from_arrows(3, 0, std::vector<Arrow>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(mutate(tri, 1)(0, 2) == 0);
}

TEST_CASE("apply_sequence folds mutations and reports the failing step") {
  const Quiver torus = corpus::quiver("torus.q");
  CHECK(apply_sequence(torus, {}) == torus);
  CHECK(apply_sequence(torus, {2, 2}) == torus);
  CHECK(all_red(apply_sequence(framed(torus), one_based({1, 3, 4, 2, 1, 3}))));
  CHECK(all_red(apply_sequence(framed(a2()), one_based({2, 1, 2}))));
  CHECK_THROWS_WITH_AS(apply_sequence(framed(a2()), {0, 3}), doctest::Contains("step 2"), InvalidInput);
}

TEST_CASE("c-vectors of ice quivers that are not framed-reachable are rejected") {
  Quiver q(2, 2);
  q.set(0, 2, 1);
  q.set(0, 3, -1);
  q.set(1, 3, 1);
  CHECK_THROWS_AS(c_vector(q, 0), SignCoherenceError);
  CHECK_THROWS_AS(vertex_color(q, 0), SignCoherenceError);
  q.set(0, 2, 0);
  q.set(0, 3, 0);
  CHECK_THROWS_AS(c_vector(q, 0), SignCoherenceError);
}

TEST_CASE("verify_sequence on the corpus quivers") {
  const auto mgs = [](const char* file, std::initializer_list<std::size_t> seq) {
    const SequenceReport r = verify_sequence(corpus::quiver(file), one_based(seq));
    return r.is_maximal_green && r.is_reddening;
  };
  CHECK(mgs("acyclic5.q", {4, 1, 2, 3, 5}));
  CHECK(mgs("torus.q", {1, 3, 4, 2, 1, 3}));
  CHECK(mgs("cremmer_gervais.q", {2, 3, 4, 1, 5, 1, 6, 3}));
  CHECK(mgs("cycle6.q", {1, 2, 3, 4, 5, 6, 4, 3, 2, 1}));

  const QuiverFile dsum = corpus::load("direct_sum_a2_a3.q");
  CHECK(verify_sequence(dsum.quiver, parse_sequence(dsum.quiver, "2 1 2 4 6 5")).is_maximal_green);

  const SequenceReport back = verify_sequence(a2(), {1, 1});
  CHECK_FALSE(back.is_reddening);
  CHECK(back.step_colors == std::vector<Color>{Color::Green, Color::Red});
}

TEST_CASE("the published Cremmer-Gervais drawing does not admit the sequence") {
  const SequenceReport r =
      verify_sequence(corpus::quiver("cremmer_gervais_as_drawn.q"), one_based({2, 3, 4, 1, 5, 1, 6, 3}));
  CHECK_FALSE(r.is_reddening);
}

TEST_CASE("reddening sequences with red steps are not maximal green") {
  const SequenceReport r = verify_sequence(a2(), one_based({1, 1, 1, 2}));
  CHECK(r.is_reddening);
  CHECK_FALSE(r.is_maximal_green);
  CHECK(r.step_colors[1] == Color::Red);
}

TEST_CASE("restriction keeps the induced submatrix") {
  const Quiver torus = corpus::quiver("torus.q");
  const std::vector<Vertex> s{0, 3};
  const Restriction r = restrict_to(torus, s);
  CHECK(r.quiver.size() == 2);
  CHECK(r.quiver(1, 0) == 1);
  CHECK(r.vertex_map == s);
  CHECK(r.quiver.vertex_name(1) == "4");

  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(restrict_to(torus, all).quiver == torus);

  const Quiver dsum = corpus::quiver("direct_sum_a2_a3.q");
  const std::vector<Vertex> b{2, 3, 4};
  const Quiver comp = restrict_to(dsum, b).quiver;
  CHECK(comp(0, 1) == 1);
  CHECK(comp(2, 1) == 1);
  CHECK(comp(0, 2) == 0);

  CHECK_THROWS_AS(restrict_to(torus, std::vector<Vertex>{}), InvalidInput);
  CHECK_THROWS_AS(restrict_to(torus, std::vector<Vertex>{1, 1}), InvalidInput);
}

TEST_CASE("direct sums only accept arrows from the first summand") {
  const Quiver a = a2();
  const Quiver b = Quiver::from_arrows(3, 0, std::vector<Arrow>{{0, 1, 1}, {2, 1, 1}});
  const std::vector<Arrow> bridges{{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 2}, {1, 4, 1}};
  CHECK(direct_sum(a, b, bridges) == corpus::quiver("direct_sum_a2_a3.q"));

  const Quiver disjoint = direct_sum(a, b, {});
  CHECK(disjoint(0, 2) == 0);
  CHECK(restrict_to(disjoint, std::vector<Vertex>{0, 1}).quiver == a);
  CHECK(restrict_to(disjoint, std::vector<Vertex>{2, 3, 4}).quiver == b);

  CHECK_THROWS_AS(direct_sum(a, b, std::vector<Arrow>{{2, 0, 1}}), InvalidInput);
}

TEST_CASE("opposite reverses every arrow") {
  CHECK(opposite(a2())(1, 0) == 1);
  const Quiver torus = corpus::quiver("torus.q");
  CHECK(opposite(opposite(torus)) == torus);
  const std::vector<Vertex> s{0, 3};
  CHECK(restrict_to(opposite(torus), s).quiver == opposite(restrict_to(torus, s).quiver));
}

TEST_CASE("sequence report format") {
  const Quiver torus = corpus::quiver("torus.q");
  const std::string text = to_report(torus, verify_sequence(torus, one_based({1, 3, 4, 2, 1, 3})));
  CHECK(text ==
        "sequence: 1 3 4 2 1 3\n"
        "length: 6\n"
        "step_colors: green green green green green green\n"
        "is_reddening: true\n"
        "is_maximal_green: true\n"
        "verdict: maximal green\n");
}
