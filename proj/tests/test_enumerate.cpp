#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "greenseq/enumerate.hpp"
#include "greenseq/errors.hpp"

using namespace greenseq;

namespace {

const std::vector<MutationSequence> kTableA4{
    one_based({4, 3, 2, 1, 4, 3, 2, 4, 3, 4}),
    one_based({1, 4, 3, 2, 4, 3, 4}),
    one_based({1, 2, 4, 3, 4}),
    one_based({2, 1, 2, 4, 3, 4}),
    one_based({1, 2, 3, 4}),
    one_based({2, 1, 2, 3, 4}),
    one_based({1, 3, 2, 3, 4}),
    one_based({3, 2, 1, 3, 2, 3, 4}),
};

} // namespace

TEST_CASE("A1 and A2 enumerations") {
  const EnumerationResult a1 = enumerate_mgs(Quiver(1, 0), 5);
  CHECK(a1.sequences == std::vector<MutationSequence>{{0}});
  CHECK(a1.complete);

  const EnumerationResult a2 = enumerate_mgs(corpus::quiver("a2.q"), 5);
  CHECK(a2.sequences == std::vector<MutationSequence>{one_based({1, 2}), one_based({2, 1, 2})});
  CHECK(a2.complete);

  const EnumerationResult cut = enumerate_mgs(corpus::quiver("a2.q"), 2);
  CHECK(cut.sequences == std::vector<MutationSequence>{one_based({1, 2})});
  CHECK_FALSE(cut.complete);
}

TEST_CASE("enumerated sequences are distinct maximal green sequences in order") {
  const Quiver q = corpus::quiver("linear_a4.q");
  const EnumerationResult r = enumerate_mgs(q, 10);
  CHECK(r.complete);
  CHECK(std::is_sorted(r.sequences.begin(), r.sequences.end()));
  CHECK(std::set<MutationSequence>(r.sequences.begin(), r.sequences.end()).size() == r.sequences.size());
  for (const auto& s : r.sequences) {
    CHECK(s.size() <= 10);
    CHECK(verify_sequence(q, s).is_maximal_green);
  }
  for (const auto& s : kTableA4) {
    CAPTURE(format_sequence(q, s));
    CHECK(std::find(r.sequences.begin(), r.sequences.end(), s) != r.sequences.end());
  }
  CHECK(count_mgs(q, 10).count == r.sequences.size());
}

TEST_CASE("linear A_n counts meet both lower bounds") {
  // With F_1 = 1, F_2 = 2 the bound F_(n+1) only applies from n = 3; for
  // n = 1, 2 the base values are 1 and 2 (see README).
  const std::vector<Integer> bound{Integer(1), Integer(2), fibonacci(4), fibonacci(5)};
  CHECK(bound[2] == 5);
  CHECK(bound[3] == 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const CountResult c = count_mgs(linear_an(n), n * (n + 1) / 2);
    CHECK(c.complete);
    CHECK(Integer(c.count) >= bound[n - 1]);
    CHECK(Integer(c.count) >= fibonacci(n));
    CHECK(c.count >= (std::size_t{1} << (n - 1)));
  }
  CHECK(to_report(count_mgs(corpus::quiver("a2.q"), 3)) == "2 complete\n");
  CHECK(to_report(count_mgs(corpus::quiver("a2.q"), 2)) == "1 truncated\n");
}

TEST_CASE("the visitor sees the same sequences as the collecting overload") {
  const Quiver q = corpus::quiver("torus.q");
  std::vector<MutationSequence> seen;
  std::size_t nodes = 0;
  const bool complete = enumerate_mgs(q, 6, [&](const MutationSequence& s) { seen.push_back(s); }, &nodes);
  const EnumerationResult r = enumerate_mgs(q, 6);
  CHECK(seen == r.sequences);
  CHECK(complete == r.complete);
  CHECK(nodes == r.nodes);
  CHECK(std::find(seen.begin(), seen.end(), one_based({1, 3, 4, 2, 1, 3})) != seen.end());
}

TEST_CASE("Fibonacci numbers start at 1, 2") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 2);
  CHECK(fibonacci(5) == 8);
  CHECK(fibonacci(10) == 89);
}

TEST_CASE("long sequences") {
  CHECK(long_sequence(1) == one_based({1}));
  CHECK(long_sequence(4) == one_based({4, 3, 2, 1, 4, 3, 2, 4, 3, 4}));
  CHECK(linear_an(4) == corpus::quiver("linear_a4.q"));
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(long_sequence(n).size() == n * (n + 1) / 2);
    CHECK(verify_sequence(linear_an(n), long_sequence(n)).is_maximal_green);
  }
}

TEST_CASE("cycle quivers") {
  CHECK(cycle_quiver(6) == corpus::quiver("cycle6.q"));
  CHECK_THROWS_AS(cycle_quiver(2), InvalidInput);
}

TEST_CASE("minimal length by iterative deepening") {
  const MinLengthResult a2 = min_length_mgs(corpus::quiver("a2.q"), 5);
  CHECK(a2.complete);
  CHECK(*a2.witness == one_based({1, 2}));

  const MinLengthResult c3 = min_length_mgs(cycle_quiver(3), 6);
  REQUIRE(c3.witness);
  CHECK(c3.witness->size() == 4);
  CHECK(verify_sequence(cycle_quiver(3), *c3.witness).is_maximal_green);

  const MinLengthResult c4 = min_length_mgs(cycle_quiver(4), 8);
  CHECK(c4.witness->size() == 6);

  const MinLengthResult capped = min_length_mgs(cycle_quiver(4), 5);
  CHECK_FALSE(capped.witness);
  CHECK_FALSE(capped.complete);

  CHECK(to_report(corpus::quiver("a2.q"), a2) ==
        "length: 2\nwitness: 1 2\ncomplete: true\nnodes: " + std::to_string(a2.nodes) + "\n");
}

TEST_CASE("compositional minimum on the cycle with a tail") {
  const QuiverFile f = corpus::load("cycle_with_tail.q");
  const CompositionalResult r = compositional_min_mgs(f.shuffle_problem(), 100000);
  CHECK(r.witness == parse_sequence(f.quiver, "u1 u2 u3 v1 v2 v3 v4 v5 v3 v2 v1 u4"));
  CHECK(r.component_lengths == std::vector<std::size_t>{4, 8});
  CHECK(verify_sequence(f.quiver, r.witness).is_maximal_green);

  // A non-minimal block sequence is refused.
  const Quiver a2 = corpus::quiver("a2.q");
  const ShuffleProblem long_one(a2, VertexPartition({{0, 1}}, 2), {one_based({2, 1, 2})});
  CHECK_THROWS_AS(compositional_min_mgs(long_one, 100), InvalidInput);
  const ShuffleProblem short_one(a2, VertexPartition({{0, 1}}, 2), {one_based({1, 2})});
  CHECK(compositional_min_mgs(short_one, 100).witness == one_based({1, 2}));
}
