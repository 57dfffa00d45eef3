#include <doctest.h>

#include "corpus.hpp"
#include "greenseq/dominance.hpp"
#include "greenseq/errors.hpp"

using namespace greenseq;

namespace {

DominanceConstants constant(std::size_t i, std::size_t j, int d) {
  DominanceConstants c;
  c.set(i, j, Integer(d));
  return c;
}

} // namespace

TEST_CASE("dominance constants are symmetric and default to one") {
  DominanceConstants d;
  CHECK(d.get(0, 1) == 1);
  d.set(1, 0, Integer(3));
  CHECK(d.get(0, 1) == 3);
  CHECK(d == constant(0, 1, 3));
  CHECK(constant(0, 2, 1) == DominanceConstants{});
  CHECK((constant(0, 1, 2) * constant(0, 1, 3)).get(1, 0) == 6);
  CHECK_THROWS_AS(d.set(0, 1, Integer(0)), InvalidInput);
}

TEST_CASE("plain dominance") {
  const Quiver torus = corpus::quiver("torus.q");
  CHECK(dominates(torus, torus));
  CHECK_FALSE(dominates(corpus::quiver("a2.q"), opposite(corpus::quiver("a2.q"))));
  CHECK(dominates(corpus::quiver("ladder_rungs_2345.q"), corpus::quiver("ladder_a2_a4.q")));
  CHECK_FALSE(dominates(corpus::quiver("ladder_a2_a4.q"), corpus::quiver("ladder_rungs_2345.q")));
}

TEST_CASE("scaled torus recovers its constant") {
  const QuiverFile f = corpus::load("torus.q");
  for (int a = 1; a <= 3; ++a) {
    const Quiver b = scale_bridging(f.quiver, *f.partition, constant(0, 1, a));
    CHECK(b(0, 1) == a);
    CHECK(b(3, 2) == -2 * a);
    CHECK(b(2, 1) == -1);
    const auto d = pi_dominates(b, f.quiver, *f.partition);
    REQUIRE(d);
    CHECK(d->get(0, 1) == a);
    CHECK(pi_dominates_with(b, f.quiver, *f.partition, constant(0, 1, a)));
    CHECK(dominates(b, f.quiver));
  }
}

TEST_CASE("scaled cycle doubles the arrows at vertex 5") {
  const QuiverFile f = corpus::load("cycle6.q");
  const Quiver b = scale_bridging(f.quiver, *f.partition, constant(0, 1, 2));
  CHECK(b(3, 4) == 2);
  CHECK(b(4, 5) == 2);
  CHECK(b(5, 0) == 1);
  CHECK(pi_dominates(b, f.quiver, *f.partition)->get(0, 1) == 2);
}

TEST_CASE("ladder with uniform rungs pi-dominates, uneven rungs do not") {
  const QuiverFile f = corpus::load("ladder_a2_a4.q");
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const Quiver b = scale_bridging(f.quiver, *f.partition, constant(0, 1, alpha));
    CHECK(pi_dominates(b, f.quiver, *f.partition)->get(0, 1) == alpha);
  }
  const Quiver uneven = corpus::quiver("ladder_rungs_2345.q");
  CHECK_FALSE(pi_dominates(uneven, f.quiver, *f.partition));
  CHECK_FALSE(pi_dominates_with(uneven, f.quiver, *f.partition, constant(0, 1, 2)));
}

TEST_CASE("pi-dominance needs identical components and matching signs") {
  const QuiverFile f = corpus::load("torus.q");
  Quiver changed = f.quiver;
  changed.set(2, 3, Integer(-2)); // flips an arrow inside block {2,3}
  CHECK_FALSE(pi_dominates(changed, f.quiver, *f.partition));

  Quiver flipped = f.quiver;
  flipped.set(0, 1, Integer(-1));
  CHECK_FALSE(pi_dominates(flipped, f.quiver, *f.partition));

  Quiver created = f.quiver;
  created.set(0, 2, Integer(0));
  CHECK_FALSE(pi_dominates(created, f.quiver, *f.partition));
}

TEST_CASE("constants compose along a chain of dominations") {
  const QuiverFile f = corpus::load("torus.q");
  const VertexPartition& p = *f.partition;
  const Quiver b = scale_bridging(f.quiver, p, constant(0, 1, 2));
  const Quiver c = scale_bridging(b, p, constant(0, 1, 3));
  const auto d = pi_dominates(c, f.quiver, p);
  REQUIRE(d);
  CHECK(*d == *pi_dominates(c, b, p) * *pi_dominates(b, f.quiver, p));
}

TEST_CASE("component preserving sequences transfer to dominating quivers") {
  const auto transfer = [](const char* file, const MutationSequence& tau, int d) {
    const QuiverFile f = corpus::load(file);
    return transfer_check(f.quiver, *f.partition, constant(0, 1, d), tau);
  };
  for (int d = 1; d <= 3; ++d) {
    CAPTURE(d);
    const TransferReport torus = transfer("torus.q", one_based({1, 3, 4, 2, 1, 3}), d);
    CHECK(torus.stepwise_dominance);
    CHECK(torus.on_b.is_maximal_green);
    CHECK(torus.maximal_green_transfers);

    const TransferReport cycle = transfer("cycle6.q", one_based({1, 2, 3, 4, 5, 6, 4, 3, 2, 1}), d);
    CHECK(cycle.stepwise_dominance);
    CHECK(cycle.on_b.is_maximal_green);

    const TransferReport ladder =
        transfer("ladder_a2_a4.q", one_based({2, 3, 6, 7, 1, 4, 5, 8, 2, 3, 6, 7, 1, 4, 5, 8, 2, 3, 6, 7}), d);
    CHECK(ladder.stepwise_dominance);
    CHECK(ladder.on_b.is_maximal_green);
  }
  CHECK_THROWS_AS(transfer("torus.q", one_based({2, 1, 3, 4, 2}), 2), InvalidInput);
}

TEST_CASE("dominance report") {
  const QuiverFile f = corpus::load("ladder_a2_a4.q");
  const std::string text = dominance_report(corpus::quiver("ladder_rungs_2345.q"), f.quiver, &*f.partition);
  CHECK(text == "dominates: true\npi_dominates: false\n");
  const Quiver b = scale_bridging(f.quiver, *f.partition, constant(0, 1, 2));
  CHECK(dominance_report(b, f.quiver, &*f.partition) == "dominates: true\npi_dominates: true\nd_1_2: 2\n");
  CHECK(dominance_report(b, f.quiver, nullptr) == "dominates: true\n");
}
