#include <doctest.h>

#include <random>

#include "fsg/abelian_fox.hpp"
#include "fsg/errors.hpp"
#include "fsg/solvable.hpp"
#include "oracles.hpp"

using namespace fsg;

namespace {
  Word const x1(2, {1});
  Word const x2(2, {2});
  Word const c12 = commutator(x1, x2);

  // [[x1,x2], x1^-1 [x1,x2] x1], the conjugate freely reduced; length 16.
  Word second_derived() {
    return commutator(c12, free_reduce(conjugate(c12, invert(x1))));
  }

  // Structured words that tend to be trivial deep in the derived series.
  Word nested(std::mt19937_64& rng, int rank, int depth) {
    if (depth == 0) {
      return random_word(rng, rank, 1 + rng() % 3);
    }
    Word u = nested(rng, rank, depth - 1);
    Word v = nested(rng, rank, depth - 1);
    return free_reduce(commutator(u, conjugate(v, random_word(rng, rank, 2))));
  }
}  // namespace

TEST_CASE("prefix sets") {
  PrefixSet D(Word(2, {1, 2}));
  CHECK(D.size() == 3);
  CHECK(D.prefix(0).empty());
  CHECK(D.prefix(2) == Word(2, {1, 2}));
  CHECK(D.step(1) == Letter(1, 1));
  CHECK(PrefixSet(Word(2)).size() == 1);
  CHECK(PrefixSet(c12).size() == 5);
  CHECK(PrefixSet(c12).prefix(3) == Word(2, {1, 2, -1}));
  CHECK_THROWS_AS(D.prefix(3), PreconditionError);
}

TEST_CASE("collecting similar terms") {
  PartitionFunction P{2, {0, 1, 2, 3, 0}};
  std::vector<SignedIndex> t{{+1, 3}, {-1, 4}};
  CHECK(collect_similar_terms(t, P)
        == std::map<std::size_t, std::int64_t>{{0, -1}, {3, 1}});
  std::vector<SignedIndex> cancel{{+1, 2}, {-1, 2}};
  CHECK(collect_similar_terms(cancel, P).empty());
  CHECK(collect_similar_terms({}, P).empty());
}

TEST_CASE("derivative differences") {
  Word const w(2, {1, -1});
  PrefixSet  D(w);
  auto       P1 = abelian_partition(D);
  CHECK(derivative_difference_is_zero(D, P1, 0, 2, 1));
  PrefixSet Dc(c12);
  auto      Pc = abelian_partition(Dc);
  CHECK_FALSE(derivative_difference_is_zero(Dc, Pc, 0, 4, 1));
  for (std::size_t s = 0; s < Dc.size(); ++s) {
    CHECK(derivative_difference_is_zero(Dc, Pc, s, s, 2));
  }
  CHECK_THROWS_AS(derivative_difference_is_zero(Dc, Pc, 4, 0, 1),
                  PreconditionError);
  CHECK_THROWS_AS(derivative_difference_is_zero(Dc, Pc, 0, 1, 1),
                  PreconditionError);
}

TEST_CASE("partitions") {
  CHECK(partition(c12, 2).reps == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(partition(c12, 1).reps == std::vector<std::size_t>{0, 1, 2, 3, 0});
  CHECK(partition(Word(2, {1, -1}), 3).reps
        == std::vector<std::size_t>{0, 1, 0});
  Word w = second_derived();
  CHECK(w.size() == 16);
  auto P = partition(w, 2);
  CHECK(P.reps[0] == P.reps[16]);
  CHECK(partition(w, 3).reps[16] != 0);
  CHECK_THROWS_AS(partition(w, 0), PreconditionError);
}

TEST_CASE("partition blocks match the naive solvable word problem") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Word w = rng() % 2 ? random_word(rng, 2, rng() % 12)
                       : nested(rng, 2, 1);
    PrefixSet D(w);
    for (int d = 1; d <= 3; ++d) {
      auto P = partition(w, d);
      for (std::size_t s = 0; s < D.size(); ++s) {
        // Representatives are the smallest equal prefix.
        std::size_t expected = s;
        for (std::size_t t = 0; t < s; ++t) {
          if (oracle::naive_trivial(
                  concat(invert(D.prefix(t)), D.prefix(s)), d)) {
            expected = t;
            break;
          }
        }
        CHECK(P(s) == expected);
      }
    }
  }
}

TEST_CASE("solvable word problem") {
  Word const x3_1(3, {1}), x3_2(3, {2}), x3_3(3, {3});
  Word w = commutator(commutator(x3_1, x3_2), commutator(x3_1, x3_3));
  CHECK(wp_solvable(w, 2));
  CHECK_FALSE(wp_solvable(w, 3));
  CHECK(wp_solvable(Word(2, {1, -1}), 5));
  CHECK_FALSE(wp_solvable(x1, 1));
  CHECK(wp_solvable(c12, 1));
  CHECK_FALSE(wp_solvable(c12, 2));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    Word u = nested(rng, 2, 1 + static_cast<int>(rng() % 2));
    for (int d = 1; d <= 3; ++d) {
      CHECK(wp_solvable(u, d) == oracle::naive_trivial(u, d));
    }
    CHECK(wp_solvable(u, 2) == wp_metabelian(u));
  }
}

TEST_CASE("Fox derivatives over the solvable quotient") {
  CHECK(fox_solvable(Word(2, {1, -1}), 2, 1).is_zero());

  // Class 1 agrees with the abelian module.
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Word      w = random_word(rng, 2, rng() % 20);
    PrefixSet D(w);
    for (int k = 1; k <= 2; ++k) {
      auto e = fox_solvable(w, 1, k);
      AbelianRingElement as_ring(2);
      for (auto const& t : e.terms) {
        as_ring.add_term(abelianize(D.prefix(t.prefix_index)), t.coeff);
      }
      CHECK(as_ring == oracle::fox_ring(w, k));
    }
  }

  Word const fig1(2, {2, 1, 2, 1, 2, -1, -2, -2, -2, -1});
  PrefixSet  D(fig1);
  auto       e = fox_solvable(fig1, 1, 2);
  AbelianRingElement as_ring(2);
  for (auto const& t : e.terms) {
    as_ring.add_term(abelianize(D.prefix(t.prefix_index)), t.coeff);
  }
  CHECK(as_ring == oracle::fox_ring(fig1, 2));
  CHECK(as_ring.coefficient(AbelianVector{2, 2}) == 1);
  CHECK(as_ring.coefficient(AbelianVector{1, 2}) == -1);

  auto c = fox_solvable(c12, 1, 1);
  CHECK(c.klass == 1);
  CHECK(c.terms.size() == 2);
}
