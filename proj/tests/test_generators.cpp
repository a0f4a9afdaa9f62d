#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shrinkca/generators.hpp"

using namespace shrinkca;

namespace {

Gf2Poly P(const char* text) { return Gf2Poly::parse(text); }

ShrinkingGenerator example1() {
  return ShrinkingGenerator(Lfsr(P("1+x^2+x^3"), BitSequence{1, 0, 0}),
                            Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0}));
}

}  // namespace

TEST_CASE("bit sequence text form") {
  auto s = BitSequence::parse("0110");
  CHECK(s.size() == 4);
  CHECK(s.to_string() == "0110");
  CHECK(BitSequence::parse("01 1\n0", true) == s);
  CHECK_THROWS_AS(BitSequence::parse("01 10"), std::invalid_argument);
  CHECK_THROWS_AS(BitSequence::parse("012"), std::invalid_argument);
  CHECK_THROWS_AS(BitSequence::parse(""), std::invalid_argument);
  CHECK_THROWS_AS((BitSequence{0, 2}), std::invalid_argument);
}

TEST_CASE("lfsr construction") {
  CHECK_THROWS_AS(Lfsr(P("1+x^2+x^3"), BitSequence{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Lfsr(Gf2Poly::one(), BitSequence{}), std::invalid_argument);
}

TEST_CASE("lfsr_sequence") {
  CHECK(lfsr_sequence(Lfsr(P("1+x^2+x^3"), BitSequence{1, 0, 0}), 7) ==
        BitSequence{1, 0, 0, 1, 1, 1, 0});
  CHECK(lfsr_sequence(Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0}), 15) ==
        BitSequence{1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1});
  CHECK(lfsr_sequence(Lfsr(P("1+x+x^4"), BitSequence{0, 0, 0, 0}), 40).is_all_zero());
  CHECK(lfsr_sequence(Lfsr(P("1+x+x^4"), BitSequence{1, 0, 1, 1}), 2) == BitSequence{1, 0});
  CHECK(lfsr_sequence(Lfsr(P("1+x+x^4"), BitSequence{1, 0, 1, 1}), 0).empty());
}

TEST_CASE("lfsr_sequence matches the written-out recurrence") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int r = 1 + static_cast<int>(rng() % 20);
    auto p = oracle::random_poly(rng, r - 1);
    p.set_coeff(static_cast<std::size_t>(r), true);
    auto seed = oracle::random_bits(rng, static_cast<std::size_t>(r));
    CHECK(lfsr_sequence(Lfsr(p, seed), 300) == oracle::recurrence_stream(p, seed, 300));
  }
}

TEST_CASE("PN-sequences have full period and balance") {
  std::mt19937_64 rng(4);
  for (int r = 2; r <= 10; ++r) {
    const std::size_t period = (std::size_t{1} << r) - 1;
    for (const auto& p : oracle::primitive_polys(r)) {
      auto seed = oracle::random_nonzero_bits(rng, static_cast<std::size_t>(r));
      auto s = lfsr_sequence(Lfsr(p, seed), 2 * period);
      CHECK(sequence_period(s) == period);
      CHECK(s.prefix(period).count_ones() == (std::size_t{1} << (r - 1)));
    }
  }
}

TEST_CASE("shrinking generator construction") {
  CHECK_THROWS_AS(ShrinkingGenerator(Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0}),
                                     Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ShrinkingGenerator(Lfsr(P("1+x+x^2"), BitSequence{1, 0}),
                                     Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0})),
                  std::invalid_argument);
  CHECK(example1().expected_period() == 60);
}

TEST_CASE("shrunken_sequence") {
  auto gen = example1();
  CHECK(shrunken_sequence(gen, 13) == BitSequence{1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0});
  CHECK(shrunken_sequence(gen, 0).empty());
  auto s = shrunken_sequence(gen, 120);
  CHECK(sequence_period(s) == 60);
  for (std::size_t i = 0; i < 60; ++i) CHECK(s[i] == s[i + 60]);

  // a_0 = 1 keeps b_0.
  CHECK(shrunken_sequence(gen, 1)[0] == lfsr_sequence(gen.data(), 1)[0]);

  ShrinkingGenerator dead(Lfsr(P("1+x^2+x^3"), BitSequence{0, 0, 0}),
                          Lfsr(P("1+x+x^4"), BitSequence{1, 0, 0, 0}));
  CHECK_THROWS_AS(shrunken_sequence(dead, 1), std::runtime_error);
  CHECK(shrunken_sequence(dead, 0).empty());
}

TEST_CASE("shrunken_sequence equals the brute-force filter") {
  std::mt19937_64 rng(8);
  for (int l1 = 2; l1 <= 5; ++l1) {
    for (int l2 = 2; l2 <= 7; ++l2) {
      if (std::gcd(l1, l2) != 1) continue;
      auto p1s = oracle::primitive_polys(l1);
      auto p2s = oracle::primitive_polys(l2);
      for (int trial = 0; trial < 4; ++trial) {
        Lfsr r1(p1s[rng() % p1s.size()], oracle::random_nonzero_bits(rng, static_cast<std::size_t>(l1)));
        Lfsr r2(p2s[rng() % p2s.size()], oracle::random_nonzero_bits(rng, static_cast<std::size_t>(l2)));
        const std::size_t pairs = ((std::size_t{1} << l1) - 1) * ((std::size_t{1} << l2) - 1);
        auto expected = oracle::filter_shrink(oracle::recurrence_stream(r1.charpoly(), r1.state(), pairs),
                                              oracle::recurrence_stream(r2.charpoly(), r2.state(), pairs));
        CHECK(shrunken_sequence(ShrinkingGenerator(r1, r2), expected.size()) == expected);
      }
    }
  }
}

TEST_CASE("shrunken period and kept-bit count") {
  std::mt19937_64 rng(9);
  for (int l1 = 1; l1 <= 4; ++l1) {
    for (int l2 = 2; l2 <= 8; ++l2) {
      if (std::gcd(l1, l2) != 1) continue;
      auto p1s = oracle::primitive_polys(l1);
      auto p2s = oracle::primitive_polys(l2);
      for (const auto& p2 : p2s) {
        Lfsr r1(p1s[rng() % p1s.size()], oracle::random_nonzero_bits(rng, static_cast<std::size_t>(l1)));
        Lfsr r2(p2, oracle::random_nonzero_bits(rng, static_cast<std::size_t>(l2)));
        ShrinkingGenerator gen(r1, r2);
        const auto t = static_cast<std::size_t>(gen.expected_period());
        CHECK(t == ((std::size_t{1} << l2) - 1) << (l1 - 1));
        CHECK(sequence_period(shrunken_sequence(gen, 3 * t)) == t);
        const std::size_t t1 = (std::size_t{1} << l1) - 1;
        CHECK(lfsr_sequence(r1, t1).count_ones() == (std::size_t{1} << (l1 - 1)));
      }
    }
  }
}

TEST_CASE("sequence_period") {
  auto r1 = lfsr_sequence(Lfsr(P("1+x^2+x^3"), BitSequence{1, 0, 0}), 14);
  CHECK(sequence_period(r1) == 7);
  CHECK(sequence_period(BitSequence(9)) == 1);
  CHECK(sequence_period(BitSequence{0, 1}) == 2);
  CHECK(sequence_period(BitSequence{1}) == 1);
  CHECK(sequence_period(shrunken_sequence(example1(), 180)) == 60);
  CHECK_THROWS(sequence_period(BitSequence{}));
}

TEST_CASE("decimate_by_stride") {
  auto s = BitSequence::parse("1101001110");
  CHECK(decimate_by_stride(s, 1, 0) == s);
  CHECK(decimate_by_stride(s, 3, 1) == BitSequence::parse("101"));
  CHECK(decimate_by_stride(s, s.size(), 4) == BitSequence{0});
  CHECK_THROWS(decimate_by_stride(s, 0, 0));
  CHECK_THROWS(decimate_by_stride(s, 3, 3));
}
