#include <gtest/gtest.h>

#include <random>

#include "troppic/semifield.hpp"

namespace troppic {
namespace {

TropRat t(long long v) { return TropRat(v); }

TropRat random_trop(std::mt19937& rng) {
  if (rng() % 8 == 0) return TropRat::zero();
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  return TropRat(Rational(num(rng), den(rng)));
}

TEST(TropRat, MaxPlus) {
  EXPECT_EQ(add(t(3), t(5)), t(5));
  EXPECT_EQ(mul(t(3), t(5)), t(8));
  EXPECT_EQ(inv(t(3)), t(-3));
}

TEST(TropRat, BottomIsAdditiveIdentityAndAbsorbing) {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const TropRat a = random_trop(rng);
    EXPECT_EQ(add(TropRat::zero(), a), a);
    EXPECT_EQ(mul(TropRat::zero(), a), TropRat::zero());
    EXPECT_EQ(mul(TropRat::one(), a), a);
  }
}

TEST(TropRat, InverseOfBottomIsDomainError) {
  EXPECT_THROW(inv(TropRat::zero()), DomainError);
  EXPECT_THROW(TropRat::zero().value(), DomainError);
}

TEST(TropRat, SemifieldAxiomsOnRandomTriples) {
  std::mt19937 rng(32);
  for (int i = 0; i < 500; ++i) {
    const TropRat a = random_trop(rng), b = random_trop(rng), c = random_trop(rng);
    EXPECT_EQ(add(a, a), a);
    EXPECT_EQ(add(a, b), add(b, a));
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    if (!is_zero(a) || !is_zero(b)) EXPECT_FALSE(is_zero(add(a, b)));
    if (!is_zero(a)) EXPECT_EQ(mul(a, inv(a)), TropRat::one());
  }
}

TEST(TropRat, SerializationRoundTrip) {
  EXPECT_EQ(TropRat(Rational(-6, 4)).str(), "-3/2");
  EXPECT_EQ(t(7).str(), "7");
  EXPECT_EQ(TropRat::zero().str(), "-inf");
  EXPECT_EQ(TropRat::parse("-3/2"), TropRat(Rational(-3, 2)));
  EXPECT_EQ(TropRat::parse("4/2"), t(2));
  EXPECT_EQ(TropRat::parse("-inf"), TropRat::zero());
  std::mt19937 rng(33);
  for (int i = 0; i < 200; ++i) {
    const TropRat a = random_trop(rng);
    EXPECT_EQ(TropRat::parse(a.str()), a);
  }
}

TEST(TropRat, ParseRejectsGarbage) {
  for (const char* bad : {"", "inf", "1/0", "1/", "/2", "a", "1.5", "+1", "1/-2", " 1"})
    EXPECT_THROW(TropRat::parse(bad), InputError) << bad;
}

TEST(TropRat, OrderPutsBottomFirst) {
  EXPECT_LT(TropRat::zero(), t(-1000));
  EXPECT_LT(t(1), t(2));
}

TEST(BoolSF, ExhaustiveAxioms) {
  const BoolSF vals[] = {BoolSF::zero(), BoolSF::one()};
  EXPECT_EQ(add(BoolSF::one(), BoolSF::one()), BoolSF::one());
  EXPECT_EQ(inv(BoolSF::one()), BoolSF::one());
  EXPECT_THROW(inv(BoolSF::zero()), DomainError);
  for (auto a : vals)
    for (auto b : vals) {
      EXPECT_EQ(add(a, a), a);
      if (!is_zero(a) || !is_zero(b)) EXPECT_FALSE(is_zero(add(a, b)));
      for (auto c : vals) {
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      }
    }
  EXPECT_EQ(BoolSF::parse("1"), BoolSF::one());
  EXPECT_THROW(BoolSF::parse("2"), InputError);
}

}  // namespace
}  // namespace troppic
