#include <gtest/gtest.h>

#include <random>

#include "frobclass/nf.hpp"

using namespace frobclass;
using namespace frobclass::nf;

namespace {

std::vector<int64_t> mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

NfElem random_elem(const NumberField& f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i)
    c.emplace_back(static_cast<int64_t>(rng() % 41) - 20, static_cast<int64_t>(rng() % 3) * 2 + 1);
  return NfElem(f, c);
}

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) / Rational(-1, 4), Rational(-2));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(4), Error);
}

TEST(NfCreate, Examples) {
  EXPECT_EQ(NumberField::create({1, 1, 1}).degree(), 2);
  EXPECT_EQ(NumberField::create({-5, 0, 1}).degree(), 2);
  try {
    NumberField::create({-1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Reducible);
  }
  try {
    NumberField::create({1, 0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonMonic);
  }
}

TEST(Irreducibility, KnownCases) {
  // Irreducible over Q but reducible modulo every prime.
  EXPECT_TRUE(is_irreducible_over_q({1, 0, 0, 0, 1}));
  EXPECT_TRUE(is_irreducible_over_q({1, 0, -10, 0, 1}));
  // Cyclotomic polynomials up to Phi_11.
  EXPECT_TRUE(is_irreducible_over_q({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(is_irreducible_over_q(std::vector<int64_t>(11, 1)));
  EXPECT_TRUE(is_irreducible_over_q({1, 0, -1, 0, 1}));                // Phi_12
  EXPECT_TRUE(is_irreducible_over_q({1, -1, 0, 1, -1, 1, 0, -1, 1}));  // Phi_15
  // Products without rational roots.
  EXPECT_FALSE(is_irreducible_over_q(mul({1, 0, 1}, {2, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_q(mul({1, 1, 1}, {1, 1, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_q(mul({1, 0, 0, 0, 1}, {3, 1, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_q(mul({-2, 0, 0, 1}, {-3, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_q({6, -5, 1}));
}

TEST(Irreducibility, RandomProductsAreReducible) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto rnd = [&](int deg) {
      std::vector<int64_t> p;
      for (int i = 0; i < deg; ++i) p.push_back(static_cast<int64_t>(rng() % 7) - 3);
      p.push_back(1);
      return p;
    };
    auto f = mul(rnd(2 + static_cast<int>(rng() % 2)), rnd(2 + static_cast<int>(rng() % 3)));
    EXPECT_FALSE(is_irreducible_over_q(f));
  }
}

TEST(PrimeDatum, Examples) {
  NumberField z3 = NumberField::create({1, 1, 1});
  PrimeDatum p13 = prime_datum(z3, 13, {-3, 1});
  EXPECT_EQ(p13.q, 13u);
  EXPECT_EQ(p13.alpha_image, p13.residue.from_int(3));
  NumberField s5 = NumberField::create({-5, 0, 1});
  PrimeDatum p31 = prime_datum(s5, 31, {-6, 1});
  EXPECT_EQ(p31.q, 31u);
  // The generator (1 + 5 sqrt5)/2 lies in this prime.
  NfElem gen(s5, {Rational(1, 2), Rational(5, 2)});
  EXPECT_TRUE(reduce_element(gen, p31).is_zero());
  PrimeDatum p2 = prime_datum(z3, 2, {1, 1, 1});
  EXPECT_EQ(p2.q, 4u);
  EXPECT_EQ(p2.f, 2);
  try {
    prime_datum(z3, 13, {-4, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAFactor);
  }
  try {
    prime_datum(z3, 13, {-1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReducibleResiduePoly);
  }
  EXPECT_THROW(prime_datum(z3, 15, {-3, 1}), Error);
}

TEST(Reduce, Examples) {
  NumberField z3 = NumberField::create({1, 1, 1});
  PrimeDatum p13 = prime_datum(z3, 13, {-3, 1});
  EXPECT_EQ(reduce_element(NfElem::alpha(z3), p13), p13.residue.from_int(3));
  try {
    reduce_element(NfElem(z3, {Rational(1, 13)}), p13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DenominatorDividesP);
  }
  EXPECT_EQ(reduce_poly({NfElem::from_int(z3, 7)}, p13), ff::Poly::constant(p13.residue.from_int(7)));

  NumberField s5 = NumberField::create({-5, 0, 1});
  PrimeDatum p31 = prime_datum(s5, 31, {-6, 1});
  NfElem c(s5, {Rational(1, 2), Rational(-1, 2)});
  EXPECT_EQ(reduce_element(c, p31), p31.residue.from_int(13));
  NfElem one = NfElem::from_int(s5, 1);
  ff::Poly m = reduce_poly({one, c, one}, p31);
  EXPECT_EQ(m, ff::Poly::from_signed(p31.residue, std::vector<int64_t>{1, 13, 1}));
  try {
    reduce_poly({NfElem(s5, {Rational(1, 31)}), one}, p31);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DenominatorDividesP);
  }
}

TEST(Reduce, RingHomomorphism) {
  std::mt19937_64 rng(6);
  struct Case {
    std::vector<int64_t> minpoly;
    uint64_t p;
    std::vector<int64_t> g;
  };
  std::vector<Case> cases = {{{1, 1, 1}, 13, {-3, 1}},
                             {{1, 1, 1}, 2, {1, 1, 1}},
                             {{-5, 0, 1}, 31, {-6, 1}},
                             {{1, 1, 1, 1, 1}, 11, {-3, 1}},
                             {{1, 1, 1, 1, 1}, 19, {1, -4, 1}}};
  for (const auto& c : cases) {
    NumberField f = NumberField::create(c.minpoly);
    PrimeDatum pd = prime_datum(f, c.p, c.g);
    EXPECT_TRUE(reduce_poly([&] {
                  std::vector<NfElem> m;
                  for (int64_t v : c.minpoly) m.push_back(NfElem::from_int(f, v));
                  return m;
                }(),
                            pd)
                    .eval(reduce_element(NfElem::alpha(f), pd))
                    .is_zero());
    for (int i = 0; i < 500; ++i) {
      NfElem a = random_elem(f, rng), b = random_elem(f, rng);
      ASSERT_EQ(reduce_element(a + b, pd), reduce_element(a, pd) + reduce_element(b, pd));
      ASSERT_EQ(reduce_element(a * b, pd), reduce_element(a, pd) * reduce_element(b, pd));
    }
  }
}

TEST(GlobalDatum, Validation) {
  NumberField z3 = NumberField::create({1, 1, 1});
  NfElem z = NfElem::alpha(z3);
  EXPECT_NO_THROW(GlobalPairingDatum::from_value(z, 3));
  EXPECT_THROW(GlobalPairingDatum::from_value(NfElem::from_int(z3, 1), 3), Error);
  EXPECT_THROW(GlobalPairingDatum::from_value(z + z, 3), Error);
  // Reduced value is a cube root of unity at a prime with q = 1 mod 3.
  PrimeDatum p7 = prime_datum(z3, 7, {-2, 1});
  EXPECT_TRUE(reduce_element(z, p7).pow(3).is_one());

  NumberField s5 = NumberField::create({-5, 0, 1});
  NfElem one = NfElem::from_int(s5, 1);
  NfElem c(s5, {Rational(1, 2), Rational(-1, 2)});
  EXPECT_NO_THROW(GlobalPairingDatum::from_minpoly({one, c, one}, 5));
  EXPECT_THROW(GlobalPairingDatum::from_minpoly({one, c, one, one}, 5), Error);
}

TEST(ReducePoly, SignOfSqrtFiveMatters) {
  NumberField s5 = NumberField::create({-5, 0, 1});
  PrimeDatum p31 = prime_datum(s5, 31, {-6, 1});
  NfElem one = NfElem::from_int(s5, 1);
  ff::Field f31 = ff::Field::prime(31);
  // (1 - sqrt5)/2 = 2 cos(2 pi / 5) with the minus sign: x^2 + 13x + 1
  NfElem minus(s5, {Rational(1, 2), Rational(-1, 2)});
  EXPECT_EQ(reduce_poly({one, minus, one}, p31), ff::Poly::from_signed(f31, std::vector<int64_t>{1, 13, 1}));
  // the other sign gives x^2 + 19x + 1, whose roots are the other pair {4, 8}
  NfElem plus(s5, {Rational(1, 2), Rational(1, 2)});
  ff::Poly other = reduce_poly({one, plus, one}, p31);
  EXPECT_EQ(other, ff::Poly::from_signed(f31, std::vector<int64_t>{1, 19, 1}));
  for (int64_t z : {4, 8}) EXPECT_TRUE(other.eval(f31.from_int(z)).is_zero());
  for (int64_t z : {2, 16}) EXPECT_FALSE(other.eval(f31.from_int(z)).is_zero());
}

TEST(OrbitPolynomial, MatchesSqrt5Case) {
  ff::Field f31 = ff::Field::prime(31);
  // Roots {2, 16} of x^2 + 13x + 1 are 2^1 and 2^4 with 2 of order 5.
  EXPECT_EQ(orbit_polynomial(f31.from_int(2), {1, 4}), ff::Poly::from_signed(f31, std::vector<int64_t>{1, 13, 1}));
}
