#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frobclass/ff.hpp"
#include "frobclass/poly.hpp"

using namespace frobclass;
using namespace frobclass::ff;

namespace {

Field ex1_field() { return Field::extension(13, 3, std::vector<uint64_t>{11, 2, 0, 1}); }
Field ex2_field() { return Field::extension_signed(31, {28, 7, 0, 0, 0, 1}); }

// x^n by n - 1 plain multiplications; independent of square-and-multiply.
Elem naive_power(const Elem& x, uint64_t n) {
  Elem r = x.field().one();
  for (uint64_t i = 0; i < n; ++i) r = r * x;
  return r;
}

}  // namespace

TEST(ExtFieldCreate, FixedModulusAccepted) {
  Field f = ex1_field();
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.characteristic(), 13u);
  EXPECT_EQ(f.modulus(), (std::vector<uint64_t>{11, 2, 0, 1}));
  EXPECT_EQ(f.order().to_u64(), 2197u);
}

TEST(ExtFieldCreate, DegreeOneIsPrimeField) {
  Field f = Field::extension(13, 1);
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.modulus(), (std::vector<uint64_t>{0, 1}));
  EXPECT_EQ(f.order().to_u64(), 13u);
}

TEST(ExtFieldCreate, Errors) {
  try {
    Field::extension_signed(13, {-1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReducibleModulus);
  }
  try {
    Field::extension(15, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPrime);
  }
  try {
    Field::extension(13, 3, std::vector<uint64_t>{1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
}

TEST(ExtFieldCreate, SeededSearchIsDeterministic) {
  Field a = Field::extension(31, 5, std::nullopt, 7);
  Field b = Field::extension(31, 5, std::nullopt, 7);
  EXPECT_EQ(a.modulus(), b.modulus());
  EXPECT_TRUE(is_irreducible(Poly::from_residues(Field::prime(31), a.modulus())));
}

TEST(FrobeniusPower, FixesPrimeSubfield) {
  Field f = ex1_field();
  for (int64_t c = 0; c < 13; ++c) EXPECT_EQ(frobenius_power(f.from_int(c), 13), f.from_int(c));
}

TEST(FrobeniusPower, MatchesNaivePowerOnGenerators) {
  Field f1 = ex1_field();
  EXPECT_EQ(frobenius_power(f1.generator(), 13), naive_power(f1.generator(), 13));
  Field f2 = ex2_field();
  EXPECT_EQ(frobenius_power(f2.generator(), 31), naive_power(f2.generator(), 31));
  EXPECT_EQ(frobenius_power(f2.generator(), 961), naive_power(f2.generator(), 961));
  // alpha^13 is a root of the modulus different from alpha.
  EXPECT_NE(frobenius_power(f1.generator(), 13), f1.generator());
}

TEST(FrobeniusPower, RejectsNonPowers) {
  Field f = ex1_field();
  EXPECT_THROW(frobenius_power(f.generator(), 26), Error);
  EXPECT_THROW(frobenius_power(f.generator(), 0), Error);
}

TEST(FieldAxioms, RandomSamples) {
  std::mt19937_64 rng(1);
  for (const Field& f : {Field::prime(13), ex1_field(), ex2_field(), Field::extension(7, 6, std::nullopt, 3),
                         Field::prime(2305843009213693951ULL), Field::extension(1152921504606847009ULL, 3)}) {
    const uint64_t p = f.characteristic();
    for (int i = 0; i < 1000; ++i) {
      Elem x = f.random(rng), y = f.random(rng), z = f.random(rng);
      ASSERT_EQ((x + y) * z, x * z + y * z);
      ASSERT_EQ(x * y, y * x);
      if (!x.is_zero()) ASSERT_TRUE((x * x.inv()).is_one());
      ASSERT_EQ(frobenius_power(x * y, p), frobenius_power(x, p) * frobenius_power(y, p));
      ASSERT_EQ(frobenius_power(x + y, p), frobenius_power(x, p) + frobenius_power(y, p));
    }
    for (int i = 0; i < 20; ++i) {
      Elem x = f.random(rng);
      ASSERT_EQ(x.pow(f.order()), x);
    }
  }
}

TEST(MuLDlog, Examples) {
  Field f13 = Field::prime(13);
  EXPECT_EQ(mu_l_dlog(f13.from_int(3), f13.from_int(9), 3), 2u);
  EXPECT_EQ(mu_l_dlog(f13.from_int(3), f13.one(), 3), 0u);
  Field f31 = Field::prime(31);
  EXPECT_EQ(mu_l_dlog(f31.from_int(8), f31.from_int(2), 5), 2u);
}

TEST(MuLDlog, Errors) {
  Field f13 = Field::prime(13);
  try {
    mu_l_dlog(f13.from_int(3), f13.from_int(2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotRootOfUnity);
  }
  try {
    mu_l_dlog(f13.one(), f13.one(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadOrder);
  }
}

TEST(MuLDlog, RoundTripsAllExponents) {
  for (auto [p, l] : {std::pair<uint64_t, uint64_t>{13, 3}, {31, 5}, {29, 7}, {23, 11}}) {
    Field f = Field::prime(p);
    Elem zeta = f.from_int(1);
    for (uint64_t g = 2; g < p; ++g) {
      Elem c = f.from_int(static_cast<int64_t>(g)).pow((p - 1) / l);
      if (!c.is_one()) {
        zeta = c;
        break;
      }
    }
    for (uint64_t e = 0; e < l; ++e) EXPECT_EQ(mu_l_dlog(zeta, zeta.pow(e), l), e);
  }
}

TEST(PolyRoots, Examples) {
  Field f13 = Field::prime(13);
  auto r = poly_roots(Poly::from_signed(f13, std::vector<int64_t>{1, 1, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], f13.from_int(3));
  EXPECT_EQ(r[1], f13.from_int(9));

  Field f31 = Field::prime(31);
  r = poly_roots(Poly::from_signed(f31, std::vector<int64_t>{1, 13, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], f31.from_int(2));
  EXPECT_EQ(r[1], f31.from_int(16));

  EXPECT_TRUE(poly_roots(Poly::from_signed(Field::prime(3), std::vector<int64_t>{1, 0, 1})).empty());
  EXPECT_THROW(poly_roots(Poly(f13)), Error);
}

TEST(PolyRoots, LargeFieldPathAgreesWithExhaustion) {
  // F_{13^5} has 371293 elements, so poly_roots takes the gcd + splitting path.
  Field big = Field::extension(13, 5, std::nullopt, 11);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Elem> planted;
    Poly f = Poly::constant(big.one());
    for (int i = 0; i < 4; ++i) {
      Elem r = big.random(rng);
      planted.push_back(r);
      f = f * (Poly::x(big) - Poly::constant(r));
    }
    // Irreducible quadratic factor contributes no roots.
    Elem nonsq = big.random_nonzero(rng);
    while (is_square(nonsq)) nonsq = big.random_nonzero(rng);
    f = f * (Poly::monomial(big.one(), 2) - Poly::constant(nonsq));
    auto roots = poly_roots(f, 99);
    std::set<std::vector<uint64_t>> want, got;
    for (auto& e : planted) want.insert(e.coeffs());
    for (auto& e : roots) got.insert(e.coeffs());
    EXPECT_EQ(want, got);
    for (auto& e : roots) EXPECT_TRUE(f.eval(e).is_zero());
    EXPECT_LE(roots.size(), static_cast<size_t>(f.degree()));
  }
}

TEST(PolyRoots, ExhaustiveOverSmallExtension) {
  Field f = ex1_field();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Elem> c;
    for (int i = 0; i < 5; ++i) c.push_back(f.random(rng));
    c.push_back(f.one());
    Poly p(f, c);
    auto roots = poly_roots(p);
    size_t brute = 0;
    for (uint64_t i = 0; i < 2197; ++i) brute += p.eval(f.from_index(i)).is_zero();
    EXPECT_EQ(roots.size(), brute);
  }
}

TEST(IsSquareModL, Examples) {
  EXPECT_TRUE(is_square_mod_l(4, 5));
  EXPECT_FALSE(is_square_mod_l(2, 5));
  for (uint64_t l : {3, 5, 7, 11}) EXPECT_TRUE(is_square_mod_l(1, l));
  EXPECT_THROW(is_square_mod_l(0, 5), Error);
}

TEST(IsSquareModL, AgreesWithEnumeration) {
  for (uint64_t l : {3, 5, 7, 11, 13}) {
    std::set<uint64_t> sq;
    for (uint64_t k = 1; k < l; ++k) sq.insert(k * k % l);
    for (uint64_t u = 1; u < l; ++u) EXPECT_EQ(is_square_mod_l(u, l), sq.count(u) == 1);
    EXPECT_EQ(ResidueSubgroup::squares(l).elements(), std::vector<uint64_t>(sq.begin(), sq.end()));
  }
}

TEST(Sqrt, SquaresHaveRoots) {
  std::mt19937_64 rng(3);
  for (const Field& f : {Field::prime(13), Field::prime(17), ex1_field(), ex2_field(), Field::extension(41, 4, std::nullopt, 2)}) {
    for (int i = 0; i < 200; ++i) {
      Elem x = f.random(rng);
      auto r = sqrt(x * x, rng);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, x * x);
    }
  }
}

TEST(Factor, ReconstructsProduct) {
  std::mt19937_64 rng(4);
  Field f = Field::prime(101);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Elem> c;
    for (int i = 0; i < 12; ++i) c.push_back(f.random(rng));
    c.push_back(f.one());
    Poly p(f, c);
    if (gcd(p, p.derivative()).degree() != 0) continue;
    auto parts = factor_squarefree(p, rng);
    Poly prod = Poly::constant(f.one());
    for (auto& q : parts) {
      EXPECT_TRUE(is_irreducible(q));
      prod = prod * q;
    }
    EXPECT_EQ(prod, p);
  }
}
