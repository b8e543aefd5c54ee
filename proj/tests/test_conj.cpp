#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "frobclass/conj.hpp"

using namespace frobclass;
using namespace frobclass::conj;

namespace {

// 2x2 determinant straight from the formula, independent of elimination.
uint64_t det2(const Matrix& m) {
  const uint64_t l = m.l();
  return (m.at(0, 0) * m.at(1, 1) % l + l - m.at(0, 1) * m.at(1, 0) % l) % l;
}

// 3x3 determinant by cofactor expansion.
uint64_t det3(const std::vector<std::vector<uint64_t>>& c, uint64_t l) {
  auto at = [&](int i, int j) { return static_cast<int64_t>(c[static_cast<size_t>(j)][static_cast<size_t>(i)]); };
  int64_t d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
              at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  return ff::reduce_signed(d, l);
}

}  // namespace

TEST(Matrix, Basics) {
  Matrix a = Matrix::of2(5, 1, 2, 3, 4);
  EXPECT_EQ(a.det(), det2(a));
  EXPECT_EQ(a * a.inverse(), Matrix::identity(5, 2));
  EXPECT_EQ(a.to_string(), "[[1,2],[3,4]]");
  EXPECT_THROW(Matrix::of2(5, 1, 2, 2, 4).inverse(), Error);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Matrix m = Matrix::of2(7, rng() % 7, rng() % 7, rng() % 7, rng() % 7);
    EXPECT_EQ(m.det(), det2(m));
  }
}

TEST(GlClassOf, Examples) {
  auto d = gl_class_of(Matrix::of2(3, 1, 1, 0, 1));
  EXPECT_EQ(d.kind, Kind::Nonsemisimple);
  EXPECT_EQ(d.trace, 2u);
  EXPECT_EQ(gl_class_of(Matrix::of2(5, 0, -1, 1, 0)).kind, Kind::SplitSemisimple);
  EXPECT_EQ(gl_class_of(Matrix::scalar(5, 2, 2)).kind, Kind::Scalar);
  EXPECT_EQ(gl_class_of(Matrix::of2(3, 0, -1, 1, 0)).kind, Kind::NonsplitSemisimple);
  try {
    gl_class_of(Matrix::of2(5, 1, 2, 2, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
}

TEST(ClassNames, Stable) {
  EXPECT_EQ(gl_class_of(Matrix::of2(3, 1, 1, 0, 1)).name(), "U(+1,qr)");
  EXPECT_EQ(gl_class_of(Matrix::of2(3, 1, 2, 0, 1)).name(), "U(+1,nqr)");
  EXPECT_EQ(gl_class_of(Matrix::of2(5, -1, -2, 0, -1)).name(), "U(-1,nqr)");
  EXPECT_EQ(gl_class_of(Matrix::of2(5, 0, -1, 1, 0)).name(), "S(0,1)");
  EXPECT_EQ(gl_class_of(Matrix::scalar(5, 2, 4)).name(), "Z(4)");
  EXPECT_EQ(gl_class_of(Matrix::of2(5, 2, 1, 0, 2)).name(), "U(2)");
}

TEST(ClassSplits, Examples) {
  EXPECT_TRUE(class_splits(Matrix::of2(3, 1, 1, 0, 1)));
  EXPECT_FALSE(class_splits(Matrix::identity(3, 2)));
  EXPECT_FALSE(class_splits(Matrix::of2(5, 0, -1, 1, 0)));
  try {
    class_splits(Matrix::of2(5, 2, 0, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSL2);
  }
}

TEST(ClassSplits, AgreesWithCentralizerEnumeration) {
  for (uint64_t l : {3, 5, 7}) {
    for (const auto& s : enumerate_sl2(l)) ASSERT_EQ(class_splits(s), class_splits_brute(s)) << s.to_string();
  }
}

TEST(SlConjugate, Examples) {
  EXPECT_FALSE(sl_conjugate(Matrix::of2(3, 1, 1, 0, 1), Matrix::of2(3, 1, 2, 0, 1)));
  Matrix a = Matrix::of2(5, 2, 1, 3, 2);
  EXPECT_TRUE(sl_conjugate(a, a));
  EXPECT_TRUE(sl_conjugate(Matrix::of2(5, 1, 1, 0, 1), Matrix::of2(5, 1, 4, 0, 1)));
  EXPECT_TRUE(gl_conjugate(Matrix::of2(3, 1, 1, 0, 1), Matrix::of2(3, 1, 2, 0, 1)));
}

TEST(SlConjugate, FastPathMatchesExhaustive) {
  std::mt19937_64 rng(2);
  for (uint64_t l : {3, 5, 7}) {
    auto g = enumerate_sl2(l);
    for (int i = 0; i < 300; ++i) {
      const Matrix& a = g[rng() % g.size()];
      const Matrix& b = g[rng() % g.size()];
      const bool slow = sl_conjugate(a, b);
      ASSERT_EQ(slow, sl_conjugate_fast(a, b));
      ASSERT_EQ(slow, sl_conjugate(b, a));
      if (slow) ASSERT_TRUE(gl_conjugate(a, b));
    }
  }
}

TEST(ClassTable, SizesAndCounts) {
  // Known class counts of SL_2(F_l): l + 4.
  for (uint64_t l : {3, 5, 7, 11}) {
    auto rows = sl2_class_representatives(l);
    uint64_t total = 0;
    for (const auto& r : rows) total += r.size;
    EXPECT_EQ(total, l * (l * l - 1));
    EXPECT_EQ(rows.size(), l + 4);
  }
  try {
    sl2_class_representatives(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddPrimeRequired);
  }
}

TEST(ClassTable, RepresentativesAreInequivalent) {
  auto rows = sl2_class_representatives(5);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j) EXPECT_EQ(sl_conjugate(rows[i].rep, rows[j].rep), i == j);
}

TEST(SplittingData, Examples) {
  auto s = splitting_data_general(Matrix::of2(5, 1, 1, 0, 1));
  EXPECT_EQ(s.m, 2u);
  EXPECT_EQ(s.h.elements(), (std::vector<uint64_t>{1, 4}));
  for (uint64_t l : {3, 5, 7}) {
    for (size_t n : {2, 3}) {
      auto t = splitting_data_general(Matrix::identity(l, n));
      EXPECT_EQ(t.m, 1u);
      EXPECT_EQ(t.h.order(), l - 1);
    }
  }
  Matrix u3(7, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  auto r = splitting_data_general(u3);
  EXPECT_EQ(r.m, 3u);
  EXPECT_EQ(r.h.elements(), (std::vector<uint64_t>{1, 6}));
  EXPECT_THROW(splitting_data_general(Matrix(7, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Error);
  EXPECT_THROW(splitting_data_general(Matrix::identity(11, 3)), Error);
}

TEST(SplittingData, NTwoMatchesClassSplits) {
  for (uint64_t l : {3, 5, 7}) {
    for (const auto& s : enumerate_sl2(l)) {
      auto d = splitting_data_general(s);
      EXPECT_EQ(d.m, class_splits(s) ? 2u : 1u);
      // (F_l^x)^2 is inside H.
      for (uint64_t u = 1; u < l; ++u) EXPECT_TRUE(d.h.contains(u * u % l));
    }
  }
}

TEST(SplittingData, NThreeCubesInsideH) {
  std::mt19937_64 rng(3);
  for (uint64_t l : {3, 5, 7}) {
    int done = 0;
    while (done < 20) {
      Matrix m(l, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.set(i, j, static_cast<int64_t>(rng() % l));
      if (m.det() != 1) continue;
      auto d = splitting_data_general(m);
      for (uint64_t u = 1; u < l; ++u) EXPECT_TRUE(d.h.contains(u * u % l * u % l));
      EXPECT_EQ(d.h.index(), d.m);
      ++done;
    }
  }
}

TEST(ExteriorForm, Properties) {
  EXPECT_EQ(exterior_form_eval({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 7), 1u);
  EXPECT_EQ(exterior_form_eval({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, 7), 0u);
  EXPECT_THROW(exterior_form_eval({{1, 2}, {0, 1, 0}}, 7), Error);
  std::mt19937_64 rng(4);
  const uint64_t l = 7;
  for (int t = 0; t < 500; ++t) {
    std::vector<std::vector<uint64_t>> v(3, std::vector<uint64_t>(3));
    for (auto& col : v)
      for (auto& x : col) x = rng() % l;
    Matrix a(l, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) a.set(i, j, static_cast<int64_t>(rng() % l));
    std::vector<std::vector<uint64_t>> av(3, std::vector<uint64_t>(3, 0));
    for (size_t c = 0; c < 3; ++c)
      for (size_t i = 0; i < 3; ++i)
        for (size_t k = 0; k < 3; ++k) av[c][i] = (av[c][i] + a.at(i, k) * v[c][k]) % l;
    EXPECT_EQ(exterior_form_eval(av, l), det3(av, l));
    EXPECT_EQ(exterior_form_eval(av, l), a.det() * exterior_form_eval(v, l) % l);
  }
}

TEST(Candidates, SmallestNonSquare) {
  EXPECT_EQ(smallest_nonsquare(3), 2u);
  EXPECT_EQ(smallest_nonsquare(5), 2u);
  EXPECT_EQ(smallest_nonsquare(7), 3u);
  EXPECT_EQ(smallest_nonsquare(11), 2u);
  EXPECT_EQ(unipotent_candidate(5, 4, 2), Matrix::of2(5, 4, 3, 0, 4));
}
