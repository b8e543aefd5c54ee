#include <gtest/gtest.h>

#include "frobclass/scan.hpp"

using namespace frobclass;
using namespace frobclass::scan;

namespace {

ScanConfig base(std::vector<uint64_t> ls, size_t primes) {
  ScanConfig c;
  c.curve = {nf::Rational(1), nf::Rational(1)};
  c.ls = std::move(ls);
  c.primes = primes;
  return c;
}

// TSV without the timing column.
std::string untimed(const ScanOutput& out) {
  std::string s;
  for (auto r : out.rows) {
    r.micros = 0;
    s += tsv_row(r);
  }
  return s;
}

}  // namespace

TEST(SelectPrimes, RuleAndBadReduction) {
  const std::vector<nf::Rational> curve{nf::Rational(1), nf::Rational(1)};
  auto ps = select_primes(curve, 3, 12);
  ASSERT_EQ(ps.size(), 12u);
  // 31 divides the discriminant of y^2 = x^3 + x + 1
  for (auto [p, r] : ps) {
    EXPECT_EQ(p % 3, 1u);
    EXPECT_NE(p, 31u);
    EXPECT_EQ((r * r + r + 1) % p, 0u);
    for (uint64_t s = 0; s < r; ++s) EXPECT_NE((s * s + s + 1) % p, 0u);
  }
  EXPECT_EQ(ps[0], std::make_pair(uint64_t{7}, uint64_t{2}));
  EXPECT_EQ(ps[2].first, 19u);
}

TEST(Scan, RowsAndSummary) {
  auto out = run_scan(base({3, 5}, 20));
  ASSERT_EQ(out.rows.size(), 40u);
  ASSERT_EQ(out.summary.size(), 2u);
  for (size_t i = 0; i < out.rows.size(); ++i) {
    const auto& r = out.rows[i];
    EXPECT_TRUE(r.error.empty()) << tsv_row(r);
    EXPECT_EQ(r.q_mod_l, 1u);
    if (i % 20) EXPECT_GT(r.p, out.rows[i - 1].p);
    // split rows and scalars of determinant 1 carry an SL_2 class
    const bool scalar = r.gl_class.rfind("Z(", 0) == 0;
    EXPECT_EQ(r.path == "pairing" || scalar, r.sl_class != "-") << tsv_row(r);
  }
  EXPECT_EQ(out.summary[0].rows, 20u);
  EXPECT_NE(format_summary(out, false).find("# 5\t20\t"), std::string::npos);
}

TEST(Scan, DeterministicAcrossThreads) {
  auto c = base({3, 7}, 15);
  auto a = run_scan(c);
  c.threads = 4;
  auto b = run_scan(c);
  EXPECT_EQ(untimed(a), untimed(b));
}

TEST(Scan, SeedDoesNotChangeClasses) {
  auto c = base({5}, 15);
  auto a = run_scan(c);
  c.seed = 12345;
  EXPECT_EQ(untimed(a), untimed(run_scan(c)));
}

TEST(Scan, NonSquareExponentSwapsSplitLabels) {
  auto c = base({5}, 30);
  auto a = run_scan(c);
  c.global_exponent = 2;
  auto b = run_scan(c);
  size_t split = 0;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].path != "pairing") {
      EXPECT_EQ(a.rows[i].label, b.rows[i].label);
      continue;
    }
    ++split;
    EXPECT_NE(a.rows[i].label, b.rows[i].label);
  }
  EXPECT_GT(split, 0u);
}

TEST(Scan, ConfigErrorsBeforeWork) {
  EXPECT_THROW(run_scan(base({3}, 0)), Error);
  EXPECT_THROW(run_scan(base({4}, 5)), Error);
  EXPECT_THROW(run_scan(base({13}, 5)), Error);
  auto c = base({3}, 5);
  c.global_exponent = 3;
  EXPECT_THROW(run_scan(c), Error);
  c = base({13}, 3);
  c.max_l = 13;
  EXPECT_EQ(run_scan(c).rows.size(), 3u);
}

TEST(Chebotarev, Counting) {
  std::vector<ScanRow> rows(4);
  for (auto& r : rows) {
    r.l = 3;
    r.path = "pairing";
  }
  rows[0].label = "U(+1,qr)";
  rows[1].label = "U(-1,nqr)";
  rows[2].label = "U(+1,nqr)";
  rows[3].path = "charpoly";
  auto c = chebotarev(rows, 3);
  EXPECT_EQ(c.split, 3u);
  EXPECT_EQ(c.qr, 1u);
  EXPECT_EQ(c.nqr, 2u);
  EXPECT_TRUE(c.within);
  EXPECT_EQ(job_seed(1, 3, 7), job_seed(1, 3, 7));
  EXPECT_NE(job_seed(1, 3, 7), job_seed(1, 3, 13));
}
