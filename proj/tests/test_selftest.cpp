#include <gtest/gtest.h>

#include "frobclass/selftest.hpp"

using namespace frobclass;
using namespace frobclass::selftest;

namespace {

std::string failures(const std::vector<SuiteResult>& rs) {
  std::string s;
  for (const auto& r : rs)
    for (const auto& f : r.failures) s += r.name + ": " + f + "\n";
  return s;
}

}  // namespace

TEST(SelfTest, DefaultSeedPasses) {
  Options o;
  auto rs = run_all(o);
  EXPECT_EQ(rs.size(), 5u);
  EXPECT_EQ(failures(rs), "");
}

TEST(SelfTest, AlternateSeedsPass) {
  for (uint64_t seed : {1ULL, 0xdeadbeefULL, 987654321ULL}) {
    Options o;
    o.seed = seed;
    EXPECT_EQ(failures(run_all(o)), "") << "seed " << seed;
  }
}

TEST(SelfTest, FlippedPairingSignFailsPairingSuite) {
  Options o;
  o.pair = faulty_pairing_sign();
  EXPECT_FALSE(pairing_suite(o).passed());
  EXPECT_TRUE(conj_suite(o).passed());
}

TEST(SelfTest, PairingLawsOnEveryFixture) {
  auto st = pairing_laws({3, 5, 7, 11}, 80, 42);
  EXPECT_EQ(st.trials, 80u);
  EXPECT_EQ(st.violations, 0u) << (st.examples.empty() ? "" : st.examples[0]);
  for (uint64_t l : {3u, 5u, 7u, 11u}) {
    auto f = pairing_fixture(l, 42);
    EXPECT_EQ(f.basis.tf.curve.field().characteristic() % l, 1u);
  }
}

TEST(SelfTest, NonSquareFlipSmall) {
  auto st = nonsquare_flip({3, 5, 7}, 9, 7);
  EXPECT_EQ(st.agree, st.instances) << (st.examples.empty() ? "" : st.examples[0]);
}

TEST(SelfTest, ConjExhaustiveSmall) {
  for (uint64_t l : {3u, 5u}) {
    auto st = conj_exhaustive(l);
    EXPECT_TRUE(st.failures.empty()) << st.failures[0];
    EXPECT_GT(st.checks, l * (l * l - 1));
  }
  EXPECT_TRUE(conj_n3_unipotent().failures.empty());
}
