#include <gtest/gtest.h>

#include "frobclass/golden.hpp"
#include "frobclass/io.hpp"
#include "json.hpp"

using namespace frobclass;

namespace {

std::string data(const std::string& name) { return std::string(FROBCLASS_TEST_DATA) + "/" + name; }

// Message of the error raised by fn, or "" if none.
std::string message_of(const std::function<void()>& fn, Errc want = Errc::InvalidInput) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), want) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return "";
}

classify::ClassificationResult run(const classify::ClassificationJob& j) { return classify::classify(j, ff::kDefaultSeed); }

std::string field(const classify::ClassificationResult& r, const std::string& key) {
  for (const auto& [k, v] : io::result_fields(r))
    if (k == key) return v;
  return "<missing>";
}

}  // namespace

TEST(JobFile, Zeta3CaseMatchesBuiltIn) {
  auto a = run(io::load_job(data("zeta3_l3_p13.json")));
  auto b = run(golden::zeta3_job());
  EXPECT_EQ(io::result_fields(a), io::result_fields(b));
  EXPECT_EQ(field(a, "sl_class"), "[[1,1],[0,1]]");
  EXPECT_EQ(field(a, "count"), "18");
  EXPECT_EQ(field(a, "pairing_local"), "3");
}

TEST(JobFile, Sqrt5CaseMatchesBuiltIn) {
  auto a = run(io::load_job(data("sqrt5_l5_p31.json")));
  auto b = run(golden::sqrt5_job());
  EXPECT_EQ(io::result_fields(a), io::result_fields(b));
  EXPECT_EQ(field(a, "global_reduced"), "x^2+13x+1");
  EXPECT_EQ(field(a, "candidate.0.verdict"), "reject");
  EXPECT_EQ(field(a, "candidate.1.verdict"), "accept");
  EXPECT_EQ(field(a, "candidate.1.pairing"), "2");
}

TEST(JobFile, DefaultsAndRationals) {
  // y^2 = x^3 + x/2 + 1 over Q, l = 3 at p = 7
  auto j = io::parse_job(R"({"curve": {"short": ["1/2", 1]}, "l": 3, "prime": {"p": 7, "g": [0, 1]},
                             "global": {"minpoly": [1, 1, 1]}})");
  EXPECT_EQ(j.mode, classify::Mode::Thm1);
  EXPECT_FALSE(j.subgroup_hypothesis_asserted);
  EXPECT_FALSE(j.basis);
  EXPECT_EQ(j.field.degree(), 1);
}

TEST(JobFile, ErrorsNameTheField) {
  EXPECT_NE(message_of([] { io::load_job(data("malformed_curve.json")); }).find("curve.short[1]"), std::string::npos);
  EXPECT_NE(message_of([] { io::parse_job("{"); }).find("JSON"), std::string::npos);
  EXPECT_NE(message_of([] { io::parse_job(R"({"curve": {"short": [1]}})"); }).find("curve.short"), std::string::npos);
  const std::string base =
      R"("field": {"minpoly": [1, 1, 1]}, "curve": {"short": [1, 1]}, "prime": {"p": 7, "g": [-2, 1]}, "global": {"value": [0, 1]})";
  EXPECT_NE(message_of([&] { io::parse_job("{" + base + "}"); }).find("'l'"), std::string::npos);
  EXPECT_NE(message_of([&] { io::parse_job("{" + base + R"(, "l": 3, "mode": "thm9"})"); }).find("mode"),
            std::string::npos);
  EXPECT_NE(message_of([&] { io::parse_job("{" + base + R"(, "l": 4})"); }, Errc::OddPrimeRequired).find("l"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              io::parse_job(R"({"curve": {"short": [1, 1]}, "l": 3, "prime": {"p": 7, "g": [0, 1]}, "global": {}})");
            }).find("global"),
            std::string::npos);
}

TEST(JobFile, BadReductionSurfacesAtClassify) {
  auto j = io::load_job(data("bad_reduction.json"));
  EXPECT_FALSE(message_of([&] { run(j); }, Errc::BadReduction).empty());
}

TEST(Curve, RationalCurveFiles) {
  auto c = io::load_rational_curve(data("curve_y2_x3_x_1.json"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], nf::Rational(1));
  EXPECT_EQ(io::parse_rational_curve(R"({"curve": {"long": [0, -1, 1, 0, "3/4"]}})").size(), 5u);
  EXPECT_NE(message_of([] { io::parse_rational_curve(R"({"long": [1, 2]})"); }).find("curve.long"), std::string::npos);
}

TEST(Output, Formats) {
  auto r = run(golden::zeta3_job());
  const auto text = io::format_result(r, io::Format::Text);
  EXPECT_NE(text.find("sl_class: [[1,1],[0,1]]\n"), std::string::npos);
  EXPECT_NE(text.find("count: 18\n"), std::string::npos);
  EXPECT_NE(io::format_result(r, io::Format::Tsv).find("sl_class\t[[1,1],[0,1]]\n"), std::string::npos);
  auto j = nlohmann::json::parse(io::format_result(r, io::Format::Json));
  EXPECT_EQ(j["count"], 18);
  EXPECT_EQ(j["sl_class"], "[[1,1],[0,1]]");
  EXPECT_EQ(j["candidates"].size(), 2u);
  EXPECT_THROW(io::parse_format("xml"), Error);
}

TEST(ClassTable, SizesAndSplitRows) {
  for (uint64_t l : {3u, 5u, 7u, 11u}) {
    std::istringstream in(io::format_classtable(l, io::Format::Tsv));
    std::string line;
    std::getline(in, line);
    uint64_t total = 0, rows = 0;
    while (std::getline(in, line)) {
      std::vector<std::string> cols;
      std::istringstream ls(line);
      for (std::string c; std::getline(ls, c, '\t');) cols.push_back(c);
      ASSERT_EQ(cols.size(), 6u);
      total += std::stoull(cols[1]);
      ++rows;
      const bool unipotent = cols[2].rfind("U(", 0) == 0;
      EXPECT_EQ(cols[4] == "yes", unipotent) << line;
      EXPECT_EQ(cols[5] != "-", unipotent) << line;
    }
    EXPECT_EQ(total, l * (l * l - 1));
    EXPECT_EQ(rows, l + 4);
  }
  EXPECT_THROW(io::format_classtable(2, io::Format::Tsv), Error);
}
