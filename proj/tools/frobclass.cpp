// frobclass: classify Frobenius elements from the command line.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobclass/io.hpp"
#include "frobclass/scan.hpp"
#include "frobclass/selftest.hpp"

using namespace frobclass;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

uint64_t seed_from_env(uint64_t fallback) {
  const char* s = std::getenv("FROBCLASS_SEED");
  if (!s || !*s) return fallback;
  try {
    size_t pos = 0;
    const uint64_t v = std::stoull(s, &pos, 0);
    if (pos == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  fail(Errc::InvalidInput, std::string("FROBCLASS_SEED is not an integer: ") + s);
}

int report(const Error& e) {
  std::cerr << "frobclass: " << e.what() << "\n";
  return e.code() == Errc::Inconclusive || e.code() == Errc::Ambiguous ? kInconclusive : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius conjugacy classes in mod-l Galois representations of elliptic curves"};
  app.require_subcommand(1);

  std::optional<uint64_t> seed_opt;
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", seed_opt, "random seed (default: FROBCLASS_SEED or built-in)"); };

  auto* cls = app.add_subcommand("classify", "classify Frobenius for one job file");
  std::string job_path, format = "text";
  cls->add_option("--job", job_path, "job file (JSON)")->required();
  cls->add_option("--format", format, "text | tsv | json");
  add_seed(cls);

  auto* scn = app.add_subcommand("scan", "classify over many primes of Q(zeta_l)");
  std::string curve_path, scan_format = "tsv";
  std::vector<uint64_t> ls{3, 5, 7, 11};
  size_t primes = 100;
  unsigned threads = 1;
  uint64_t exponent = 1, max_l = 11;
  scn->add_option("--curve", curve_path, "curve file: {\"short\": [a,b]} or {\"long\": [a1,a2,a3,a4,a6]}")->required();
  scn->add_option("--l", ls, "comma-separated odd primes")->delimiter(',');
  scn->add_option("--primes", primes, "primes per l");
  scn->add_option("--threads", threads, "worker threads");
  scn->add_option("--format", scan_format, "tsv | json");
  scn->add_option("--global-exponent", exponent, "global pairing value is zeta_l^e");
  scn->add_option("--max-l", max_l, "override the cap on l");
  add_seed(scn);

  auto* st = app.add_subcommand("selftest", "run the internal invariant suites");
  std::string fault;
  int scale = 1;
  st->add_option("--inject-fault", fault, "test hook: pairing-sign");
  st->add_option("--scale", scale, "multiply random trial counts");
  add_seed(st);

  auto* tab = app.add_subcommand("classtable", "list the conjugacy classes of SL_2(F_l)");
  uint64_t table_l = 0;
  std::string table_format = "tsv";
  tab->add_option("--l", table_l, "odd prime <= 11")->required();
  tab->add_option("--format", table_format, "tsv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    const uint64_t seed = seed_opt ? *seed_opt : seed_from_env(ff::kDefaultSeed);

    if (*cls) {
      const auto fmt = io::parse_format(format);
      const auto job = io::load_job(job_path);
      const auto r = classify::classify(job, seed);
      std::cout << io::format_result(r, fmt);
      return kOk;
    }

    if (*scn) {
      if (scan_format != "tsv" && scan_format != "json") fail(Errc::InvalidInput, "--format must be tsv or json");
      const bool json = scan_format == "json";
      scan::ScanConfig cfg;
      cfg.curve = io::load_rational_curve(curve_path);
      cfg.ls = ls;
      cfg.primes = primes;
      cfg.threads = threads;
      cfg.seed = seed;
      cfg.global_exponent = exponent;
      cfg.max_l = max_l;
      const auto out = scan::run_scan(cfg);
      if (!json) std::cout << scan::tsv_header();
      for (const auto& row : out.rows) std::cout << (json ? scan::json_row(row) : scan::tsv_row(row));
      std::cout << scan::format_summary(out, json);
      for (const auto& c : out.chebotarev)
        if (!c.within)
          std::cerr << "frobclass: warning: split labels at l=" << c.l << " deviate from 1/2 (z=" << c.z << ")\n";
      return kOk;
    }

    if (*st) {
      selftest::Options o;
      o.seed = seed;
      o.scale = std::max(1, scale);
      if (fault == "pairing-sign")
        o.pair = selftest::faulty_pairing_sign();
      else if (!fault.empty())
        fail(Errc::InvalidInput, "unknown fault '" + fault + "'");
      bool ok = true;
      for (const auto& s : selftest::run_all(o)) {
        std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
        for (const auto& f : s.failures) std::cout << "  " << f << "\n";
        ok = ok && s.passed();
      }
      return ok ? kOk : kInputError;
    }

    if (*tab) {
      std::cout << io::format_classtable(table_l, io::parse_format(table_format));
      return kOk;
    }
  } catch (const Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "frobclass: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
