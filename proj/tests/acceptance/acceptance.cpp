// One line per acceptance criterion; exit status 0 iff every hard criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "frobclass/golden.hpp"
#include "frobclass/scan.hpp"
#include "frobclass/selftest.hpp"

using namespace frobclass;
using conj::Matrix;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  bool soft = false;
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<Outcome()>& fn) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const char* tag = o.pass ? "PASS" : (o.soft ? "WARN" : "FAIL");
  if (!o.pass && !o.soft) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s)\n", tag, n, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const classify::CandidateVerdict* find(const classify::ClassificationResult& r, const Matrix& s) {
  for (const auto& c : r.candidates)
    if (c.sigma == s) return &c;
  return nullptr;
}

}  // namespace

int main() {
  const uint64_t seed = ff::kDefaultSeed;

  criterion(1, "golden case Q(zeta_3), l=3, p=13", [&] {
    const auto t0 = Clock::now();
    const auto r = classify::classify(golden::zeta3_job(), seed);
    const double secs = seconds_since(t0);
    const auto& ev = r.evidence;
    std::ostringstream d;
    d << "count=" << ev.count << " trace_mod_3=" << ev.trace_mod_l << " degree=" << ev.torsion_degree.value_or(0)
      << " pairing=" << (ev.pairing_local ? ev.pairing_local->to_string() : "-") << " class=" << r.sl_class_string();
    const bool ok = ev.count == 18 && ev.trace_mod_l == 2 && ev.torsion_degree == 3 && ev.pairing_local &&
                    ev.pairing_local->to_string() == "3" && r.sl_class_string() == "[[1,1],[0,1]]" && secs < 1.0;
    return Outcome{ok, d.str()};
  });

  criterion(2, "golden case Q(sqrt5), l=5, p=31", [&] {
    const auto t0 = Clock::now();
    const auto r = classify::classify(golden::sqrt5_job(), seed);
    const double secs = seconds_since(t0);
    const auto* c1 = find(r, Matrix::of2(5, 1, 1, 0, 1));
    const auto* c2 = find(r, Matrix::of2(5, 1, 2, 0, 1));
    if (!c1 || !c2) return Outcome{false, "candidates missing"};
    const ff::Elem p8 = c1->pairing;
    const std::string gp = r.evidence.global_poly ? r.evidence.global_poly->to_string() : "-";
    std::ostringstream d;
    d << "global=" << gp << " first=" << p8.to_string() << "/" << (c1->accepted ? "accept" : "reject")
      << " (8^4=" << p8.pow(4).to_string() << ") adjusted=" << c2->pairing.to_string() << "/"
      << (c2->accepted ? "accept" : "reject");
    const bool ok = gp == "x^2+13x+1" && p8.to_string() == "8" && p8.pow(4).to_string() == "4" &&
                    !c1->accepted && c2->pairing.to_string() == "2" && c2->accepted && secs < 1.0;
    return Outcome{ok, d.str()};
  });

  criterion(3, "oracle equivalence, 50 instances per l in {3,5,7}", [&] {
    const auto t0 = Clock::now();
    size_t n = 0, agree = 0;
    std::string first;
    for (uint64_t l : {3u, 5u, 7u}) {
      const auto st = selftest::oracle_equivalence(l, 50, seed);
      n += st.instances;
      agree += st.agree;
      if (first.empty() && !st.examples.empty()) first = st.examples[0];
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << agree << "/" << n << " agree" << (first.empty() ? "" : "; " + first);
    return Outcome{n == 150 && agree == n && secs < 300, d.str()};
  });

  criterion(4, "pairing laws, 500 trials over l in {3,5,7,11}", [&] {
    const auto st = selftest::pairing_laws({3, 5, 7, 11}, 500, seed);
    std::ostringstream d;
    d << st.trials << " trials, " << st.violations << " violations"
      << (st.examples.empty() ? "" : "; " + st.examples[0]);
    return Outcome{st.trials == 500 && st.violations == 0, d.str()};
  });

  criterion(5, "conjugacy exhaustives l in {3,5,7,11} and n=3 unipotent", [&] {
    size_t checks = 0;
    std::vector<std::string> bad;
    for (uint64_t l : {3u, 5u, 7u, 11u}) {
      auto st = selftest::conj_exhaustive(l);
      checks += st.checks;
      bad.insert(bad.end(), st.failures.begin(), st.failures.end());
    }
    auto n3 = selftest::conj_n3_unipotent();
    checks += n3.checks;
    bad.insert(bad.end(), n3.failures.begin(), n3.failures.end());
    std::ostringstream d;
    d << checks << " checks, " << bad.size() << " failures" << (bad.empty() ? "" : "; " + bad[0]);
    return Outcome{bad.empty(), d.str()};
  });

  criterion(6, "scan, 100 primes per l in {3,5,7,11} on y^2=x^3+x+1", [&] {
    scan::ScanConfig c;
    c.curve = {nf::Rational(1), nf::Rational(1)};
    c.ls = {3, 5, 7, 11};
    c.primes = 100;
    c.seed = seed;
    c.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto out = scan::run_scan(c);
    bool ok = out.rows.size() == 400 && out.summary.size() == 4;
    std::ostringstream d;
    for (const auto& s : out.summary) {
      ok = ok && s.rows == 100 && s.errors == 0;
      char buf[96];
      std::snprintf(buf, sizeof buf, "l=%llu %.1fs ", static_cast<unsigned long long>(s.l), s.wall_seconds);
      d << buf;
      if (s.l == 11) ok = ok && s.wall_seconds < 3600;
    }
    size_t errors = 0;
    for (const auto& s : out.summary) errors += s.errors;
    d << "rows=" << out.rows.size() << " errors=" << errors;
    return Outcome{ok, d.str()};
  });

  criterion(7, "non-square flip, 100 split instances", [&] {
    const auto st = selftest::nonsquare_flip({3, 5, 7}, 100, seed);
    std::ostringstream d;
    d << st.agree << "/" << st.instances << " flipped" << (st.examples.empty() ? "" : "; " + st.examples[0]);
    return Outcome{st.instances == 100 && st.agree == st.instances, d.str()};
  });

  criterion(8, "Chebotarev sanity, 500 primes at l=3 (soft)", [&] {
    scan::ScanConfig c;
    c.curve = {nf::Rational(1), nf::Rational(1)};
    c.ls = {3};
    c.primes = 500;
    c.seed = seed;
    c.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto out = scan::run_scan(c);
    const auto& ch = out.chebotarev.at(0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "primes=%zu split=%zu qr=%zu nqr=%zu z=%.2f", out.rows.size(), ch.split, ch.qr, ch.nqr,
                  ch.z);
    Outcome o{out.rows.size() == 500 && ch.split > 0 && ch.within, buf, true};
    if (!ch.within) o.detail += " WARNING: outside 3 sigma";
    return o;
  });

  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
  return failures ? 1 : 0;
}
