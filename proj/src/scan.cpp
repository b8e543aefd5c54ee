#include "frobclass/scan.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace frobclass::scan {

using Clock = std::chrono::steady_clock;

uint64_t job_seed(uint64_t seed, uint64_t l, uint64_t p) {
  // splitmix64 over the combined key
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (l * 1000003ULL + p);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<int64_t> cyclotomic(uint64_t l) { return std::vector<int64_t>(l, 1); }

bool good_reduction(const std::vector<nf::Rational>& curve, uint64_t p) {
  ff::Field f = ff::Field::prime(p);
  ec::LongCoeffs lc;
  for (auto& c : lc) c = f.zero();
  std::vector<ff::Elem> red;
  for (const auto& c : curve) {
    if (static_cast<uint64_t>(c.den()) % p == 0) return false;
    red.push_back(f.from_int(c.num()) * f.from_int(c.den()).inv());
  }
  if (red.size() == 5) {
    for (size_t i = 0; i < 5; ++i) lc[i] = red[i];
  } else {
    lc[3] = red[0];
    lc[4] = red[1];
  }
  try {
    ec::short_model(lc);
  } catch (const Error& e) {
    if (e.code() == Errc::SingularCurve) return false;
    throw;
  }
  return true;
}

}  // namespace

std::vector<std::pair<uint64_t, uint64_t>> select_primes(const std::vector<nf::Rational>& curve, uint64_t l,
                                                         size_t count) {
  if (count == 0) fail(Errc::InvalidInput, "prime count must be at least 1");
  conj::require_odd_prime(l);
  std::vector<std::pair<uint64_t, uint64_t>> out;
  for (uint64_t p = l + 1; out.size() < count; p += l) {
    if (p <= 3 || !ff::is_prime(p) || !good_reduction(curve, p)) continue;
    ff::Field f = ff::Field::prime(p);
    auto roots = ff::poly_roots(ff::Poly::from_signed(f, cyclotomic(l)));
    uint64_t r = p;
    for (const auto& x : roots) r = std::min(r, x.constant_term());
    out.emplace_back(p, r);
  }
  return out;
}

ChebotarevReport chebotarev(const std::vector<ScanRow>& rows, uint64_t l) {
  ChebotarevReport c;
  c.l = l;
  for (const auto& r : rows) {
    if (r.l != l || !r.error.empty() || r.path != "pairing") continue;
    ++c.split;
    if (r.label.find("nqr") != std::string::npos)
      ++c.nqr;
    else
      ++c.qr;
  }
  if (c.split) {
    const double n = static_cast<double>(c.split);
    c.z = (static_cast<double>(c.qr) - n / 2) / (std::sqrt(n) / 2);
    c.within = std::fabs(c.z) <= 3.0;
  }
  return c;
}

ScanOutput run_scan(const ScanConfig& cfg) {
  if (cfg.primes == 0) fail(Errc::InvalidInput, "prime count must be at least 1");
  if (cfg.ls.empty()) fail(Errc::InvalidInput, "no l given");
  if (cfg.curve.size() != 2 && cfg.curve.size() != 5) fail(Errc::InvalidInput, "curve needs 2 or 5 coefficients");
  for (uint64_t l : cfg.ls) {
    conj::require_odd_prime(l);
    if (l > cfg.max_l)
      fail(Errc::InvalidInput, "l = " + std::to_string(l) + " exceeds the cap " + std::to_string(cfg.max_l));
    if (cfg.global_exponent % l == 0) fail(Errc::InvalidInput, "global exponent must be prime to l");
  }
  const unsigned threads = std::max(1u, cfg.threads);

  ScanOutput out;
  for (uint64_t l : cfg.ls) {
    const auto wall0 = Clock::now();
    const nf::NumberField field = nf::NumberField::create(cyclotomic(l));
    const auto primes = select_primes(cfg.curve, l, cfg.primes);
    std::vector<nf::NfElem> curve;
    for (const auto& c : cfg.curve) curve.push_back(nf::NfElem(field, {c}));
    const auto global = nf::GlobalPairingDatum::from_value(nf::NfElem::alpha(field).pow(cfg.global_exponent), l);

    std::vector<ScanRow> rows(primes.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (size_t i; (i = next.fetch_add(1)) < primes.size();) {
        ScanRow& row = rows[i];
        row.l = l;
        row.p = primes[i].first;
        row.root = primes[i].second;
        row.q_mod_l = row.p % l;
        const auto t0 = Clock::now();
        try {
          classify::ClassificationJob job;
          job.field = field;
          job.curve = curve;
          job.l = l;
          job.prime = nf::prime_datum(field, row.p, {-static_cast<int64_t>(row.root), 1});
          job.global = global;
          job.mode = classify::Mode::Thm1;
          auto r = classify::classify(job, job_seed(cfg.seed, l, row.p));
          row.trace_mod_l = r.evidence.trace_mod_l;
          row.gl_class = r.gl_class.name();
          row.sl_class = r.sl_class ? r.sl_class->to_string() : "-";
          row.label = r.label;
          row.path = classify::to_string(r.path);
        } catch (const Error& e) {
          row.error = std::string(errc_name(e.code()));
        } catch (const std::exception& e) {
          row.error = "internal";
        }
        row.micros = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count());
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    ScanSummary s;
    s.l = l;
    s.rows = rows.size();
    for (const auto& r : rows) {
      if (!r.error.empty()) ++s.errors;
      if (r.path == "pairing") ++s.split;
      s.seconds += static_cast<double>(r.micros) / 1e6;
    }
    s.wall_seconds = std::chrono::duration<double>(Clock::now() - wall0).count();
    out.summary.push_back(s);
    out.chebotarev.push_back(chebotarev(rows, l));
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string tsv_header() { return "l\tp\troot\tq_mod_l\ttrace_mod_l\tgl_class\tsl_class\tlabel\tpath\tstatus\tmicros\n"; }

std::string tsv_row(const ScanRow& r) {
  std::ostringstream os;
  os << r.l << '\t' << r.p << '\t' << r.root << '\t' << r.q_mod_l << '\t'
     << (r.trace_mod_l ? std::to_string(*r.trace_mod_l) : "-") << '\t' << (r.gl_class.empty() ? "-" : r.gl_class)
     << '\t' << (r.sl_class.empty() ? "-" : r.sl_class) << '\t' << (r.label.empty() ? "-" : r.label) << '\t'
     << (r.path.empty() ? "-" : r.path) << '\t' << (r.error.empty() ? "ok" : r.error) << '\t' << r.micros << '\n';
  return os.str();
}

std::string json_row(const ScanRow& r) {
  nlohmann::json j = {{"l", r.l},           {"p", r.p},         {"root", r.root},
                      {"q_mod_l", r.q_mod_l}, {"gl_class", r.gl_class}, {"sl_class", r.sl_class},
                      {"label", r.label},   {"path", r.path},   {"status", r.error.empty() ? "ok" : r.error},
                      {"micros", r.micros}};
  j["trace_mod_l"] = r.trace_mod_l ? nlohmann::json(*r.trace_mod_l) : nlohmann::json(nullptr);
  return j.dump() + "\n";
}

std::string format_summary(const ScanOutput& out, bool json) {
  std::ostringstream os;
  if (json) {
    for (const auto& s : out.summary)
      os << nlohmann::json{{"summary", {{"l", s.l},
                                        {"primes", s.rows},
                                        {"split", s.split},
                                        {"errors", s.errors},
                                        {"seconds", s.seconds},
                                        {"wall_seconds", s.wall_seconds}}}}
                .dump()
         << "\n";
    for (const auto& c : out.chebotarev)
      os << nlohmann::json{{"chebotarev",
                            {{"l", c.l}, {"split", c.split}, {"qr", c.qr}, {"nqr", c.nqr}, {"z", c.z}, {"within_3_sigma", c.within}}}}
                .dump()
         << "\n";
    return os.str();
  }
  os << "# summary\n# l\tprimes\tsplit\terrors\tseconds\twall_seconds\n";
  char buf[64];
  for (const auto& s : out.summary) {
    std::snprintf(buf, sizeof buf, "%.3f\t%.3f", s.seconds, s.wall_seconds);
    os << "# " << s.l << '\t' << s.rows << '\t' << s.split << '\t' << s.errors << '\t' << buf << '\n';
  }
  for (const auto& c : out.chebotarev) {
    std::snprintf(buf, sizeof buf, "%.2f", c.z);
    os << "# chebotarev l=" << c.l << " split=" << c.split << " qr=" << c.qr << " nqr=" << c.nqr << " z=" << buf
       << (c.within ? " ok" : " WARNING: outside 3 sigma") << '\n';
  }
  return os.str();
}

}  // namespace frobclass::scan
