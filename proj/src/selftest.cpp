#include "frobclass/selftest.hpp"

#include <map>
#include <mutex>
#include <random>
#include <set>

#include "frobclass/golden.hpp"

namespace frobclass::selftest {

using conj::Matrix;
using ec::Curve;
using ec::Point;
using ff::Elem;

pairing::PairingFn faulty_pairing_sign() {
  return [](const Curve& e, const Point& p, const Point& q, uint64_t l, uint64_t seed) {
    return -pairing::weil_pairing(e, p, q, l, seed);
  };
}

namespace {

// Runs one check, turning exceptions into failures.
template <typename Fn>
void check(SuiteResult& s, const std::string& what, Fn&& fn) {
  ++s.checks;
  try {
    if (!fn()) s.failures.push_back(what);
  } catch (const std::exception& e) {
    s.failures.push_back(what + " (" + e.what() + ")");
  }
}

void note(std::vector<std::string>& v, const std::string& msg) {
  if (v.size() < 5) v.push_back(msg);
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult ff_suite(const Options& o) {
  SuiteResult s{"ff", 0, {}};
  std::mt19937_64 rng(o.seed);
  std::vector<ff::Field> fields = {ff::Field::prime(101), ff::Field::extension(101, 3, {}, o.seed),
                                   ff::Field::extension(7, 5, {}, o.seed)};
  for (const auto& f : fields) {
    const uint64_t p = f.characteristic();
    for (int t = 0; t < 50 * o.scale; ++t) {
      Elem a = f.random(rng), b = f.random(rng), c = f.random(rng);
      check(s, f.describe() + " associativity", [&] { return (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c); });
      check(s, f.describe() + " distributivity", [&] { return a * (b + c) == a * b + a * c; });
      check(s, f.describe() + " inverse", [&] { return a.is_zero() || (a * a.inv()).is_one(); });
      check(s, f.describe() + " Frobenius additive and multiplicative", [&] {
        return ff::frobenius_power(a + b, p) == ff::frobenius_power(a, p) + ff::frobenius_power(b, p) &&
               ff::frobenius_power(a * b, p) == ff::frobenius_power(a, p) * ff::frobenius_power(b, p);
      });
      check(s, f.describe() + " square roots", [&] {
        auto r = ff::sqrt(a * a, rng);
        return r && *r * *r == a * a;
      });
    }
  }
  return s;
}

SuiteResult ec_suite(const Options& o) {
  SuiteResult s{"ec", 0, {}};
  std::mt19937_64 rng(o.seed ^ 1);
  for (uint64_t p : {101u, 1009u, 4093u}) {
    ff::Field f = ff::Field::prime(p);
    for (int t = 0; t < 4 * o.scale; ++t) {
      Elem a = f.random(rng), b = f.random(rng);
      if ((a * a * a * f.from_int(4) + b * b * f.from_int(27)).is_zero()) continue;
      Curve e = Curve::short_form(a, b);
      uint64_t n = 0;
      check(s, "count exhaustive = bsgs over F_" + std::to_string(p), [&] {
        n = ec::count_points_exhaustive(e);
        return n == ec::count_points_bsgs(e, rng());
      });
      for (int u = 0; u < 10; ++u) {
        Point P = e.random_point(rng), Q = e.random_point(rng), R = e.random_point(rng);
        check(s, "associativity", [&] { return e.add(e.add(P, Q), R) == e.add(P, e.add(Q, R)); });
        check(s, "[#E]P = O", [&] { return e.mul(P, static_cast<int64_t>(n)).is_infinity(); });
        const int64_t k = static_cast<int64_t>(rng() % 40);
        check(s, "mul = repeated addition", [&] { return e.mul(P, k) == e.mul_naive(P, k); });
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Pairing laws

PairingFixture pairing_fixture(uint64_t l, uint64_t seed, const pairing::PairingFn& pair) {
  std::mt19937_64 rng(seed ^ (l * 0x100000001b3ULL));
  for (uint64_t p = l + 1;; p += l) {
    if (p < 7 || !ff::is_prime(p)) continue;
    ff::Field f = ff::Field::prime(p);
    for (int t = 0; t < 200; ++t) {
      Elem a = f.random(rng), b = f.random(rng);
      if ((a * a * a * f.from_int(4) + b * b * f.from_int(27)).is_zero()) continue;
      Curve e = Curve::short_form(a, b);
      const int k = ec::torsion_field_degree(e, l, seed);
      if (k < 2 || static_cast<uint64_t>(k) > 2 * l) continue;
      auto tf = ec::make_torsion_field(e, k, {}, seed);
      return PairingFixture{l, ec::torsion_basis(tf, l, seed, pair)};
    }
  }
}

LawStats pairing_laws(const std::vector<uint64_t>& ls, size_t trials, uint64_t seed, const pairing::PairingFn& pair) {
  LawStats st;
  std::map<uint64_t, PairingFixture> fx;
  for (uint64_t l : ls) fx.emplace(l, pairing_fixture(l, seed, pair));
  std::mt19937_64 rng(seed ^ 0xabcdef);
  for (size_t t = 0; t < trials; ++t) {
    const uint64_t l = ls[t % ls.size()];
    const auto& b = fx.at(l).basis;
    const Curve& e = b.tf.curve;
    auto comb = [&](uint64_t x, uint64_t y) {
      return e.add(e.mul(b.q1, static_cast<int64_t>(x)), e.mul(b.q2, static_cast<int64_t>(y)));
    };
    auto rnd = [&] { return comb(rng() % l, rng() % l); };
    auto E = [&](const Point& p, const Point& q) { return pair(e, p, q, l, rng()); };
    ++st.trials;
    std::string bad;
    try {
      const Point P = rnd(), Q = rnd(), R = rnd();
      const Elem epq = E(P, Q);
      if (!epq.pow(l).is_one()) bad = "value is not an l-th root of unity";
      else if (!(E(e.add(P, R), Q) == epq * E(R, Q))) bad = "left linearity";
      else if (!(E(P, e.add(Q, R)) == epq * E(P, R))) bad = "right linearity";
      else if (!E(P, P).is_one() || !(epq * E(Q, P)).is_one()) bad = "alternation";
      else {
        const uint64_t x = rng() % l, y = rng() % l;
        if (!(E(e.mul(P, static_cast<int64_t>(x)), e.mul(Q, static_cast<int64_t>(y))) == epq.pow(x * y)))
          bad = "scalar bilinearity";
        else if (!(E(ec::frobenius(b.tf, P), ec::frobenius(b.tf, Q)) == ff::frobenius_power(epq, b.tf.q)))
          bad = "Galois equivariance";
        else {
          Matrix a(l, 2);
          do {
            a = Matrix::of2(l, static_cast<int64_t>(rng() % l), static_cast<int64_t>(rng() % l),
                            static_cast<int64_t>(rng() % l), static_cast<int64_t>(rng() % l));
          } while (a.det() == 0);
          const Point A1 = comb(a.at(0, 0), a.at(1, 0)), A2 = comb(a.at(0, 1), a.at(1, 1));
          if (!(E(A1, A2) == E(b.q1, b.q2).pow(a.det()))) bad = "determinant law";
        }
      }
    } catch (const std::exception& ex) {
      bad = ex.what();
    }
    if (!bad.empty()) {
      ++st.violations;
      note(st.examples, "l=" + std::to_string(l) + ": " + bad);
    }
  }
  return st;
}

SuiteResult pairing_suite(const Options& o) {
  SuiteResult s{"pairing", 0, {}};
  const auto st = pairing_laws({3, 5, 7, 11}, 40 * static_cast<size_t>(o.scale), o.seed, o.pair);
  s.checks = st.trials;
  for (const auto& x : st.examples) s.failures.push_back(x);
  if (st.violations > st.examples.size())
    s.failures.push_back(std::to_string(st.violations - st.examples.size()) + " more violations");
  return s;
}

// ---------------------------------------------------------------------------
// Conjugacy

ConjStats conj_exhaustive(uint64_t l) {
  ConjStats st;
  auto bad = [&](const std::string& m) { note(st.failures, "l=" + std::to_string(l) + ": " + m); };
  for (const auto& s : conj::enumerate_sl2(l)) {
    ++st.checks;
    if (conj::class_splits(s) != conj::class_splits_brute(s)) bad("class_splits disagrees at " + s.to_string());
  }
  const auto rows = conj::sl2_class_representatives(l);
  uint64_t total = 0;
  for (const auto& r : rows) total += r.size;
  ++st.checks;
  if (total != l * (l * l - 1)) bad("class sizes sum to " + std::to_string(total));
  ++st.checks;
  if (rows.size() != l + 4) bad(std::to_string(rows.size()) + " classes");
  const auto sq = ff::ResidueSubgroup::squares(l);
  for (const auto& r : rows) {
    ++st.checks;
    const auto d = conj::splitting_data_general(r.rep);
    const bool splits = conj::class_splits(r.rep);
    if (splits && !(d.m == 2 && d.h == sq)) bad("split class " + r.rep.to_string() + " has m=" + std::to_string(d.m));
    if (!splits && d.m != 1) bad("non-split class " + r.rep.to_string() + " has m=" + std::to_string(d.m));
  }
  return st;
}

ConjStats conj_n3_unipotent() {
  ConjStats st;
  ++st.checks;
  const auto d = conj::splitting_data_general(Matrix(7, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  if (d.m != 3 || d.h.elements() != std::vector<uint64_t>{1, 6})
    st.failures.push_back("n=3, l=7 unipotent: m=" + std::to_string(d.m));
  return st;
}

SuiteResult conj_suite(const Options& o) {
  SuiteResult s{"conj", 0, {}};
  for (uint64_t l : {3u, 5u, 7u}) {
    auto st = conj_exhaustive(l);
    s.checks += st.checks;
    s.failures.insert(s.failures.end(), st.failures.begin(), st.failures.end());
  }
  auto n3 = conj_n3_unipotent();
  s.checks += n3.checks;
  s.failures.insert(s.failures.end(), n3.failures.begin(), n3.failures.end());
  std::mt19937_64 rng(o.seed);
  auto g = conj::enumerate_sl2(5);
  for (int i = 0; i < 100 * o.scale; ++i) {
    const Matrix& a = g[rng() % g.size()];
    const Matrix& b = g[rng() % g.size()];
    check(s, "fast SL_2 conjugacy test", [&] { return conj::sl_conjugate(a, b) == conj::sl_conjugate_fast(a, b); });
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classification

OracleStats oracle_equivalence(uint64_t l, size_t instances, uint64_t seed, const pairing::PairingFn& pair) {
  OracleStats st;
  std::mt19937_64 rng(seed ^ (l * 0x9e3779b97f4a7c15ULL));
  for (size_t i = 0; i < instances; ++i) {
    ++st.instances;
    const uint64_t s = rng();
    try {
      auto inst = classify::random_split_instance(l, rng);
      auto setup = classify::reference_setup(inst, s);
      auto r = classify::classify_local(setup.job, s + 1, pair);
      auto bf = classify::brute_force_class(setup.reference, s);
      if (classify::same_class(r, bf)) {
        ++st.agree;
      } else {
        note(st.examples, "l=" + std::to_string(l) + " " + inst.curve.to_string() + ": pipeline " +
                              r.sl_class_string() + " vs brute " + bf.frobenius.to_string());
      }
    } catch (const std::exception& e) {
      note(st.examples, "l=" + std::to_string(l) + ": " + e.what());
    }
  }
  return st;
}

OracleStats nonsquare_flip(const std::vector<uint64_t>& ls, size_t instances, uint64_t seed) {
  OracleStats st;
  std::mt19937_64 rng(seed ^ 0x5151);
  for (size_t i = 0; i < instances; ++i) {
    const uint64_t l = ls[i % ls.size()];
    ++st.instances;
    const uint64_t s = rng();
    try {
      auto inst = classify::random_split_instance(l, rng);
      auto setup = classify::reference_setup(inst, s);
      auto a = classify::classify_local(setup.job, s);
      auto b = classify::classify_local(classify::flip_global(setup.job), s);
      if (a.sl_class && b.sl_class && !(*a.sl_class == *b.sl_class) && !conj::sl_conjugate(*a.sl_class, *b.sl_class))
        ++st.agree;
      else
        note(st.examples, "l=" + std::to_string(l) + " " + inst.curve.to_string() + ": " + a.sl_class_string() +
                              " then " + b.sl_class_string());
    } catch (const std::exception& e) {
      note(st.examples, "l=" + std::to_string(l) + ": " + e.what());
    }
  }
  return st;
}

SuiteResult classify_suite(const Options& o) {
  SuiteResult s{"classify", 0, {}};
  std::optional<classify::ClassificationResult> r1, r2;
  check(s, "zeta3 case classifies", [&] {
    r1 = classify::classify(golden::zeta3_job(), o.seed, o.pair);
    return true;
  });
  if (r1) {
    const auto& ev = r1->evidence;
    check(s, "zeta3 case count 18", [&] { return ev.count == 18; });
    check(s, "zeta3 case trace 2 mod 3", [&] { return ev.trace_mod_l == 2; });
    check(s, "zeta3 case torsion degree 3", [&] { return ev.torsion_degree == 3; });
    check(s, "zeta3 case pairing 3", [&] { return ev.pairing_local->to_string() == "3"; });
    check(s, "zeta3 case class [[1,1],[0,1]]", [&] { return r1->sl_class_string() == "[[1,1],[0,1]]"; });
    check(s, "zeta3 case audit", [&] { return !classify::consistency_audit(*r1).checks.empty(); });
  }
  check(s, "sqrt5 case classifies", [&] {
    r2 = classify::classify(golden::sqrt5_job(), o.seed, o.pair);
    return true;
  });
  if (r2) {
    auto verdict = [&](int64_t c) -> const classify::CandidateVerdict& {
      for (const auto& v : r2->candidates)
        if (v.sigma == Matrix::of2(5, 1, c, 0, 1)) return v;
      fail(Errc::AuditFailed, "candidate missing");
    };
    check(s, "sqrt5 case pairing 8 rejected", [&] {
      return verdict(1).pairing.to_string() == "8" && !verdict(1).accepted;
    });
    check(s, "sqrt5 case pairing 2 accepted", [&] {
      return verdict(2).pairing.to_string() == "2" && verdict(2).accepted;
    });
    check(s, "sqrt5 case audit", [&] { return !classify::consistency_audit(*r2).checks.empty(); });
  }
  for (uint64_t l : {3u, 5u}) {
    const size_t n = 2 * static_cast<size_t>(o.scale);
    auto st = oracle_equivalence(l, n, o.seed, o.pair);
    s.checks += st.instances;
    if (st.agree != st.instances) {
      for (const auto& x : st.examples) s.failures.push_back("oracle: " + x);
      if (st.examples.empty()) s.failures.push_back("oracle disagreement at l=" + std::to_string(l));
    }
  }
  return s;
}

std::vector<SuiteResult> run_all(const Options& o) {
  return {ff_suite(o), ec_suite(o), pairing_suite(o), conj_suite(o), classify_suite(o)};
}

}  // namespace frobclass::selftest
