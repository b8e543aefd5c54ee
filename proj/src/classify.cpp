#include "frobclass/classify.hpp"

#include <algorithm>
#include <set>

namespace frobclass::classify {

using conj::Matrix;
using ec::Curve;
using ec::Point;
using ff::Elem;
using ff::Poly;

std::string to_string(Mode m) { return m == Mode::Thm1 ? "thm1" : "thm2"; }

Mode parse_mode(const std::string& s) {
  if (s == "thm1") return Mode::Thm1;
  if (s == "thm2") return Mode::Thm2;
  fail(Errc::InvalidInput, "mode must be thm1 or thm2, got '" + s + "'");
}

std::string to_string(Path p) {
  switch (p) {
    case Path::Charpoly: return "charpoly";
    case Path::Torsion: return "torsion";
    case Path::Pairing: return "pairing";
  }
  return "?";
}

std::string ClassificationResult::sl_class_string() const {
  return sl_class ? sl_class->to_string() : "determined by characteristic polynomial";
}

// ---------------------------------------------------------------------------
// Reduction at the prime

LocalJob reduce_job(const ClassificationJob& job) {
  conj::require_odd_prime(job.l);
  const nf::PrimeDatum& pd = job.prime;
  if (!(pd.field == job.field)) fail(Errc::InvalidInput, "prime datum belongs to a different field");
  if (pd.p == job.l) fail(Errc::BadReduction, "the prime lies above l = " + std::to_string(job.l));
  if (pd.p <= 3) fail(Errc::InvalidInput, "residue characteristic must exceed 3");
  if (job.curve.size() != 5 && job.curve.size() != 2)
    fail(Errc::InvalidInput, "curve needs 5 long or 2 short coefficients");

  ec::LongCoeffs lc;
  for (auto& c : lc) c = pd.residue.zero();
  if (job.curve.size() == 5) {
    for (size_t i = 0; i < 5; ++i) lc[i] = nf::reduce_element(job.curve[i], pd);
  } else {
    lc[3] = nf::reduce_element(job.curve[0], pd);
    lc[4] = nf::reduce_element(job.curve[1], pd);
  }

  LocalJob out;
  try {
    out.curve = ec::short_model(lc);
  } catch (const Error& e) {
    if (e.code() != Errc::SingularCurve) throw;
    fail(Errc::BadReduction, "the prime divides the discriminant");
  }
  out.l = job.l;
  out.mode = job.mode;

  if (job.mode == Mode::Thm2) {
    if (pd.q % job.l != 1)
      fail(Errc::HypothesisViolated, "thm2 needs q = 1 mod l, got q = " + std::to_string(pd.q));
    if (!job.subgroup_hypothesis_asserted)
      fail(Errc::HypothesisViolated, "thm2 needs the subgroup hypothesis to be asserted");
    if (job.global.value) {
      out.global_poly = Poly::x(pd.residue) - Poly::constant(nf::reduce_element(*job.global.value, pd));
    } else if (job.global.minpoly) {
      out.global_poly = nf::reduce_poly(*job.global.minpoly, pd);
    } else {
      fail(Errc::InvalidInput, "missing global pairing datum");
    }
  } else {
    Elem v;
    if (job.global.value) {
      v = nf::reduce_element(*job.global.value, pd);
    } else if (job.global.minpoly && job.global.minpoly->size() == 2) {
      v = -nf::reduce_element((*job.global.minpoly)[0], pd);
    } else {
      fail(Errc::InvalidInput, "thm1 needs the global pairing value as an element of the field");
    }
    // Only the split criterion consumes the value, and it needs q = 1 mod l.
    if (pd.q % job.l == 1) pairing::require_exact_order(v, job.l, "reduced global pairing");
    out.global_value = v;
  }

  if (job.torsion_modulus) {
    std::vector<uint64_t> m;
    for (int64_t c : *job.torsion_modulus) m.push_back(ff::reduce_signed(c, pd.p));
    out.torsion_modulus = m;
  }
  out.basis = job.basis;
  if (out.basis && !out.torsion_modulus) fail(Errc::InvalidInput, "an explicit basis needs torsion_modulus");
  return out;
}

// ---------------------------------------------------------------------------

Elem pull_back_root_of_unity(const ff::Embedding& emb, const Elem& x, uint64_t l) {
  const ff::Field& src = emb.source();
  if (!x.pow(l).is_one()) fail(Errc::NotRootOfUnity, x.to_string() + " is not an l-th root of unity");
  if (src.degree() == 1) {
    if (!x.is_constant()) fail(Errc::NotRootOfUnity, x.to_string() + " is not in the base field");
    return src.from_int(static_cast<int64_t>(x.constant_term()));
  }
  const uint64_t q = ec::field_size(src);
  if ((q - 1) % l != 0) fail(Errc::NotRootOfUnity, "base field has no nontrivial l-th roots of unity");
  Elem z;
  for (uint64_t i = 2;; ++i) {
    z = src.from_index(i).pow((q - 1) / l);
    if (!z.is_one()) break;
  }
  Elem w = src.one();
  for (uint64_t i = 0; i < l; ++i, w = w * z)
    if (emb(w) == x) return w;
  fail(Errc::NotRootOfUnity, x.to_string() + " is not in the base field");
}

bool thm2_divisibility(const Poly& m_reduced, const Elem& value, uint64_t l, const ff::ResidueSubgroup& h,
                       uint64_t* h_out) {
  pairing::require_exact_order(value, l, "candidate pairing");
  if (!(m_reduced.field() == value.field())) fail(Errc::InvalidInput, "polynomial and value in different fields");
  for (uint64_t e : h.elements()) {
    if (m_reduced.eval(value.pow(e)).is_zero()) {
      if (h_out) *h_out = e;
      return true;
    }
  }
  return false;
}

namespace {

std::string point_string(const Curve& c, const Point& p) {
  if (p.is_infinity()) return "O";
  auto [x, y] = c.to_long_point(p);
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

uint64_t order_mod(uint64_t a, uint64_t l) {
  uint64_t k = 1;
  for (uint64_t v = a % l; v != 1; v = v * a % l) ++k;
  return k;
}

// Accepting exponent h in H for one candidate value, if any.
std::optional<uint64_t> decide(Mode mode, const std::optional<Elem>& gv, const std::optional<Poly>& gp,
                               const Elem& local, uint64_t l, const ff::ResidueSubgroup& h) {
  if (mode == Mode::Thm1) {
    if (!gv) fail(Errc::InvalidInput, "thm1 needs the reduced global value");
    return pairing::pairing_power_exponent(*gv, local, l, h);
  }
  if (!gp) fail(Errc::InvalidInput, "thm2 needs the reduced global polynomial");
  uint64_t e = 0;
  if (thm2_divisibility(*gp, local, l, h, &e)) return e;
  return std::nullopt;
}

std::string reason(Mode mode, const std::optional<Elem>& gv, const std::optional<Poly>& gp, const Elem& local,
                   uint64_t l, const ff::ResidueSubgroup& h, std::optional<uint64_t> acc) {
  std::string powers;
  for (uint64_t e : h.elements()) {
    if (!powers.empty()) powers += ", ";
    powers += local.to_string() + "^" + std::to_string(e) + "=" + local.pow(e).to_string();
  }
  (void)l;
  if (mode == Mode::Thm1) {
    if (acc) return "global " + gv->to_string() + " = " + local.to_string() + "^" + std::to_string(*acc);
    return "global " + gv->to_string() + " not among " + powers;
  }
  if (acc)
    return local.to_string() + "^" + std::to_string(*acc) + " = " + local.pow(*acc).to_string() + " is a root of " +
           gp->to_string();
  return "none of " + powers + " is a root of " + gp->to_string();
}

Poly flip_poly(const Poly& gp, uint64_t l) {
  const uint64_t n = conj::smallest_nonsquare(l);
  auto roots = ff::poly_roots(gp);
  if (static_cast<int>(roots.size()) != gp.degree())
    fail(Errc::InvalidInput, "reduced global polynomial does not split into distinct linear factors");
  Poly out = Poly::constant(gp.field().one());
  for (const auto& r : roots) out = out * (Poly::x(gp.field()) - Poly::constant(r.pow(n)));
  return out;
}

}  // namespace

LocalJob flip_global(const LocalJob& job) {
  LocalJob out = job;
  const uint64_t n = conj::smallest_nonsquare(job.l);
  if (out.global_value) out.global_value = out.global_value->pow(n);
  if (out.global_poly) out.global_poly = flip_poly(*out.global_poly, job.l);
  return out;
}

// ---------------------------------------------------------------------------

ClassificationResult classify_local(const LocalJob& job, uint64_t seed, const pairing::PairingFn& pair) {
  const Curve& e = job.curve;
  const uint64_t l = job.l;
  conj::require_odd_prime(l);
  ClassificationResult r;
  r.l = l;
  r.mode = job.mode;
  Evidence& ev = r.evidence;
  ev.q = ec::field_size(e.field());
  if (ev.q % l == 0) fail(Errc::BadReduction, "residue characteristic equals l");
  ev.count = ec::count_points(e, seed);
  ev.trace = ec::frobenius_trace(e, ev.count);
  ev.trace_mod_l = ff::reduce_signed(ev.trace, l);
  ev.det_mod_l = ev.q % l;
  ev.global_value = job.global_value;
  ev.global_poly = job.global_poly;

  const uint64_t t = ev.trace_mod_l, d = ev.det_mod_l;
  const uint64_t disc = ff::submod(ff::mulmod(t, t, l), ff::mulmod(4, d, l), l);
  bool scalar = false;
  uint64_t lambda = 0;
  if (disc == 0) {
    // Repeated eigenvalue: E[l] is defined over F_{q^ord(lambda)} exactly
    // when Frobenius is scalar, and over F_{q^(l ord(lambda))} otherwise.
    lambda = ff::mulmod(t, ff::invmod(2, l), l);
    auto an = ec::analyze_torsion(e, l, seed);
    ev.torsion_degree = an.field_degree;
    if (lambda == 1) ev.rational_torsion = ec::rational_torsion_check(e, l, seed);
    scalar = static_cast<uint64_t>(an.field_degree) == order_mod(lambda, l);
    r.path = Path::Torsion;
  }
  r.gl_class = conj::gl_class_from_charpoly(l, t, d, scalar);
  r.split = r.gl_class.kind == conj::Kind::Nonsemisimple && d == 1;
  if (!r.split) {
    if (scalar && d == 1) r.sl_class = Matrix::scalar(l, 2, lambda);
    r.label = r.gl_class.name();
    return r;
  }

  r.path = Path::Pairing;
  ec::TorsionField tf = ec::make_torsion_field(e, *ev.torsion_degree, job.torsion_modulus, seed);
  ev.torsion_modulus = tf.ext().describe();
  ec::TorsionBasis b;
  if (job.basis) {
    const ff::Field& ext = tf.ext();
    const auto& eb = *job.basis;
    Point q1 = tf.curve.from_long_point(ext.from_signed(eb.x1), ext.from_signed(eb.y1));
    Point q2 = tf.curve.from_long_point(ext.from_signed(eb.x2), ext.from_signed(eb.y2));
    b = ec::make_basis(tf, l, q1, q2, seed, pair);
  } else {
    b = ec::torsion_basis(tf, l, seed, pair);
  }
  const Matrix m = ec::frobenius_matrix(b);
  ev.frobenius_matrix = m;
  ev.q1 = point_string(tf.curve, b.q1);
  ev.q2 = point_string(tf.curve, b.q2);
  ev.pairing_local = pull_back_root_of_unity(tf.embed, b.zeta, l);

  const auto h = ff::ResidueSubgroup::squares(l);
  for (uint64_t c : {uint64_t{1}, conj::smallest_nonsquare(l)}) {
    CandidateVerdict v;
    v.sigma = conj::unipotent_candidate(l, lambda, c);
    v.label = conj::gl_class_of(v.sigma).name();
    ec::TorsionBasis nb = ec::basis_for_representative(b, m, v.sigma, &v.conjugator, seed, pair);
    v.q1 = point_string(tf.curve, nb.q1);
    v.q2 = point_string(tf.curve, nb.q2);
    v.pairing = pull_back_root_of_unity(tf.embed, nb.zeta, l);
    v.h = decide(job.mode, job.global_value, job.global_poly, v.pairing, l, h);
    v.accepted = v.h.has_value();
    v.reason = reason(job.mode, job.global_value, job.global_poly, v.pairing, l, h, v.h);
    r.candidates.push_back(std::move(v));
  }

  std::vector<const CandidateVerdict*> acc;
  for (const auto& v : r.candidates)
    if (v.accepted) acc.push_back(&v);
  if (acc.empty()) fail(Errc::Inconclusive, "no candidate accepted; the global datum is inconsistent");
  if (acc.size() > 1) fail(Errc::Ambiguous, "both candidates accepted");
  r.sl_class = acc[0]->sigma;
  r.label = acc[0]->label;
  ev.accepted_h = acc[0]->h;
  return r;
}

ClassificationResult classify(const ClassificationJob& job, uint64_t seed, const pairing::PairingFn& pair) {
  return classify_local(reduce_job(job), seed, pair);
}

// ---------------------------------------------------------------------------
// Brute force

BruteForceClass brute_force_class(const ec::TorsionBasis& reference, uint64_t seed) {
  const ec::TorsionField& tf = reference.tf;
  const uint64_t l = reference.l;
  const Curve& c = tf.curve;
  const auto pts = ec::torsion_points(tf, l, seed);
  const auto table = ec::span_table(reference);

  std::set<Point> all(pts.begin(), pts.end());
  std::set<Point> images;
  std::vector<std::pair<uint64_t, uint64_t>> img(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    const Point& p = table[i];
    if (i != 0 && !all.count(p)) fail(Errc::AuditFailed, "span point missing from the torsion list");
    Point f = ec::frobenius(tf, p);
    if (!c.on_curve(f)) fail(Errc::AuditFailed, "Frobenius image off the curve");
    img[i] = ec::coordinates(reference, table, f);
    if (i != 0) images.insert(f);
  }
  if (images != all) fail(Errc::AuditFailed, "Frobenius does not permute the torsion points");

  const auto [a1, b1] = img[l];  // Q1 at index 1 * l + 0
  const auto [a2, b2] = img[1];  // Q2 at index 0 * l + 1
  for (uint64_t a = 0; a < l; ++a)
    for (uint64_t b = 0; b < l; ++b) {
      const auto [x, y] = img[a * l + b];
      if (x != (a * a1 + b * a2) % l || y != (a * b1 + b * b2) % l)
        fail(Errc::AuditFailed, "Frobenius is not linear on E[l]");
    }

  BruteForceClass out;
  out.frobenius = Matrix::of2(l, static_cast<int64_t>(a1), static_cast<int64_t>(a2), static_cast<int64_t>(b1),
                              static_cast<int64_t>(b2));
  out.gl_class = conj::gl_class_of(out.frobenius);
  out.label = out.gl_class.name();
  if (out.frobenius.det() == 1) {
    for (const auto& row : conj::sl2_class_representatives(l)) {
      if (conj::sl_conjugate(row.rep, out.frobenius)) {
        out.sl_rep = row.rep;
        out.label = row.desc.name();
        break;
      }
    }
    if (!out.sl_rep) fail(Errc::AuditFailed, "Frobenius matrix matches no SL_2 class");
  }
  return out;
}

bool same_class(const ClassificationResult& r, const BruteForceClass& b) {
  if (r.split) return r.sl_class && b.sl_rep && conj::sl_conjugate(*r.sl_class, *b.sl_rep);
  return r.gl_class.name() == b.gl_class.name();
}

// ---------------------------------------------------------------------------
// Audit

AuditReport consistency_audit(const ClassificationResult& r) {
  AuditReport rep;
  const Evidence& ev = r.evidence;
  const uint64_t l = r.l;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) fail(Errc::AuditFailed, what);
    rep.checks.push_back(what);
  };

  check(ev.det_mod_l == ev.q % l, "det = q mod l");
  check(ev.trace == static_cast<int64_t>(ev.q + 1) - static_cast<int64_t>(ev.count) &&
            ev.trace_mod_l == ff::reduce_signed(ev.trace, l),
        "trace = q + 1 - #E");
  check(r.gl_class.trace == ev.trace_mod_l && r.gl_class.det == ev.det_mod_l, "class matches (trace, det)");
  if (ev.frobenius_matrix)
    check(ev.frobenius_matrix->trace() == ev.trace_mod_l && ev.frobenius_matrix->det() == ev.det_mod_l,
          "Frobenius matrix has the counted characteristic polynomial");

  const bool should_split = r.gl_class.kind == conj::Kind::Nonsemisimple && ev.det_mod_l == 1;
  check(r.split == should_split, "split flag matches the class");
  if (!r.split) {
    check(r.candidates.empty(), "no candidates for a non-split class");
    check(r.label == r.gl_class.name(), "label names the class");
    return rep;
  }

  check(r.candidates.size() == 2, "two candidates for a split class");
  const auto h = ff::ResidueSubgroup::squares(l);
  int accepted = 0;
  const CandidateVerdict* winner = nullptr;
  for (const auto& v : r.candidates) {
    auto again = decide(r.mode, ev.global_value, ev.global_poly, v.pairing, l, h);
    check(again.has_value() == v.accepted, "verdict for " + v.sigma.to_string() + " recomputes");
    if (v.accepted) ++accepted, winner = &v;
  }
  check(accepted == 1, "exactly one candidate accepted");
  check(r.sl_class && *r.sl_class == winner->sigma && r.label == winner->label, "sl_class is the accepted candidate");

  // The conjugators differ by a non-square determinant, so the pairings
  // differ by a non-square power.
  const uint64_t e = ff::mu_l_dlog(r.candidates[0].pairing, r.candidates[1].pairing, l);
  check(!ff::is_square_mod_l(e, l), "candidate pairings differ by a non-square power");
  const uint64_t dc = ff::mulmod(r.candidates[1].conjugator.det(), ff::invmod(r.candidates[0].conjugator.det(), l), l);
  check(dc == e, "pairing ratio equals the conjugator determinant ratio");

  std::optional<Elem> fv = ev.global_value;
  std::optional<Poly> fp = ev.global_poly;
  const uint64_t n = conj::smallest_nonsquare(l);
  if (fv) fv = fv->pow(n);
  if (fp) fp = flip_poly(*fp, l);
  for (const auto& v : r.candidates) {
    auto flipped = decide(r.mode, fv, fp, v.pairing, l, h);
    check(flipped.has_value() != v.accepted, "non-square flip swaps the verdict for " + v.sigma.to_string());
  }
  return rep;
}

AuditReport consistency_audit(const ClassificationJob& job, const ClassificationResult& r) {
  if (job.l != r.l) fail(Errc::AuditFailed, "result is for a different l");
  if (job.prime.q != r.evidence.q) fail(Errc::AuditFailed, "result is for a different prime");
  LocalJob lj = reduce_job(job);
  if (lj.global_value != r.evidence.global_value || lj.global_poly != r.evidence.global_poly)
    fail(Errc::AuditFailed, "reduced global datum differs from the job");
  return consistency_audit(r);
}

// ---------------------------------------------------------------------------
// Instances

Instance random_split_instance(uint64_t l, std::mt19937_64& rng, uint64_t p_max) {
  conj::require_odd_prime(l);
  std::vector<uint64_t> primes;
  for (uint64_t p = 5; p < p_max; ++p)
    if (p % l == 1 && ff::is_prime(p)) primes.push_back(p);
  if (primes.empty()) fail(Errc::InvalidInput, "no primes p = 1 mod l below the bound");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const uint64_t p = primes[rng() % primes.size()];
    ff::Field f = ff::Field::prime(p);
    Elem a = f.from_int(static_cast<int64_t>(rng() % p)), b = f.from_int(static_cast<int64_t>(rng() % p));
    if ((a * a * a * f.from_int(4) + b * b * f.from_int(27)).is_zero()) continue;
    Curve e = Curve::short_form(a, b);
    const uint64_t t = ff::reduce_signed(ec::frobenius_trace(e, ec::count_points(e)), l);
    if (t != 2 && t != l - 2) continue;
    const int k = ec::torsion_field_degree(e, l);
    const int ord = t == 2 ? 1 : 2;
    if (k == ord) continue;  // scalar
    return Instance{e, l, p, k};
  }
  fail(Errc::BoundExceeded, "no split instance found");
}

ReferenceSetup reference_setup(const Instance& inst, uint64_t seed) {
  ReferenceSetup s;
  ec::TorsionField tf = ec::make_torsion_field(inst.curve, inst.torsion_degree, {}, seed);
  s.reference = ec::torsion_basis(tf, inst.l, seed ^ 0x243f6a8885a308d3ULL);
  s.job.curve = inst.curve;
  s.job.l = inst.l;
  s.job.mode = Mode::Thm1;
  s.job.global_value = pull_back_root_of_unity(tf.embed, s.reference.zeta, inst.l);
  return s;
}

}  // namespace frobclass::classify
