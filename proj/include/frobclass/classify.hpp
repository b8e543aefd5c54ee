#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobclass/conj.hpp"
#include "frobclass/ec.hpp"
#include "frobclass/nf.hpp"
#include "frobclass/pairing.hpp"
#include "frobclass/torsion.hpp"

namespace frobclass::classify {

enum class Mode { Thm1, Thm2 };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

// Coordinates of an explicit torsion basis over the torsion field, in the
// input model, as little-endian integer vectors in the field generator.
struct ExplicitBasis {
  std::vector<int64_t> x1, y1, x2, y2;
};

struct ClassificationJob {
  nf::NumberField field;
  // Five long coefficients a1, a2, a3, a4, a6, or two short ones a, b.
  std::vector<nf::NfElem> curve;
  uint64_t l = 0;
  nf::PrimeDatum prime;
  nf::GlobalPairingDatum global;
  Mode mode = Mode::Thm1;
  bool subgroup_hypothesis_asserted = false;
  // Modulus of the torsion field over F_p (degree f * k), little-endian.
  std::optional<std::vector<int64_t>> torsion_modulus;
  std::optional<ExplicitBasis> basis;
};

// The same job after reduction at the prime.
struct LocalJob {
  ec::Curve curve;  // over the residue field, keeping the input model
  uint64_t l = 0;
  Mode mode = Mode::Thm1;
  std::optional<ff::Elem> global_value;  // thm1
  std::optional<ff::Poly> global_poly;   // thm2
  std::optional<std::vector<uint64_t>> torsion_modulus;
  std::optional<ExplicitBasis> basis;
};

// Throws BadReduction, HypothesisViolated, InvalidInput, DenominatorDividesP.
LocalJob reduce_job(const ClassificationJob& job);

enum class Path { Charpoly, Torsion, Pairing };
std::string to_string(Path p);

struct CandidateVerdict {
  conj::Matrix sigma;
  std::string label;
  conj::Matrix conjugator;  // basis change from the working basis
  std::string q1, q2;       // adjusted basis, input model
  ff::Elem pairing;         // <Q1, Q2>_l pulled back to the residue field
  bool accepted = false;
  std::optional<uint64_t> h;
  std::string reason;
};

struct Evidence {
  uint64_t q = 0;
  uint64_t count = 0;
  int64_t trace = 0;
  uint64_t trace_mod_l = 0;
  uint64_t det_mod_l = 0;
  std::optional<ec::RationalTorsion> rational_torsion;
  std::optional<int> torsion_degree;
  std::optional<std::string> torsion_modulus;
  std::optional<conj::Matrix> frobenius_matrix;  // in the working basis
  std::optional<std::string> q1, q2;
  std::optional<ff::Elem> pairing_local;
  std::optional<ff::Elem> global_value;
  std::optional<ff::Poly> global_poly;
  std::optional<uint64_t> accepted_h;
};

struct ClassificationResult {
  uint64_t l = 0;
  Mode mode = Mode::Thm1;
  conj::ClassDescriptor gl_class;
  bool split = false;
  // Representative; empty when the class follows from the characteristic
  // polynomial alone.
  std::optional<conj::Matrix> sl_class;
  std::string label;
  Path path = Path::Charpoly;
  Evidence evidence;
  std::vector<CandidateVerdict> candidates;

  std::string sl_class_string() const;
};

// Throws Inconclusive / Ambiguous when zero / several candidates pass.
ClassificationResult classify(const ClassificationJob& job, uint64_t seed = ff::kDefaultSeed,
                              const pairing::PairingFn& pair = pairing::default_pairing);
ClassificationResult classify_local(const LocalJob& job, uint64_t seed = ff::kDefaultSeed,
                                    const pairing::PairingFn& pair = pairing::default_pairing);

// True iff m_reduced(value^h) = 0 for some h in H; the accepting h is
// written to h_out. value must have exact order l (OrderMismatch).
bool thm2_divisibility(const ff::Poly& m_reduced, const ff::Elem& value, uint64_t l, const ff::ResidueSubgroup& h,
                       uint64_t* h_out = nullptr);

// The element of the base field whose image under emb is x, for x an l-th
// root of unity; throws NotRootOfUnity if there is none.
ff::Elem pull_back_root_of_unity(const ff::Embedding& emb, const ff::Elem& x, uint64_t l);

struct BruteForceClass {
  conj::Matrix frobenius;  // in the reference basis
  conj::ClassDescriptor gl_class;
  std::optional<conj::Matrix> sl_rep;  // least element of the SL_2 class, if det = 1
  std::string label;
};

// Frobenius permutation of all l^2 - 1 torsion points, checked to be linear,
// written in the reference basis and matched against the SL_2 class table by
// exhaustive conjugation. No pairings.
BruteForceClass brute_force_class(const ec::TorsionBasis& reference, uint64_t seed = ff::kDefaultSeed);

// True if the pipeline result names the same SL_2 class (split) or GL_2 class.
bool same_class(const ClassificationResult& r, const BruteForceClass& b);

struct AuditReport {
  std::vector<std::string> checks;
};

// Re-derives the identities behind a result; throws AuditFailed naming the
// first one that fails.
AuditReport consistency_audit(const ClassificationResult& r);
AuditReport consistency_audit(const ClassificationJob& job, const ClassificationResult& r);

// The thm1 global value or thm2 polynomial with the exponent multiplied by
// the smallest non-square mod l.
LocalJob flip_global(const LocalJob& job);

// Seeded random instance over F_p, p = 1 mod l, p < p_max, with a split
// Frobenius class.
struct Instance {
  ec::Curve curve;
  uint64_t l = 0;
  uint64_t p = 0;
  int torsion_degree = 0;
};
Instance random_split_instance(uint64_t l, std::mt19937_64& rng, uint64_t p_max = 500);

// Reference basis for an instance and the thm1 job whose global value is its
// pairing, i.e. the reference basis plays the global basis.
struct ReferenceSetup {
  ec::TorsionBasis reference;
  LocalJob job;
};
ReferenceSetup reference_setup(const Instance& inst, uint64_t seed);

}  // namespace frobclass::classify
