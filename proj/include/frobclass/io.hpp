#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobclass/classify.hpp"

namespace frobclass::io {

enum class Format { Text, Tsv, Json };
Format parse_format(const std::string& s);

// Job files are JSON objects:
//   field    {"minpoly": [c0, ..., 1]}          (optional, default Q)
//   curve    {"long": [a1,a2,a3,a4,a6]} or {"short": [a, b]}
//   l        odd prime
//   prime    {"p": p, "g": [g0, ..., 1]}
//   global   {"value": elem} or {"minpoly": [elem, ..., elem]}
//   mode     "thm1" | "thm2"                     (optional, default thm1)
//   subgroup_hypothesis_asserted  bool           (optional)
//   torsion_modulus  [m0, ..., 1] over F_p       (optional)
//   basis    {"q1": [x, y], "q2": [x, y]}        (optional; integer vectors)
// An elem is a scalar or a list of scalars (coefficients of 1, a, a^2, ...);
// a scalar is an integer, a string "n/d", or inside a list a pair [n, d].
// Errors are InvalidInput naming the offending key.
classify::ClassificationJob parse_job(const std::string& json_text);
classify::ClassificationJob load_job(const std::string& path);

// Rational curve coefficients for scans: {"long": [...]} or {"short": [...]}.
std::vector<nf::Rational> parse_rational_curve(const std::string& json_text);
std::vector<nf::Rational> load_rational_curve(const std::string& path);

std::string read_file(const std::string& path);

// Ordered key/value view of a result; candidate entries are flattened as
// candidate.N.field.
std::vector<std::pair<std::string, std::string>> result_fields(const classify::ClassificationResult& r);
std::string format_result(const classify::ClassificationResult& r, Format f);

// Classes of SL_2(F_l): representative, size, GL_2 class, split flag and the
// other SL_2 class in the same GL_2 class (split classes only).
std::string format_classtable(uint64_t l, Format f);

}  // namespace frobclass::io
