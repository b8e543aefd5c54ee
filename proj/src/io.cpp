#include "frobclass/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace frobclass::io {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  fail(Errc::InvalidInput, "format must be text, tsv or json, got '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::InvalidInput, where + ": missing key '" + key + "'");
  return j.at(key);
}

int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(Errc::InvalidInput, where + ": expected an integer");
  if (j.is_number_unsigned() && j.get<uint64_t>() > static_cast<uint64_t>(INT64_MAX))
    fail(Errc::InvalidInput, where + ": integer out of range");
  return j.get<int64_t>();
}

uint64_t as_uint(const json& j, const std::string& where) {
  const int64_t v = as_int(j, where);
  if (v < 0) fail(Errc::InvalidInput, where + ": expected a nonnegative integer");
  return static_cast<uint64_t>(v);
}

std::vector<int64_t> int_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(Errc::InvalidInput, where + ": expected a nonempty list of integers");
  std::vector<int64_t> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

nf::Rational scalar(const json& j, const std::string& where, bool allow_pair) {
  try {
    if (j.is_number_integer()) return nf::Rational(as_int(j, where));
    if (j.is_string()) return nf::Rational::parse(j.get<std::string>());
    if (allow_pair && j.is_array() && j.size() == 2) return nf::Rational(as_int(j[0], where), as_int(j[1], where));
  } catch (const Error& e) {
    fail(Errc::InvalidInput, where + ": " + e.what());
  }
  fail(Errc::InvalidInput, where + ": expected a rational number");
}

nf::NfElem element(const nf::NumberField& f, const json& j, const std::string& where) {
  if (!j.is_array()) return nf::NfElem(f, {scalar(j, where, false)});
  if (j.empty()) fail(Errc::InvalidInput, where + ": empty coefficient list");
  std::vector<nf::Rational> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(scalar(j[i], where + "[" + std::to_string(i) + "]", true));
  return nf::NfElem(f, c);
}

// Re-raises library errors with the key that caused them.
template <typename Fn>
auto at_key(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.find(where) != std::string::npos) throw;
    throw Error(e.code(), where + ": " + msg);
  }
}

std::vector<const json*> curve_coeffs(const json& c, bool& is_long) {
  if (!c.is_object()) fail(Errc::InvalidInput, "curve: expected an object with 'long' or 'short'");
  const bool has_long = c.contains("long"), has_short = c.contains("short");
  if (has_long == has_short) fail(Errc::InvalidInput, "curve: give exactly one of 'long' or 'short'");
  is_long = has_long;
  const json& arr = c.at(has_long ? "long" : "short");
  const size_t want = has_long ? 5 : 2;
  if (!arr.is_array() || arr.size() != want)
    fail(Errc::InvalidInput, std::string("curve.") + (has_long ? "long" : "short") + ": expected " +
                                 std::to_string(want) + " coefficients");
  std::vector<const json*> out;
  for (const auto& x : arr) out.push_back(&x);
  return out;
}

}  // namespace

classify::ClassificationJob parse_job(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) fail(Errc::InvalidInput, "job: expected a JSON object");
  classify::ClassificationJob job;

  std::vector<int64_t> minpoly{0, 1};
  if (j.contains("field")) minpoly = int_list(need(j.at("field"), "minpoly", "field"), "field.minpoly");
  job.field = at_key("field.minpoly", [&] { return nf::NumberField::create(minpoly); });

  bool is_long = false;
  auto cs = curve_coeffs(need(j, "curve", "job"), is_long);
  for (size_t i = 0; i < cs.size(); ++i)
    job.curve.push_back(element(job.field, *cs[i], std::string("curve.") + (is_long ? "long" : "short") + "[" +
                                                        std::to_string(i) + "]"));

  job.l = as_uint(need(j, "l", "job"), "l");
  at_key("l", [&] { conj::require_odd_prime(job.l); });

  const json& pr = need(j, "prime", "job");
  const uint64_t p = as_uint(need(pr, "p", "prime"), "prime.p");
  const auto g = int_list(need(pr, "g", "prime"), "prime.g");
  job.prime = at_key("prime", [&] { return nf::prime_datum(job.field, p, g); });

  const json& gl = need(j, "global", "job");
  if (gl.is_object() && gl.contains("value")) {
    nf::NfElem v = element(job.field, gl.at("value"), "global.value");
    job.global = at_key("global.value", [&] { return nf::GlobalPairingDatum::from_value(v, job.l); });
  } else if (gl.is_object() && gl.contains("minpoly")) {
    const json& m = gl.at("minpoly");
    if (!m.is_array() || m.size() < 2) fail(Errc::InvalidInput, "global.minpoly: expected a list of coefficients");
    std::vector<nf::NfElem> c;
    for (size_t i = 0; i < m.size(); ++i)
      c.push_back(element(job.field, m[i], "global.minpoly[" + std::to_string(i) + "]"));
    job.global = at_key("global.minpoly", [&] { return nf::GlobalPairingDatum::from_minpoly(c, job.l); });
  } else {
    fail(Errc::InvalidInput, "global: expected 'value' or 'minpoly'");
  }

  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) fail(Errc::InvalidInput, "mode: expected a string");
    job.mode = at_key("mode", [&] { return classify::parse_mode(j.at("mode").get<std::string>()); });
  }
  if (j.contains("subgroup_hypothesis_asserted")) {
    const json& a = j.at("subgroup_hypothesis_asserted");
    if (!a.is_boolean()) fail(Errc::InvalidInput, "subgroup_hypothesis_asserted: expected true or false");
    job.subgroup_hypothesis_asserted = a.get<bool>();
  }
  if (j.contains("torsion_modulus")) job.torsion_modulus = int_list(j.at("torsion_modulus"), "torsion_modulus");
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    auto pt = [&](const char* key, std::vector<int64_t>& x, std::vector<int64_t>& y) {
      const std::string w = std::string("basis.") + key;
      const json& q = need(b, key, "basis");
      if (!q.is_array() || q.size() != 2) fail(Errc::InvalidInput, w + ": expected [x, y]");
      x = q[0].is_array() ? int_list(q[0], w + "[0]") : std::vector<int64_t>{as_int(q[0], w + "[0]")};
      y = q[1].is_array() ? int_list(q[1], w + "[1]") : std::vector<int64_t>{as_int(q[1], w + "[1]")};
    };
    classify::ExplicitBasis eb;
    pt("q1", eb.x1, eb.y1);
    pt("q2", eb.x2, eb.y2);
    job.basis = eb;
  }
  return job;
}

classify::ClassificationJob load_job(const std::string& path) { return parse_job(read_file(path)); }

std::vector<nf::Rational> parse_rational_curve(const std::string& json_text) {
  const json j = parse_json(json_text);
  const json& c = j.is_object() && j.contains("curve") ? j.at("curve") : j;
  bool is_long = false;
  auto cs = curve_coeffs(c, is_long);
  std::vector<nf::Rational> out;
  for (size_t i = 0; i < cs.size(); ++i)
    out.push_back(scalar(*cs[i], std::string("curve.") + (is_long ? "long" : "short") + "[" + std::to_string(i) + "]",
                         false));
  return out;
}

std::vector<nf::Rational> load_rational_curve(const std::string& path) {
  return parse_rational_curve(read_file(path));
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> result_fields(const classify::ClassificationResult& r) {
  std::vector<std::pair<std::string, std::string>> f;
  const auto& ev = r.evidence;
  auto add = [&](std::string k, std::string v) { f.emplace_back(std::move(k), std::move(v)); };
  add("l", std::to_string(r.l));
  add("mode", classify::to_string(r.mode));
  add("q", std::to_string(ev.q));
  add("count", std::to_string(ev.count));
  add("trace", std::to_string(ev.trace));
  add("trace_mod_l", std::to_string(ev.trace_mod_l));
  add("det_mod_l", std::to_string(ev.det_mod_l));
  add("gl_class", r.gl_class.name());
  add("gl_kind", conj::kind_name(r.gl_class.kind));
  add("split", r.split ? "true" : "false");
  add("path", classify::to_string(r.path));
  if (ev.rational_torsion) add("rational_torsion", ec::to_string(*ev.rational_torsion));
  if (ev.torsion_degree) add("torsion_degree", std::to_string(*ev.torsion_degree));
  if (ev.torsion_modulus) add("torsion_field", *ev.torsion_modulus);
  if (ev.frobenius_matrix) add("frobenius_matrix", ev.frobenius_matrix->to_string());
  if (ev.q1) add("basis_q1", *ev.q1);
  if (ev.q2) add("basis_q2", *ev.q2);
  if (ev.pairing_local) add("pairing_local", ev.pairing_local->to_string());
  if (ev.global_value) add("global_reduced", ev.global_value->to_string());
  if (ev.global_poly) add("global_reduced", ev.global_poly->to_string());
  for (size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    const std::string k = "candidate." + std::to_string(i) + ".";
    add(k + "sigma", c.sigma.to_string());
    add(k + "label", c.label);
    add(k + "conjugator", c.conjugator.to_string());
    add(k + "q1", c.q1);
    add(k + "q2", c.q2);
    add(k + "pairing", c.pairing.to_string());
    add(k + "verdict", c.accepted ? "accept" : "reject");
    if (c.h) add(k + "h", std::to_string(*c.h));
    add(k + "reason", c.reason);
  }
  if (ev.accepted_h) add("accepted_h", std::to_string(*ev.accepted_h));
  add("sl_class", r.sl_class_string());
  add("label", r.label);
  return f;
}

std::string format_result(const classify::ClassificationResult& r, Format fmt) {
  const auto fields = result_fields(r);
  std::ostringstream os;
  if (fmt == Format::Json) {
    json j = json::object();
    json cands = json::array();
    for (const auto& [k, v] : fields) {
      if (k.rfind("candidate.", 0) == 0) continue;
      j[k] = v;
    }
    for (const auto& c : r.candidates) {
      json cj = {{"sigma", c.sigma.to_string()}, {"label", c.label},     {"conjugator", c.conjugator.to_string()},
                 {"q1", c.q1},                   {"q2", c.q2},           {"pairing", c.pairing.to_string()},
                 {"accepted", c.accepted},       {"reason", c.reason}};
      if (c.h) cj["h"] = *c.h;
      cands.push_back(cj);
    }
    // Numeric fields as numbers, flags as booleans.
    for (const char* k : {"l", "q", "count", "trace", "trace_mod_l", "det_mod_l", "torsion_degree", "accepted_h"})
      if (j.contains(k)) j[k] = std::stoll(j[k].get<std::string>());
    j["split"] = r.split;
    j["candidates"] = cands;
    os << j.dump() << "\n";
    return os.str();
  }
  const char* sep = fmt == Format::Tsv ? "\t" : ": ";
  for (const auto& [k, v] : fields) os << k << sep << v << "\n";
  return os.str();
}

std::string format_classtable(uint64_t l, Format fmt) {
  conj::require_odd_prime(l);
  const auto rows = conj::sl2_class_representatives(l);
  auto partner = [&](const conj::ClassRow& r) -> std::string {
    if (!r.desc.splits()) return "-";
    for (const auto& o : rows)
      if (o.desc.splits() && o.desc.trace == r.desc.trace && o.desc.square_label != r.desc.square_label)
        return o.rep.to_string();
    return "-";
  };
  auto gl_name = [](conj::ClassDescriptor d) {
    d.square_label.reset();
    return d.name();
  };
  std::ostringstream os;
  if (fmt == Format::Json) {
    for (const auto& r : rows)
      os << json{{"rep", r.rep.to_string()}, {"size", r.size},          {"gl_class", gl_name(r.desc)},{"sl_class", r.desc.name()},
                 {"splits", r.desc.splits()}, {"partner", partner(r)}}
                .dump()
         << "\n";
    return os.str();
  }
  os << "rep\tsize\tgl_class\tsl_class\tsplits\tpartner\n";
  for (const auto& r : rows)
    os << r.rep.to_string() << '\t' << r.size << '\t' << gl_name(r.desc) << '\t' << r.desc.name() << '\t' << (r.desc.splits() ? "yes" : "no")
       << '\t' << partner(r) << '\n';
  return os.str();
}

}  // namespace frobclass::io
