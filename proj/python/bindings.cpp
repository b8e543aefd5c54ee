#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobclass/io.hpp"
#include "frobclass/scan.hpp"
#include "frobclass/selftest.hpp"

namespace py = pybind11;
using namespace frobclass;

namespace {

std::string classify_job(const std::string& job_json, std::optional<uint64_t> seed, const std::string& format) {
  const auto job = io::parse_job(job_json);
  const auto r = classify::classify(job, seed.value_or(ff::kDefaultSeed));
  return io::format_result(r, io::parse_format(format));
}

uint64_t count_points(int64_t a, int64_t b, uint64_t p) {
  const ff::Field f = ff::Field::prime(p);
  return ec::count_points(ec::Curve::short_form(f.from_int(a), f.from_int(b)));
}

std::vector<std::tuple<std::string, size_t, std::vector<std::string>>> selftest_all(std::optional<uint64_t> seed,
                                                                                    bool fault) {
  selftest::Options o;
  if (seed) o.seed = *seed;
  if (fault) o.pair = selftest::faulty_pairing_sign();
  std::vector<std::tuple<std::string, size_t, std::vector<std::string>>> out;
  py::gil_scoped_release release;
  for (const auto& s : selftest::run_all(o)) out.emplace_back(s.name, s.checks, s.failures);
  return out;
}

std::string scan_tsv(const std::string& curve_json, const std::vector<uint64_t>& ls, size_t primes, unsigned threads,
                     std::optional<uint64_t> seed, uint64_t global_exponent) {
  scan::ScanConfig c;
  c.curve = io::parse_rational_curve(curve_json);
  c.ls = ls;
  c.primes = primes;
  c.threads = threads;
  c.seed = seed.value_or(ff::kDefaultSeed);
  c.global_exponent = global_exponent;
  scan::ScanOutput out;
  {
    py::gil_scoped_release release;
    out = scan::run_scan(c);
  }
  std::string s = scan::tsv_header();
  for (const auto& r : out.rows) s += scan::tsv_row(r);
  return s + scan::format_summary(out, false);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius conjugacy classes via Weil pairing comparisons";
  static py::exception<Error> err(m, "FrobclassError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(err, e.what());
    }
  });

  m.attr("default_seed") = ff::kDefaultSeed;
  m.def("classify_json", &classify_job, py::arg("job_json"), py::arg("seed") = py::none(),
        py::arg("format") = "json", "Classify one job given as JSON text; returns the formatted result.");
  m.def("classtable", [](uint64_t l) { return io::format_classtable(l, io::Format::Json); }, py::arg("l"),
        "SL_2(F_l) classes as JSON lines.");
  m.def("count_points", &count_points, py::arg("a"), py::arg("b"), py::arg("p"),
        "#E(F_p) for y^2 = x^3 + a x + b.");
  m.def("selftest", &selftest_all, py::arg("seed") = py::none(), py::arg("inject_fault") = false,
        "Runs the invariant suites; returns (name, checks, failures) per suite.");
  m.def("scan_tsv", &scan_tsv, py::arg("curve_json"), py::arg("ls"), py::arg("primes"), py::arg("threads") = 1,
        py::arg("seed") = py::none(), py::arg("global_exponent") = 1, "Multi-prime scan as TSV with summary.");
}
