#include "h2v/report.hpp"

#include <cmath>
#include <cstdio>

namespace h2v {

void VerificationReport::finalize() {
  abs_err = std::abs(computed - reference);
  const double ref_mag = std::abs(reference);
  rel_err = ref_mag > 0.0 ? abs_err / ref_mag : (abs_err == 0.0 ? 0.0 : INFINITY);
  passed = (abs_err <= tol_abs) || (rel_err <= tol_rel);
}

VerificationReport make_report(std::string id, std::string family, std::complex<double> computed,
                               std::complex<double> reference, Tolerance tol,
                               nlohmann::ordered_json inputs) {
  VerificationReport r;
  r.id = std::move(id);
  r.family = std::move(family);
  r.inputs = std::move(inputs);
  r.computed = computed;
  r.reference = reference;
  r.tol_abs = tol.abs;
  r.tol_rel = tol.rel;
  r.finalize();
  return r;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["family"] = r.family;
  j["inputs"] = r.inputs;
  j["computed"] = {r.computed.real(), r.computed.imag()};
  j["reference"] = {r.reference.real(), r.reference.imag()};
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["tol_abs"] = r.tol_abs;
  j["tol_rel"] = r.tol_rel;
  j["passed"] = r.passed;
  if (include_timing) j["runtime_ms"] = r.runtime_ms;
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.inputs = j.at("inputs");
  r.computed = {j.at("computed")[0].get<double>(), j.at("computed")[1].get<double>()};
  r.reference = {j.at("reference")[0].get<double>(), j.at("reference")[1].get<double>()};
  r.tol_abs = j.at("tol_abs").get<double>();
  r.tol_rel = j.at("tol_rel").get<double>();
  if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<double>();
  if (j.contains("warning")) r.warning = j.at("warning").get<std::string>();
  r.finalize();
  return r;
}

std::string summary_csv_header() { return "id,family,max_err,passed"; }

std::string summary_csv_line(const VerificationReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", r.abs_err);
  return r.id + "," + r.family + "," + buf + "," + (r.passed ? "1" : "0");
}

}  // namespace h2v
