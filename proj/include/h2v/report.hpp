#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace h2v {

// Default tolerance policy for double-precision checks: relative 1e-10 with
// an absolute floor of 1e-12.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;
};

// Structured record of one numerical check.  `passed` always equals
// (abs_err <= tol_abs or rel_err <= tol_rel); rebuilt rather than trusted
// when deserializing.
struct VerificationReport {
  std::string id;                   // unique instance id, e.g. "orthonormal[a=0.5,m=1,n=0,p=1,q=0]"
  std::string family;               // which formula family is being checked
  nlohmann::ordered_json inputs;    // structured inputs (and auxiliary diagnostics)
  std::complex<double> computed{};
  std::complex<double> reference{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
  std::string warning;

  void finalize();  // fills abs_err/rel_err/passed from computed vs reference
};

VerificationReport make_report(std::string id, std::string family, std::complex<double> computed,
                               std::complex<double> reference, Tolerance tol,
                               nlohmann::ordered_json inputs = nlohmann::ordered_json::object());

// One JSON object per report; runtime_ms is emitted only on demand so that
// repeated runs with the same seed produce byte-identical files.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timing = false);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

std::string summary_csv_header();
std::string summary_csv_line(const VerificationReport& r);

}  // namespace h2v
