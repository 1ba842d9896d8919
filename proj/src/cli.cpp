#include "h2v/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "h2v/hermite_exact.hpp"
#include "h2v/verify.hpp"

namespace h2v::cli {

namespace fs = std::filesystem;

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad number: " + part);
    return v;
  };

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) return {parse_real(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last top-level +/- (one not following an exponent marker).
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body)};
  return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

namespace {

// Writes via a temporary in the same directory; no partial files on failure.
void write_file_atomic(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string());
    f << contents;
    if (!f.good()) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path.string());
}

struct VerifyOptions {
  std::string suite = "all";
  std::string alpha_csv = "0.25,0.5,0.75";
  int max_degree = 4;
  int nodes = 16;
  std::uint64_t seed = 42;
  long mc_samples = 400000;
  std::string out_dir = ".";
  double tol_rel = -1.0;
  double tol_abs = -1.0;
  bool timing = false;
};

SuiteConfig to_config(const VerifyOptions& opt) {
  SuiteConfig cfg;
  cfg.alpha_list.clear();
  std::stringstream ss(opt.alpha_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) cfg.alpha_list.push_back(std::stod(item));
  }
  if (cfg.alpha_list.empty()) throw std::invalid_argument("empty --alpha list");
  cfg.max_degree = opt.max_degree;
  cfg.nodes_per_axis = opt.nodes;
  cfg.seed = opt.seed;
  cfg.mc_samples = opt.mc_samples;
  return cfg;
}

Tolerance suite_tolerance(const std::string& suite) {
  if (suite == "bargmann") return {1e-7, 1e-7};
  if (suite == "kernels") return {1e-8, 1e-8};
  return {1e-9, 1e-9};
}

Reports run_suite(const std::string& suite, const VerifyOptions& opt) {
  SuiteConfig cfg = to_config(opt);
  cfg.tol = suite_tolerance(suite);
  auto apply_overrides = [&opt](SuiteConfig& c) {
    if (opt.tol_rel >= 0.0) c.tol.rel = opt.tol_rel;
    if (opt.tol_abs >= 0.0) c.tol.abs = opt.tol_abs;
  };
  apply_overrides(cfg);

  IdentityCaps caps;
  if (opt.max_degree != 4) {
    // A user-set degree rescales every exact sweep together.
    caps.triple = opt.max_degree;
    caps.rodrigues = std::min(opt.max_degree, 8);
    caps.raising_lowering = std::min(opt.max_degree, 10);
    caps.natural_link = std::min(opt.max_degree, 8);
    caps.laguerre = std::min(opt.max_degree, 7);
    caps.coefficient = std::min(opt.max_degree, 5);
  }

  Reports all;
  auto append = [&all](Reports rs) {
    for (auto& r : rs) all.push_back(std::move(r));
  };

  if (suite == "identities" || suite == "all") append(identity_suite(caps));
  if (suite == "orthogonality" || suite == "all") {
    append(orthogonality_suite(cfg));
    append(hfunction_orthonormality(cfg));
    append(ito_orthogonality(cfg));
  }
  if (suite == "kernels" || suite == "all") {
    SuiteConfig kcfg = cfg;
    kcfg.tol = suite_tolerance("kernels");
    apply_overrides(kcfg);
    append(kernel_suite(kcfg));
    kcfg.tol = {1e-8, 1e-8};
    apply_overrides(kcfg);
    kcfg.nodes_per_axis = std::max(cfg.nodes_per_axis, 36);
    append(reproducing_suite(kcfg));
  }
  if (suite == "bargmann" || suite == "all") {
    SuiteConfig bcfg = cfg;
    bcfg.tol = suite_tolerance("bargmann");
    apply_overrides(bcfg);
    bcfg.nodes_per_axis = std::max(cfg.nodes_per_axis, 20);
    append(bargmann_suite(bcfg));
  }
  if (suite == "limits" || suite == "all") {
    append(kernel_limit_suite(cfg));
  }
  if (suite == "all") {
    append(series_suite(cfg));
    append(integral_representation_suite(cfg));
    append(bound_suite(10000, 10, 3.0, cfg.seed));
  }
  if (all.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return all;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Reports reports = run_suite(opt.suite, opt);

  std::string jsonl;
  std::string csv = summary_csv_header() + "\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    jsonl += report_to_json(r, opt.timing).dump();
    jsonl += "\n";
    csv += summary_csv_line(r) + "\n";
    if (!r.passed) ++failed;
  }

  const fs::path dir(opt.out_dir);
  if (!dir.empty() && !fs::exists(dir)) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string());
  }
  write_file_atomic(dir / "reports.jsonl", jsonl);
  write_file_atomic(dir / "summary.csv", csv);

  out << "suite " << opt.suite << ": " << reports.size() - failed << "/" << reports.size()
      << " checks passed\n";
  if (failed > 0) {
    for (const auto& r : reports) {
      if (!r.passed) out << "  FAIL " << r.id << " (abs_err=" << r.abs_err << ")\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-variable holomorphic Hermite polynomials: evaluation and verification"};
  app.set_config("--config");
  app.fallthrough();
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate H_{m,n} at a point");
  int em = 0, en = 0;
  std::string ez1 = "0", ez2 = "0", emethod = "recurrence";
  eval_cmd->add_option("--m", em)->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--n", en)->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--z1", ez1);
  eval_cmd->add_option("--z2", ez2);
  eval_cmd->add_option("--method", emethod)
      ->check(CLI::IsMember({"direct", "recurrence", "hermite1d", "laguerre_diagonal"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  VerifyOptions vopt;
  verify_cmd->add_option("suite", vopt.suite)
      ->check(CLI::IsMember({"identities", "orthogonality", "kernels", "bargmann", "limits", "all"}));
  verify_cmd->add_option("--alpha", vopt.alpha_csv, "comma-separated deformation parameters");
  verify_cmd->add_option("--max-degree", vopt.max_degree);
  verify_cmd->add_option("--nodes", vopt.nodes, "quadrature nodes per axis");
  verify_cmd->add_option("--seed", vopt.seed);
  verify_cmd->add_option("--mc-samples", vopt.mc_samples);
  verify_cmd->add_option("--out-dir", vopt.out_dir);
  verify_cmd->add_option("--tolerance-rel", vopt.tol_rel);
  verify_cmd->add_option("--tolerance-abs", vopt.tol_abs);
  verify_cmd->add_flag("--timing", vopt.timing, "include runtime_ms in reports.jsonl");

  // export
  auto* export_cmd = app.add_subcommand("export", "export data for external tools");
  export_cmd->require_subcommand(1);
  auto* poly_cmd = export_cmd->add_subcommand("polynomial", "exact coefficients as JSON");
  int pm = 0, pn = 0;
  std::string poly_out;
  poly_cmd->add_option("--m", pm)->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--n", pn)->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--out", poly_out);

  auto* rule_cmd = export_cmd->add_subcommand("quadrature-rule", "nodes and weights as CSV");
  int rn = 8;
  std::string rule_out;
  rule_cmd->add_option("--n", rn, "rule order");
  rule_cmd->add_option("--out", rule_out);

  auto* grid_cmd = export_cmd->add_subcommand("kernel-grid",
                                              "kernel values on the slice z=(x+iy, x-iy) as CSV");
  double galpha = 0.5;
  std::string gw = "0,0", ggrid = "9x9", gcenter = "0,0";
  double gspan = 2.0;
  std::string grid_out;
  grid_cmd->add_option("--alpha", galpha);
  grid_cmd->add_option("--w", gw, "kernel second slot, two complex literals 'w1,w2'");
  grid_cmd->add_option("--grid", ggrid, "ROWSxCOLS");
  grid_cmd->add_option("--center", gcenter, "grid center 'x,y'");
  grid_cmd->add_option("--span", gspan, "half-width of the grid");
  grid_cmd->add_option("--out", grid_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval_cmd) {
      const auto z1 = parse_complex(ez1);
      const auto z2 = parse_complex(ez2);
      EvalMethod method = EvalMethod::recurrence;
      if (emethod == "direct") method = EvalMethod::direct;
      if (emethod == "hermite1d") method = EvalMethod::hermite1d;
      if (emethod == "laguerre_diagonal") method = EvalMethod::laguerre_diagonal;
      const cplx v = eval_hermite({em, en}, {z1, z2}, method);
      nlohmann::ordered_json j;
      j["m"] = em;
      j["n"] = en;
      j["z1"] = ez1;
      j["z2"] = ez2;
      j["method"] = emethod;
      j["value_re"] = v.real();
      j["value_im"] = v.imag();
      out << j.dump() << "\n";
      return 0;
    }

    if (*verify_cmd) {
      if (const char* env_seed = std::getenv("H2V_SEED")) {
        vopt.seed = std::strtoull(env_seed, nullptr, 10);
      }
      return cmd_verify(vopt, out);
    }

    if (*poly_cmd) {
      nlohmann::json j = hermite_exact_direct({pm, pn});
      const std::string text = j.dump() + "\n";
      if (poly_out.empty()) {
        out << text;
      } else {
        write_file_atomic(poly_out, text);
      }
      return 0;
    }
    if (*rule_cmd) {
      std::ostringstream os;
      export_rule_csv(gauss_hermite_rule(rn), os);
      if (rule_out.empty()) {
        out << os.str();
      } else {
        write_file_atomic(rule_out, os.str());
      }
      return 0;
    }
    if (*grid_cmd) {
      const auto comma = gw.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("--w needs 'w1,w2'");
      const ComplexPoint w{parse_complex(gw.substr(0, comma)), parse_complex(gw.substr(comma + 1))};
      const auto ccomma = gcenter.find(',');
      if (ccomma == std::string::npos) throw std::invalid_argument("--center needs 'x,y'");
      const double cx = std::stod(gcenter.substr(0, ccomma));
      const double cy = std::stod(gcenter.substr(ccomma + 1));
      const auto x_pos = ggrid.find('x');
      if (x_pos == std::string::npos) throw std::invalid_argument("--grid needs ROWSxCOLS");
      const int rows = std::stoi(ggrid.substr(0, x_pos));
      const int cols = std::stoi(ggrid.substr(x_pos + 1));
      if (rows < 1 || cols < 1) throw std::invalid_argument("grid must be at least 1x1");

      const Alpha a(galpha);
      std::ostringstream os;
      os << "x,y,re,im\n";
      char line[128];
      for (int r = 0; r < rows; ++r) {
        const double y = rows == 1 ? cy : cy - gspan + 2.0 * gspan * r / (rows - 1);
        for (int c = 0; c < cols; ++c) {
          const double x = cols == 1 ? cx : cx - gspan + 2.0 * gspan * c / (cols - 1);
          const cplx k = kernel_closed(a, {{cplx(x, y), cplx(x, -y)}, w});
          std::snprintf(line, sizeof(line), "%.12g,%.12g,%.16g,%.16g\n", x, y, k.real(), k.imag());
          os << line;
        }
      }
      if (grid_out.empty()) {
        out << os.str();
      } else {
        write_file_atomic(grid_out, os.str());
      }
      return 0;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace h2v::cli
