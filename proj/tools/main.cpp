// Command-line front end: construct family members, verify their curvature
// identities, scan parameter grids, and emit JSON/CSV reports.
//
// Exit codes: 0 all requested checks pass, 1 a check failed (report still
// written), 2 configuration or parse failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ehverify/einstein5d.hpp"
#include "ehverify/energy.hpp"
#include "ehverify/error.hpp"
#include "ehverify/families.hpp"
#include "ehverify/frame.hpp"
#include "ehverify/numeric.hpp"
#include "ehverify/profiles.hpp"

using namespace ehverify;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr size_t kScanCap = 1000000;

// ---------------------------------------------------------------------------
// option parsing

// "x" for a single value, "lo:hi:count" for an inclusive grid.
struct RangeSpec {
  double lo = 0.0, hi = 0.0;
  int count = 1;

  std::vector<double> values() const {
    std::vector<double> out;
    if (count == 1) {
      out.push_back(lo);
      return out;
    }
    for (int i = 0; i < count; ++i)
      out.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    return out;
  }
};

// "n" for a single order, "lo:hi" for the inclusive integer range.
struct IntRange {
  int lo = 1, hi = 1;

  std::vector<int> values() const {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& text) {
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("not a number: " + text);
}

int parse_int(const std::string& text) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("not an integer: " + text);
}

RangeSpec parse_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  RangeSpec range;
  if (parts.size() == 1) {
    range.lo = range.hi = parse_double(parts[0]);
    range.count = 1;
  } else if (parts.size() == 3) {
    range.lo = parse_double(parts[0]);
    range.hi = parse_double(parts[1]);
    range.count = parse_int(parts[2]);
  } else {
    throw CLI::ValidationError("expected VALUE or LO:HI:COUNT, got " + text);
  }
  return range;
}

IntRange parse_int_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  IntRange range;
  if (parts.size() == 1) {
    range.lo = range.hi = parse_int(parts[0]);
  } else if (parts.size() == 2) {
    range.lo = parse_int(parts[0]);
    range.hi = parse_int(parts[1]);
  } else {
    throw CLI::ValidationError("expected N or LO:HI, got " + text);
  }
  return range;
}

// single-spec subcommands take one value per parameter, never a range
double single_value(const std::string& text, const char* flag) {
  const RangeSpec range = parse_range(text);
  if (range.count != 1)
    throw CLI::ValidationError(std::string(flag) +
                               " takes a single value here, got " + text);
  return range.lo;
}

int single_order(const std::string& text, const char* flag) {
  const IntRange range = parse_int_range(text);
  if (range.lo != range.hi)
    throw CLI::ValidationError(std::string(flag) +
                               " takes a single value here, got " + text);
  return range.lo;
}

struct Options {
  std::string family = "type2";
  std::string B_text = "1";
  std::string n_text = "3";
  std::string C_text = "0";
  double c1 = 1.0;
  double c2 = 0.0;
  double tol_residual = 1e-9;
  double tol_derivative = 1e-6;
  double r_max = 0.0;  // 0 selects the per-spec default
  int workers = 0;     // 0 defers to EHVERIFY_WORKERS, then the hardware
  std::string json_path;
  std::string csv_path;
};

void add_common_options(CLI::App* cmd, Options& opt, double tol_residual_default) {
  opt.tol_residual = tol_residual_default;
  cmd->add_option("--family", opt.family,
                  "type1, type2, zero-scalar, classic-eh, hyperbolic");
  cmd->add_option("--B", opt.B_text, "curvature scale (or LO:HI:COUNT for scan)");
  cmd->add_option("--n", opt.n_text, "bolt order (or LO:HI for scan)");
  cmd->add_option("--C", opt.C_text, "free parameter (or LO:HI:COUNT for scan)");
  cmd->add_option("--tol-residual", opt.tol_residual, "residual tolerance");
  cmd->add_option("--tol-derivative", opt.tol_derivative,
                  "analytic-vs-finite-difference tolerance");
  cmd->add_option("--r-max", opt.r_max, "outer radius for energy extrapolation");
  cmd->add_option("--workers", opt.workers,
                  "scan worker threads (default: EHVERIFY_WORKERS, then hardware)");
  cmd->add_option("--json", opt.json_path, "write a JSON report to this path");
  cmd->add_option("--csv", opt.csv_path, "write a CSV report to this path");
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EHVERIFY_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------------------
// report plumbing

std::string format_full(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("invalid-argument", "cannot open for writing: " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_json_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  write_atomic(path, report.dump(2) + "\n");
}

json provenance(double value, const char* name, const char* formula) {
  return json{{"value", value}, {"name", name}, {"formula", formula}};
}

json config_echo(const char* command, const Options& opt) {
  return json{{"command", command},
              {"family", opt.family},
              {"B", opt.B_text},
              {"n", opt.n_text},
              {"C", opt.C_text},
              {"tol_residual", opt.tol_residual},
              {"tol_derivative", opt.tol_derivative},
              {"r_max", opt.r_max}};
}

// ---------------------------------------------------------------------------
// family dispatch

FamilySpec construct_spec(const std::string& family, double B, int n, double C) {
  const Family fam = family_from_name(family);
  switch (fam) {
    case Family::TypeI: return type1_construct(B, n, C);
    case Family::TypeII: return type2_construct(B, n, C);
    case Family::ZeroScalar:
      if (C != 0.0) fail("parse-error", "zero-scalar takes no C parameter");
      return zero_scalar_construct(B, n);
    case Family::ClassicEH:
      if (C != 0.0) fail("parse-error", "classic-eh takes no C parameter");
      return classic_eh_spec(B);
    case Family::Hyperbolic:
      if (C != 0.0) fail("parse-error", "hyperbolic takes no C parameter");
      return hyperbolic_spec(B);
  }
  fail("parse-error", "unknown family");
}

// codes that mean "the requested parameters are rejected", as opposed to a
// configuration mistake
bool is_rejection(const std::string& code) {
  return code == "inadmissible-C" || code == "inadmissible-n" ||
         code == "smoothness-violated" || code == "no-positive-root" ||
         code == "no-convergence" || code == "not-converged" ||
         code == "not-ALH";
}

double scalar_target(Family family, double B) {
  switch (family) {
    case Family::TypeI: return -24.0 * B;
    case Family::TypeII: return -12.0 * B;
    case Family::Hyperbolic: return -12.0 * B;
    case Family::ZeroScalar:
    case Family::ClassicEH: return 0.0;
  }
  fail("invalid-argument", "scalar_target: unknown family");
}

std::vector<double> sample_radii(const FamilySpec& spec, int count) {
  const double lo = std::max(1.02 * spec.r0, 1e-2);
  const double hi = 100.0 * std::max({spec.r0, 1.0, 1.0 / std::sqrt(spec.B)});
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return out;
}

double default_r_max(const FamilySpec& spec) {
  return 1000.0 * std::max({spec.r0, 1.0, 1.0 / std::sqrt(spec.B)});
}

const char* r0_formula(Family family) {
  switch (family) {
    case Family::TypeI:
      return "r0 = sqrt((n-2+sqrt((n-2)^2-12 B C))/(6B))";
    case Family::TypeII:
      return "r0^2 = largest root of t^3+((4-n^2)/(4B))t^2+(nC/4)t-B C^2/16";
    case Family::ZeroScalar: return "r0 = (B/(n-1))^(1/4)";
    case Family::ClassicEH: return "r0 = B^(1/4)";
    case Family::Hyperbolic: return "no bolt";
  }
  return "";
}

const char* A_formula(Family family) {
  switch (family) {
    case Family::TypeI:
      return "A = ((1-2n+sqrt((n-2)^2-12 B C))/3) r0^4";
    case Family::TypeII: return "A = -r0^4 - sqrt(1+B r0^2) C";
    case Family::ZeroScalar: return "A = -((n-2)/2) sqrt(B/(n-1))";
    case Family::ClassicEH:
    case Family::Hyperbolic: return "A = 0";
  }
  return "";
}

// ---------------------------------------------------------------------------
// construct

json spec_result(const FamilySpec& spec) {
  return json{{"admissibility", admissibility_name(spec.admissibility)},
              {"r0", provenance(spec.r0, "bolt-radius", r0_formula(spec.family))},
              {"A", provenance(spec.A, "profile-coefficient", A_formula(spec.family))},
              {"psi_period", spec.psi_period},
              {"h_residual", smoothness_residual(spec)}};
}

int cmd_construct(const Options& opt) {
  json report{{"schema_version", kSchemaVersion},
              {"config", config_echo("construct", opt)}};
  const double B = single_value(opt.B_text, "--B");
  const int n = single_order(opt.n_text, "--n");
  const double C = single_value(opt.C_text, "--C");
  try {
    const FamilySpec spec = construct_spec(opt.family, B, n, C);
    report["result"] = spec_result(spec);
    report["result"]["pass"] = true;
    write_json_report(opt.json_path, report);
    std::printf("constructed %s: r0 = %s, A = %s, admissibility = %s\n",
                opt.family.c_str(), format_full(spec.r0).c_str(),
                format_full(spec.A).c_str(),
                admissibility_name(spec.admissibility));
    return 0;
  } catch (const Error& err) {
    const std::string code = err.code();
    if (!is_rejection(code)) throw;
    report["result"] = json{{"admissibility", code},
                            {"message", err.what()},
                            {"pass", false}};
    write_json_report(opt.json_path, report);
    std::printf("construct refused: %s\n", err.what());
    return 1;
  }
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<CheckResult> run_verify_checks(const FamilySpec& spec,
                                           const Options& opt) {
  std::vector<CheckResult> checks;
  const RadialProfile prof = profile(spec);
  const BiaxialMetric metric = make_metric(prof);
  const std::vector<double> radii = sample_radii(spec, 40);

  // scalar curvature sits on the family constant
  {
    const double target = scalar_target(spec.family, spec.B);
    const double scale = std::max(std::abs(target), spec.B);
    double worst = 0.0;
    for (double r : radii)
      worst = std::max(worst,
                       std::abs(curvature(metric, r).scalar - target) / scale);
    checks.push_back({"scalar-constant", worst, opt.tol_residual,
                      worst <= opt.tol_residual});
  }

  // Ricci diagonal matches the family table
  {
    double worst = 0.0;
    for (double r : radii) {
      const CurvatureFrame frame = curvature(metric, r);
      const double r4 = r * r * r * r;
      double want[4];
      switch (spec.family) {
        case Family::TypeI:
          want[0] = -6.0 * spec.B + 2.0 * spec.C / r4;
          want[1] = -6.0 * spec.B - 2.0 * spec.C / r4;
          want[2] = want[1];
          want[3] = want[0];
          break;
        case Family::TypeII:
          want[0] = -3.0 * spec.B - spec.A * spec.B / r4;
          want[1] = -3.0 * spec.B + spec.A * spec.B / r4;
          want[2] = want[1];
          want[3] = want[0];
          break;
        case Family::Hyperbolic:
          want[0] = want[1] = want[2] = want[3] = -3.0 * spec.B;
          break;
        case Family::ClassicEH:
          want[0] = want[1] = want[2] = want[3] = 0.0;
          break;
        case Family::ZeroScalar: {
          // no closed table; only the vanishing trace is pinned
          double trace = 0.0;
          for (double ric : frame.ricci_diag) trace += ric;
          worst = std::max(worst, std::abs(trace) / spec.B);
          continue;
        }
      }
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(frame.ricci_diag[i] - want[i]) /
                                    std::max(1.0, std::abs(want[i])));
    }
    checks.push_back({"ricci-table", worst, opt.tol_residual,
                      worst <= opt.tol_residual});
  }

  // cone angle closes at the bolt
  {
    const double value = std::abs(smoothness_residual(spec));
    const double tol = opt.tol_residual * spec.n;
    checks.push_back({"smoothness", value, tol, value <= tol});
  }

  // closed-form bolt radius against bisection
  if (spec.r0 > 0.0) {
    const double r0b = bisect_largest_root(
        [&](double r) { return eval_fsq(prof, r, 0); }, 0.5 * spec.r0,
        4.0 * spec.r0, 1e-12, 4096);
    const double value = std::abs(r0b - spec.r0) / std::max(1.0, spec.r0);
    checks.push_back({"bolt-radius", value, opt.tol_residual,
                      value <= opt.tol_residual});
  }

  // analytic curvature against the finite-difference route
  {
    const BiaxialMetric fd = make_metric_fd(prof);
    double worst = 0.0;
    for (size_t i = 0; i < radii.size(); i += 4) {
      const CurvatureFrame fa = curvature(metric, radii[i]);
      const CurvatureFrame ff = curvature(fd, radii[i]);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
              worst = std::max(worst,
                               std::abs(fa.riemann[a][b][c][d] -
                                        ff.riemann[a][b][c][d]) /
                                   std::max(1.0, std::abs(fa.riemann[a][b][c][d])));
    }
    checks.push_back({"fd-curvature", worst, opt.tol_derivative,
                      worst <= opt.tol_derivative});
  }

  // first Bianchi and pair symmetry of the curvature tensor
  {
    double worst = 0.0;
    for (size_t i = 0; i < radii.size(); i += 8) {
      const CurvatureFrame frame = curvature(metric, radii[i]);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
              const double cyc = frame.riemann[a][b][c][d] +
                                 frame.riemann[a][c][d][b] +
                                 frame.riemann[a][d][b][c];
              worst = std::max(worst, std::abs(cyc));
              worst = std::max(worst, std::abs(frame.riemann[a][b][c][d] -
                                               frame.riemann[c][d][a][b]));
            }
    }
    checks.push_back({"symmetry", worst, opt.tol_residual,
                      worst <= opt.tol_residual});
  }
  return checks;
}

int cmd_verify(const Options& opt) {
  json report{{"schema_version", kSchemaVersion},
              {"config", config_echo("verify", opt)}};
  const double B = single_value(opt.B_text, "--B");
  const int n = single_order(opt.n_text, "--n");
  const double C = single_value(opt.C_text, "--C");
  try {
    const FamilySpec spec = construct_spec(opt.family, B, n, C);
    const std::vector<CheckResult> checks = run_verify_checks(spec, opt);
    bool all_pass = true;
    json list = json::array();
    for (const CheckResult& check : checks) {
      all_pass = all_pass && check.pass;
      list.push_back(json{{"name", check.name},
                          {"residual", check.value},
                          {"tolerance", check.tolerance},
                          {"pass", check.pass}});
      std::printf("%-16s %-4s  residual %.3e (tol %.1e)\n", check.name.c_str(),
                  check.pass ? "pass" : "FAIL", check.value, check.tolerance);
    }
    report["result"] = spec_result(spec);
    report["result"]["checks"] = list;
    report["result"]["pass"] = all_pass;
    write_json_report(opt.json_path, report);
    return all_pass ? 0 : 1;
  } catch (const Error& err) {
    const std::string code = err.code();
    if (!is_rejection(code)) throw;
    report["result"] = json{{"admissibility", code},
                            {"message", err.what()},
                            {"pass", false}};
    write_json_report(opt.json_path, report);
    std::printf("verify refused: %s\n", err.what());
    return 1;
  }
}

// ---------------------------------------------------------------------------
// energy

int cmd_energy(const Options& opt) {
  json report{{"schema_version", kSchemaVersion},
              {"config", config_echo("energy", opt)}};
  const double B = single_value(opt.B_text, "--B");
  const int n = single_order(opt.n_text, "--n");
  const double C = single_value(opt.C_text, "--C");
  try {
    const FamilySpec spec = construct_spec(opt.family, B, n, C);
    const double r_max = opt.r_max > 0.0 ? opt.r_max : default_r_max(spec);
    const EnergyReport energy = total_energy(spec, r_max, opt.tol_residual);
    json result = spec_result(spec);
    result["r_max"] = r_max;
    result["volume_factor"] =
        provenance(energy.volume_factor, "boundary-volume", "Vol = 2 pi^2 / n");
    result["E_raw"] = provenance(energy.raw_limit, "energy-limit",
                                 "E_raw = lim r->inf (1/4) r^3 integrand(r)");
    result["E_closed"] = provenance(energy.closed_form, "energy-closed-form",
                                    "E_closed = A sqrt(B)");
    result["error_estimate"] = energy.error_estimate;
    if (energy.kappa.has_value())
      result["kappa"] = provenance(energy.kappa.value(), "normalization-ratio",
                                   "kappa = E_raw / E_closed");
    result["pass"] = true;
    report["result"] = result;
    write_json_report(opt.json_path, report);
    std::printf("E_raw = %s, E_closed = %s%s%s\n",
                format_full(energy.raw_limit).c_str(),
                format_full(energy.closed_form).c_str(),
                energy.kappa.has_value() ? ", kappa = " : "",
                energy.kappa.has_value()
                    ? format_full(energy.kappa.value()).c_str()
                    : "");
    return 0;
  } catch (const Error& err) {
    const std::string code = err.code();
    if (!is_rejection(code)) throw;
    report["result"] = json{{"admissibility", code},
                            {"message", err.what()},
                            {"pass", false}};
    write_json_report(opt.json_path, report);
    std::printf("energy refused: %s\n", err.what());
    return 1;
  }
}

// ---------------------------------------------------------------------------
// einstein-check

int cmd_einstein(const Options& opt) {
  json report{{"schema_version", kSchemaVersion},
              {"config", config_echo("einstein-check", opt)}};
  const double B = single_value(opt.B_text, "--B");
  const int n = single_order(opt.n_text, "--n");
  const double C = single_value(opt.C_text, "--C");
  const Family fam = family_from_name(opt.family);
  if (fam == Family::ClassicEH || fam == Family::ZeroScalar) {
    std::fprintf(stderr, "einstein-check: no static extension is defined for %s\n",
                 opt.family.c_str());
    return 2;
  }
  try {
    const FamilySpec spec = construct_spec(opt.family, B, n, C);
    json result = spec_result(spec);
    result["lambda"] = provenance(-6.0 * B, "cosmological-constant",
                                  "lambda = -6B");
    result["c1"] = opt.c1;
    result["c2"] = opt.c2;
    bool pass = false;
    if (fam == Family::TypeI) {
      const Type1ObstructionReport rep =
          type1_obstruction_report(spec, opt.c1, opt.c2);
      result["lapse"] = "v = (c1/2) r^2 + c2";
      result["max_lapse_ode_residual"] = rep.max_lapse_ode_residual;
      result["max_angular_residual"] = rep.max_angular_residual;
      result["constant_lapse_defect"] =
          provenance(rep.constant_lapse_defect, "time-time-defect",
                     "|Rtt| defect 4B of the constant lapse");
      // no affine lapse closes the system; the check always fails, and the
      // report carries the obstruction data
      pass = false;
      std::printf("no Einstein extension: angular residual %.3e, constant "
                  "lapse defect %.9g\n",
                  rep.max_angular_residual, rep.constant_lapse_defect);
    } else {
      result["lapse"] = "v = c1 sqrt(1+B r^2) + c2";
      if (fam == Family::TypeII) {
        const Type2UniquenessReport rep =
            type2_uniqueness_report(spec, opt.c1, opt.c2);
        result["max_lapse_ode_residual"] = rep.max_lapse_ode_residual;
        result["constraint_identically_zero"] = rep.constraint_identically_zero;
        result["max_constraint"] =
            provenance(rep.max_constraint, "uniqueness-constraint",
                       "C (4+3B r^2) c1 - 4 A c2");
        result["max_einstein_residual"] = rep.max_einstein_residual;
        pass = rep.max_einstein_residual <= opt.tol_residual;
      } else {
        const StaticExtension ext = make_sqrt_extension(spec, opt.c1, opt.c2);
        const double residual = einstein_residual(ext, report_radii(spec));
        result["max_einstein_residual"] = residual;
        pass = residual <= opt.tol_residual;
      }
      std::printf("einstein residual %s tolerance: %s\n",
                  pass ? "within" : "exceeds", pass ? "pass" : "FAIL");
    }
    result["pass"] = pass;
    report["result"] = result;
    write_json_report(opt.json_path, report);
    return pass ? 0 : 1;
  } catch (const Error& err) {
    const std::string code = err.code();
    if (!is_rejection(code)) throw;
    report["result"] = json{{"admissibility", code},
                            {"message", err.what()},
                            {"pass", false}};
    write_json_report(opt.json_path, report);
    std::printf("einstein-check refused: %s\n", err.what());
    return 1;
  }
}

// ---------------------------------------------------------------------------
// scan

struct ScanRow {
  double B = 0.0;
  int n = 0;
  double C = 0.0;
  std::string admissibility;
  std::optional<double> r0, A, scalar_residual, h_residual, E_raw, kappa,
      E_closed;
  bool pass = true;
};

std::string csv_cell(const std::optional<double>& value) {
  return value.has_value() ? format_full(*value) : std::string();
}

ScanRow evaluate_row(const std::string& family, double B, int n, double C,
                     const Options& opt) {
  ScanRow row;
  row.B = B;
  row.n = n;
  row.C = C;
  try {
    const FamilySpec spec = construct_spec(family, B, n, C);
    row.admissibility = admissibility_name(spec.admissibility);
    row.r0 = spec.r0;
    row.A = spec.A;

    const BiaxialMetric metric = make_metric(profile(spec));
    const double target = scalar_target(spec.family, B);
    const double scale = std::max(std::abs(target), B);
    double worst = 0.0;
    for (double r : sample_radii(spec, 16))
      worst = std::max(worst,
                       std::abs(curvature(metric, r).scalar - target) / scale);
    row.scalar_residual = worst;
    row.h_residual = smoothness_residual(spec);
    row.pass = worst <= opt.tol_residual &&
               std::abs(*row.h_residual) <= opt.tol_residual * n;

    if (spec.family == Family::TypeII || spec.family == Family::Hyperbolic) {
      row.E_closed = spec.A * std::sqrt(spec.B);
      const double base = opt.r_max > 0.0 ? opt.r_max : default_r_max(spec);
      for (double mult : {1.0, 4.0, 10.0}) {
        try {
          const EnergyReport energy = total_energy(spec, mult * base, 1e-6);
          row.E_raw = energy.raw_limit;
          if (energy.kappa.has_value()) row.kappa = energy.kappa.value();
          break;
        } catch (const Error&) {
          if (mult == 10.0) row.pass = false;
        }
      }
    }
  } catch (const Error& err) {
    row.admissibility = err.code();
    // a rejected grid point is information, not a scan failure
  }
  return row;
}

int cmd_scan(const Options& opt) {
  const RangeSpec B_range = parse_range(opt.B_text);
  const IntRange n_range = parse_int_range(opt.n_text);
  const RangeSpec C_range = parse_range(opt.C_text);
  const std::vector<double> Bs = B_range.values();
  const std::vector<int> ns = n_range.values();
  const std::vector<double> Cs = C_range.values();
  if (Bs.empty() || ns.empty() || Cs.empty()) {
    std::fprintf(stderr, "scan: empty range\n");
    return 2;
  }
  const size_t total = Bs.size() * ns.size() * Cs.size();
  if (total > kScanCap) {
    std::fprintf(stderr, "scan: grid of %zu specs exceeds the cap of %zu\n",
                 total, kScanCap);
    return 2;
  }

  // lexicographic grid order (B, then n, then C); workers pull indices and
  // write into their own slot, so the output order never depends on timing
  std::vector<ScanRow> rows(total);
  std::atomic<size_t> next{0};
  const int workers = resolve_workers(opt.workers);
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < total;) {
      const size_t ic = i % Cs.size();
      const size_t in = (i / Cs.size()) % ns.size();
      const size_t ib = i / (Cs.size() * ns.size());
      rows[i] = evaluate_row(opt.family, Bs[ib], ns[in], Cs[ic], opt);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  bool all_pass = true;
  size_t admissible = 0;
  for (const ScanRow& row : rows) {
    all_pass = all_pass && row.pass;
    if (row.r0.has_value()) ++admissible;
  }

  if (!opt.csv_path.empty()) {
    std::string csv =
        "B,n,C,admissibility,r0,A,scalar_residual,h_residual,E_raw,kappa,"
        "E_closed\n";
    for (const ScanRow& row : rows) {
      csv += format_full(row.B) + "," + std::to_string(row.n) + "," +
             format_full(row.C) + "," + row.admissibility + "," +
             csv_cell(row.r0) + "," + csv_cell(row.A) + "," +
             csv_cell(row.scalar_residual) + "," + csv_cell(row.h_residual) +
             "," + csv_cell(row.E_raw) + "," + csv_cell(row.kappa) + "," +
             csv_cell(row.E_closed) + "\n";
    }
    write_atomic(opt.csv_path, csv);
  }
  if (!opt.json_path.empty()) {
    json list = json::array();
    for (const ScanRow& row : rows) {
      json item{{"B", row.B}, {"n", row.n}, {"C", row.C},
                {"admissibility", row.admissibility}};
      auto put = [&](const char* key, const std::optional<double>& value) {
        if (value.has_value())
          item[key] = *value;
        else
          item[key] = nullptr;
      };
      put("r0", row.r0);
      put("A", row.A);
      put("scalar_residual", row.scalar_residual);
      put("h_residual", row.h_residual);
      put("E_raw", row.E_raw);
      put("kappa", row.kappa);
      put("E_closed", row.E_closed);
      item["pass"] = row.pass;
      list.push_back(item);
    }
    json report{{"schema_version", kSchemaVersion},
                {"config", config_echo("scan", opt)},
                {"rows", list}};
    write_json_report(opt.json_path, report);
  }
  std::printf("scanned %zu specs (%zu admissible), %s\n", total, admissible,
              all_pass ? "all checks pass" : "some checks FAILED");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature and energy verification for bolt metric families"};
  app.require_subcommand(0, 1);
  bool show_schema = false;
  app.add_flag("--schema-version", show_schema,
               "print the report schema version and exit");

  Options construct_opt, verify_opt, scan_opt, energy_opt, einstein_opt;
  CLI::App* construct = app.add_subcommand("construct", "solve for bolt data");
  add_common_options(construct, construct_opt, 1e-9);
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common_options(verify, verify_opt, 1e-9);
  CLI::App* scan = app.add_subcommand("scan", "evaluate a parameter grid");
  add_common_options(scan, scan_opt, 1e-9);
  CLI::App* energy = app.add_subcommand("energy", "extrapolate the energy limit");
  add_common_options(energy, energy_opt, 1e-6);
  CLI::App* einstein =
      app.add_subcommand("einstein-check", "test the static extension");
  add_common_options(einstein, einstein_opt, 1e-9);
  einstein->add_option("--c1", einstein_opt.c1, "lapse slope coefficient");
  einstein->add_option("--c2", einstein_opt.c2, "lapse offset coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (show_schema) {
    std::printf("%s\n", kSchemaVersion);
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::fprintf(stderr, "%s\n", app.help().c_str());
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_opt);
    if (verify->parsed()) return cmd_verify(verify_opt);
    if (scan->parsed()) return cmd_scan(scan_opt);
    if (energy->parsed()) return cmd_energy(energy_opt);
    if (einstein->parsed()) return cmd_einstein(einstein_opt);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
