#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ratext/extension.hpp"
#include "ratext/io.hpp"
#include "ratext/numverify.hpp"
#include "ratext/parajacobi.hpp"
#include "ratext/tdpt.hpp"
#include "suite.hpp"

namespace ratext::cli {

namespace {

using exact::Polynomial;
using exact::Rational;
using nlohmann::json;
using parajacobi::ParaJacobiIndex;

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // global
  std::string format = "json";
  std::string out;
  numverify::Tolerances tol;

  // shared by the index-taking subcommands
  int n = 2;
  int N = 2;
  int M = 2;
  std::string lambda = "1";

  // poly
  bool para = false;
  bool jacobi = false;
  bool theta = false;
  std::string alpha = "0";
  std::string beta = "0";
  int which = 1;

  // spectrum, model
  int cutoff = extension::kDefaultSpectrumCutoff;

  // verify
  std::string suite;
  int max_nm = 4;
  int kmax = 6;
  int grid = 2000;
  int quad_order = 64;

  // plot-data
  std::string lambdas = "1/2,1,3/2";
  int plot_grid = 512;
};

Rational exact_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(flag + ": exact mode takes an integer or p/q, got '" + text + "'");
  }
}

// Numeric mode: p/q or a decimal, both read exactly.
Rational numeric_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
  }
  try {
    return Rational::parse_decimal(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(flag + ": expected p/q or a decimal number, got '" + text + "'");
  }
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_header() { return "# schema_version " + std::to_string(kSchemaVersion) + "\n"; }

std::string coeff_csv(const Polynomial& p) {
  std::string s = "power,coeff\n";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += std::to_string(k) + "," + p.coeffs()[k].str() + "\n";
  return s;
}

json index_json(const ParaJacobiIndex& idx) { return {{"n", idx.n()}, {"N", idx.N()}, {"M", idx.M()}}; }

class Emitter {
public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const std::string& text) const {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw usage_error("--out: cannot open '" + cfg_.out + "' for writing");
    f << text;
  }

  void emit(const json& j) const { emit(j.dump(2) + "\n"); }

  [[nodiscard]] bool csv() const { return cfg_.format == "csv"; }

private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

// ---------------------------------------------------------------------------

int cmd_poly(const RunConfig& cfg, const Emitter& em) {
  const int kinds = int(cfg.para) + int(cfg.jacobi) + int(cfg.theta);
  if (kinds != 1) throw usage_error("poly: pass exactly one of --para, --jacobi, --theta");

  json j{{"schema_version", kSchemaVersion}};
  Polynomial p;
  if (cfg.jacobi) {
    if (cfg.n < 0) throw usage_error("-n: Jacobi degree must be >= 0");
    const Rational a = exact_rational(cfg.alpha, "--alpha");
    const Rational b = exact_rational(cfg.beta, "--beta");
    p = tdpt::jacobi_poly(cfg.n, a, b);
    j.update({{"kind", "jacobi"}, {"n", cfg.n}, {"alpha", a}, {"beta", b}});
  } else {
    const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
    j.update(index_json(idx));
    if (cfg.theta) {
      p = parajacobi::theta(idx, cfg.which);
      j.update({{"kind", "theta"}, {"which", cfg.which}});
    } else {
      const Rational lambda = exact_rational(cfg.lambda, "--lambda");
      p = parajacobi::para_jacobi(idx, lambda);
      j.update({{"kind", "para"}, {"lambda", lambda}, {"window", io::window_intervals(parajacobi::nodeless_window(idx))}});
    }
  }
  j["coeffs"] = p;

  if (em.csv())
    em.emit(csv_header() + "# kind " + j.at("kind").get<std::string>() + "\n" + coeff_csv(p));
  else
    em.emit(j);
  return kOk;
}

int cmd_window(const RunConfig& cfg, const Emitter& em) {
  const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
  const auto w = parajacobi::nodeless_window(idx);
  if (em.csv()) {
    std::string s = csv_header() + "# lambda_n " + w.threshold.str() + "\nlo,hi,case\n";
    for (const auto& iv : w.intervals) s += iv.lo.str() + "," + iv.hi.str() + "," + parajacobi::to_string(w.window_case) + "\n";
    em.emit(s);
    return kOk;
  }
  json j = io::window_summary(w);
  j["schema_version"] = kSchemaVersion;
  j.update(index_json(idx));
  em.emit(j);
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, const Emitter& em) {
  const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
  const auto levels = extension::extended_spectrum(idx, cfg.cutoff);
  if (em.csv()) {
    std::string s = csv_header() + "k,E\n";
    for (const auto& l : levels) s += std::to_string(l.k) + "," + l.energy.str() + "\n";
    em.emit(s);
    return kOk;
  }
  json j{{"schema_version", kSchemaVersion}, {"cutoff", cfg.cutoff}, {"levels", levels}};
  j.update(index_json(idx));
  em.emit(j);
  return kOk;
}

int cmd_model(const RunConfig& cfg, const Emitter& em) {
  if (em.csv()) throw usage_error("model: only --format json is supported");
  const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
  em.emit(io::model_dump(extension::ExtendedModel::build(idx, exact_rational(cfg.lambda, "--lambda"), cfg.cutoff)));
  return kOk;
}

json failure_json(const Failure& f) {
  json j{{"check", f.check}, {"lambda", f.lambda}, {"k", f.level}};
  j.update(index_json(f.index));
  if (!f.detail.empty()) j["detail"] = f.detail;
  return j;
}

int verify_exact(const RunConfig& cfg, const Emitter& em) {
  if (cfg.max_nm < 2) throw usage_error("--max-NM: must be >= 2, got " + std::to_string(cfg.max_nm));
  SuiteReport report = exact_identity_suite(cfg.max_nm);
  const SuiteReport windows = window_oracle_suite(cfg.max_nm);
  for (const auto& [name, count] : windows.checks_run) report.checks_run[name] += count;
  report.failures.insert(report.failures.end(), windows.failures.begin(), windows.failures.end());

  if (em.csv()) {
    std::string s = csv_header() + "check,runs,failures\n";
    for (const auto& [name, count] : report.checks_run)
      s += name + "," + std::to_string(count) + "," + std::to_string(report.failures_in(name)) + "\n";
    em.emit(s);
  } else {
    json failures = json::array();
    for (const auto& f : report.failures) failures.push_back(failure_json(f));
    em.emit(json{{"schema_version", kSchemaVersion},
                 {"suite", "exact"},
                 {"max_NM", cfg.max_nm},
                 {"checks_run", report.total()},
                 {"checks_by_name", report.checks_run},
                 {"failures", failures},
                 {"passed", report.passed()}});
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int verify_numeric(const RunConfig& cfg, const Emitter& em) {
  const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
  const Rational lambda = numeric_rational(cfg.lambda, "--lambda");
  if (cfg.kmax < 1) throw usage_error("--kmax: must be >= 1");
  if (cfg.grid < 64) throw usage_error("--grid: numeric verification needs >= 64 points");
  const NumericReport r = numeric_suite(idx, lambda, cfg.kmax, cfg.quad_order, cfg.grid, cfg.tol);

  if (em.csv()) {
    std::string s = csv_header() + "check,value,tolerance,passed\n";
    s += "quadrature," + format_double(r.quadrature_error) + "," + format_double(cfg.tol.quadrature) + "," +
         (r.quadrature_passed ? "true" : "false") + "\n";
    s += "gram," + format_double(r.gram.max_normalized_offdiag()) + "," + format_double(cfg.tol.orthogonality) + "," +
         (r.gram_passed ? "true" : "false") + "\n";
    s += "fd," + format_double(r.fd.worst_scaled_error) + "," + format_double(cfg.tol.fd_relative) + "," +
         (r.fd.passed ? "true" : "false") + "\n";
    em.emit(s);
  } else {
    json gram = io::gram_dump(r.gram);
    gram.update({{"quadrature_order", r.quadrature_order}, {"tolerance", cfg.tol.orthogonality}, {"passed", r.gram_passed}});
    json j{{"schema_version", kSchemaVersion},
           {"suite", "numeric"},
           {"lambda", lambda},
           {"quadrature",
            {{"order", r.quadrature_order},
             {"max_relative_error", r.quadrature_error},
             {"tolerance", cfg.tol.quadrature},
             {"passed", r.quadrature_passed}}},
           {"gram", gram},
           {"fd",
            {{"grid", cfg.grid},
             {"expected", r.fd.expected},
             {"computed", r.fd.computed},
             {"worst_scaled_error", r.fd.worst_scaled_error},
             {"tolerance", cfg.tol.fd_relative},
             {"passed", r.fd.passed}}},
           {"passed", r.passed()}};
    j.update(index_json(idx));
    em.emit(j);
  }
  return r.passed() ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, const Emitter& em) {
  return cfg.suite == "exact" ? verify_exact(cfg, em) : verify_numeric(cfg, em);
}

std::string file_token(const Rational& r) {
  std::string s = r.str();
  for (char& c : s)
    if (c == '/') c = '_';
  if (!s.empty() && s.front() == '-') s.front() = 'm';
  return s;
}

std::string curve_csv(const std::string& header, const std::vector<std::pair<double, double>>& samples) {
  std::string s = csv_header() + header + "x,V\n";
  for (const auto& [x, v] : samples) s += format_double(x) + "," + format_double(v) + "\n";
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw usage_error("plot-data: cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw usage_error("plot-data: write failed for '" + path.string() + "'");
}

int cmd_plot_data(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw usage_error("plot-data: --out DIR is required");
  const ParaJacobiIndex idx(cfg.n, cfg.N, cfg.M);
  const numverify::GridSpec grid(cfg.plot_grid);

  // build every model first so a bad lambda writes nothing
  std::vector<extension::ExtendedModel> models;
  std::stringstream list(cfg.lambdas);
  for (std::string item; std::getline(list, item, ',');)
    models.push_back(extension::ExtendedModel::build(idx, numeric_rational(item, "--lambdas"), 0));
  if (models.empty()) throw usage_error("--lambdas: no values given");

  const std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw usage_error("--out: cannot create directory '" + cfg.out + "'");

  json files = json::array();
  const std::string idx_tag = "n" + std::to_string(idx.n()) + "_N" + std::to_string(idx.N()) + "_M" + std::to_string(idx.M());
  for (const auto& model : models) {
    const auto name = "potential_" + idx_tag + "_lambda_" + file_token(model.lambda) + ".csv";
    const std::string header = "# n N M lambda\n# " + std::to_string(idx.n()) + " " + std::to_string(idx.N()) + " " +
                               std::to_string(idx.M()) + " " + model.lambda.str() + "\n";
    write_file(dir / name, curve_csv(header, numverify::sample_potential(model, grid)));
    files.push_back({{"file", name}, {"lambda", model.lambda}, {"kind", "extended"}});
  }
  const tdpt::TdptParams partner{Rational(idx.N()), Rational(idx.M())};
  const auto partner_name = "partner_N" + std::to_string(idx.N()) + "_M" + std::to_string(idx.M()) + ".csv";
  const std::string partner_header =
      "# N M\n# " + std::to_string(idx.N()) + " " + std::to_string(idx.M()) + "\n";
  write_file(dir / partner_name,
             curve_csv(partner_header, numverify::sample_potential(tdpt::tdpt_potential_z(partner), grid)));
  files.push_back({{"file", partner_name}, {"kind", "partner"}});

  out << json{{"schema_version", kSchemaVersion}, {"directory", cfg.out}, {"grid", cfg.plot_grid}, {"files", files}}.dump(2)
      << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

void add_index_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n", cfg.n, "degree n")->capture_default_str();
  sub->add_option("-N", cfg.N, "N in p_n^(-N,-M)")->capture_default_str();
  sub->add_option("-M", cfg.M, "M in p_n^(-N,-M)")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact para-Jacobi polynomials and state-adding rational extensions of the trigonometric "
               "Darboux-Poschl-Teller potential",
               "ratext"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output file (plot-data: output directory); default stdout");
  app.add_option("--tol-orth", cfg.tol.orthogonality, "normalized Gram off-diagonal tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-fd", cfg.tol.fd_relative, "finite-difference eigenvalue tolerance (relative)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-quad", cfg.tol.quadrature, "quadrature self-test tolerance (relative)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* poly = app.add_subcommand("poly", "print polynomial coefficients, constant term first");
  poly->add_flag("--para", cfg.para, "para-Jacobi p_n^(-N,-M)(z; lambda)");
  poly->add_flag("--jacobi", cfg.jacobi, "Jacobi P_n^(alpha,beta)(z)");
  poly->add_flag("--theta", cfg.theta, "basis polynomial Theta_{n,which}");
  add_index_options(poly, cfg);
  poly->add_option("--lambda", cfg.lambda, "exact lambda, integer or p/q")->capture_default_str();
  poly->add_option("--alpha", cfg.alpha, "exact alpha for --jacobi")->capture_default_str();
  poly->add_option("--beta", cfg.beta, "exact beta for --jacobi")->capture_default_str();
  poly->add_option("--which", cfg.which, "Theta basis member")->check(CLI::IsMember({1, 2}))->capture_default_str();

  auto* window = app.add_subcommand("window", "nodeless lambda window with its case label and lambda_n");
  add_index_options(window, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of the extended potential");
  add_index_options(spectrum, cfg);
  spectrum->add_option("--cutoff", cfg.cutoff, "highest level k")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* model = app.add_subcommand("model", "JSON dump of the extended model");
  add_index_options(model, cfg);
  model->add_option("--lambda", cfg.lambda, "exact lambda, integer or p/q")->capture_default_str();
  model->add_option("--cutoff", cfg.cutoff, "highest level k")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the exact identity suite or the numerical checks");
  verify->add_option("--suite", cfg.suite, "exact or numeric")->required()->check(CLI::IsMember({"exact", "numeric"}));
  verify->add_option("--max-NM", cfg.max_nm, "exact suite: largest N and M swept")->capture_default_str();
  add_index_options(verify, cfg);
  verify->add_option("--lambda", cfg.lambda, "numeric suite: p/q or decimal")->capture_default_str();
  verify->add_option("--kmax", cfg.kmax, "numeric suite: highest Q level in the Gram matrix")->capture_default_str();
  verify->add_option("--grid", cfg.grid, "numeric suite: FD subintervals (coarse grid)")->capture_default_str();
  verify->add_option("--quad-order", cfg.quad_order, "numeric suite: Gauss-Jacobi order, raised to the admissible minimum if lower")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* plot = app.add_subcommand("plot-data", "write sampled potential curves as CSV files into --out DIR");
  add_index_options(plot, cfg);
  plot->add_option("--lambdas", cfg.lambdas, "comma-separated lambda values")->capture_default_str();
  plot->add_option("--grid", cfg.plot_grid, "subintervals of (0, pi/2)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const Emitter em(cfg, out);
  try {
    if (*poly) return cmd_poly(cfg, em);
    if (*window) return cmd_window(cfg, em);
    if (*spectrum) return cmd_spectrum(cfg, em);
    if (*model) return cmd_model(cfg, em);
    if (*verify) return cmd_verify(cfg, em);
    if (*plot) return cmd_plot_data(cfg, out);
  } catch (const numverify::numeric_error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ratext::cli
