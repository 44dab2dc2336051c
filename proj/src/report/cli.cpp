#include "optrig/report/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "optrig/granular.hpp"
#include "optrig/pythagorean.hpp"
#include "optrig/report/json_writer.hpp"
#include "optrig/report/matrix_file.hpp"
#include "optrig/report/svg_plots.hpp"
#include "optrig/sharpe.hpp"
#include "optrig/trig_report.hpp"

namespace optrig::report {

namespace {

using ojson = nlohmann::ordered_json;

ojson angle_json(double radians) {
  return ojson{{"radians", radians}, {"degrees", radians * 180.0 / std::numbers::pi}};
}

ojson vector_json(const DenseVector<double>& v) {
  ojson arr = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

ojson matrix_json(const DenseMatrix<double>& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson rational_json(const pyth::Rational& r) {
  return ojson{{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

ojson envelope(const std::string& subcommand, ojson inputs, ojson result,
               std::vector<std::string> warnings = {}) {
  ojson e;
  e["tool_version"] = kToolVersion;
  e["subcommand"] = subcommand;
  e["inputs"] = std::move(inputs);
  e["result"] = std::move(result);
  e["warnings"] = warnings;
  return e;
}

// ---------------------------------------------------------------- trig ----

struct TrigArgs {
  std::string path;
  std::uint64_t seed = 0;
  int restarts = 8;
};

ojson run_trig(const TrigArgs& a) {
  const DenseMatrix<double> raw = read_matrix_file(a.path);
  const SpdMatrix<double> m = validate_spd(raw);
  TrigReportOptions opts;
  opts.variational.seed = a.seed;
  opts.variational.restarts = a.restarts;
  const TrigReport<double> rep = trig_report(m, opts);

  ojson inputs{{"matrix_file", a.path},
               {"dim", m.dim()},
               {"matrix", matrix_json(raw)},
               {"seed", a.seed},
               {"restarts", a.restarts}};
  ojson result;
  result["dim"] = m.dim();
  result["degenerate"] = rep.degenerate;
  result["mu1"] = ojson{{"closed_form", rep.mu1}, {"variational", rep.mu1_variational}};
  result["nu1"] = ojson{{"closed_form", rep.nu1}, {"convex_search", rep.nu1_convex}};
  result["identity_residual"] = rep.identity_residual;
  result["phi"] = angle_json(rep.phi);
  result["epsilon"] =
      ojson{{"closed_form", rep.epsilon_min}, {"convex_argmin", rep.epsilon_argmin}};
  if (rep.antieigs) {
    result["antieigenvectors"] = ojson{{"plus", vector_json(rep.antieigs->plus)},
                                       {"minus", vector_json(rep.antieigs->minus)}};
  } else {
    result["antieigenvectors"] = nullptr;
  }
  result["variational_minimizer"] = vector_json(rep.variational_minimizer);

  std::vector<std::string> warnings;
  if (rep.degenerate)
    warnings.emplace_back("degenerate spectrum: turning angle is 0 and antieigenvectors are "
                          "undefined");
  return envelope("trig", std::move(inputs), std::move(result), std::move(warnings));
}

// ------------------------------------------------------------ granular ----

ojson run_granular(double sxx, double sxz, double szz) {
  const granular::StressTensor2<double> s(sxx, sxz, szz);
  const granular::PrincipalStress<double> p = granular::principal_decompose(s);
  const granular::ReposeReport<double> rep = granular::repose_report(s);

  ojson inputs{{"sxx", sxx}, {"sxz", sxz}, {"szz", szz}};
  ojson result;
  result["principal"] =
      ojson{{"sigma1", p.sigma1}, {"sigma2", p.sigma2}, {"psi", angle_json(p.psi)}};
  result["mean_stress"] = rep.mean_stress;
  result["deviator"] = rep.deviator;
  result["sin_theta"] = rep.deviator / rep.mean_stress;
  result["theta"] = angle_json(rep.theta);
  result["delta"] = angle_json(rep.delta);
  result["phi"] = angle_json(rep.phi);
  result["sin_phi_convex"] = rep.convex_value;
  return envelope("granular", std::move(inputs), std::move(result));
}

// ------------------------------------------------------ granular-field ----

struct FieldArgs {
  double theta_deg = 0, rho = 0, g = 0, k_ratio = 0, depth = 0;
  long nx = 0, nz = 0;
  std::string csv_path;
};

std::string field_csv_text(const granular::StressField<double>& f,
                           const granular::EquilibriumResidual<double>& res) {
  std::ostringstream csv;
  csv << "i,j,x,z,sigma_xx,sigma_xz,sigma_zz,r1,r2\n";
  for (Eigen::Index i = 0; i < f.nx; ++i) {
    for (Eigen::Index j = 0; j < f.nz; ++j) {
      const bool interior = i > 0 && i + 1 < f.nx && j > 0 && j + 1 < f.nz;
      csv << i << ',' << j << ',' << format_double(static_cast<double>(i) * f.dx) << ','
          << format_double(static_cast<double>(j) * f.dz) << ','
          << format_double(f.sxx(i, j)) << ',' << format_double(f.sxz(i, j)) << ','
          << format_double(f.szz(i, j)) << ',';
      if (interior)
        csv << format_double(res.r1(i, j)) << ',' << format_double(res.r2(i, j));
      else
        csv << ',';  // residual is defined on interior nodes only
      csv << '\n';
    }
  }
  return csv.str();
}

ojson run_field(const FieldArgs& a) {
  const double theta = a.theta_deg * std::numbers::pi / 180.0;
  const granular::StressField<double> f =
      granular::linear_depth_field(theta, a.rho, a.g, a.k_ratio, a.depth, a.nx, a.nz);
  const granular::EquilibriumResidual<double> res = granular::equilibrium_residual(f);

  ojson inputs{{"theta_degrees", a.theta_deg}, {"rho", a.rho},     {"g", a.g},
               {"K", a.k_ratio},               {"depth", a.depth}, {"nx", a.nx},
               {"nz", a.nz}};
  ojson result;
  result["grid"] = ojson{{"nx", f.nx}, {"nz", f.nz}, {"dx", f.dx}, {"dz", f.dz}};
  result["theta"] = angle_json(theta);
  result["stability_margin"] = std::sqrt(a.k_ratio) - std::tan(theta);
  result["residual"] = ojson{{"max", res.max_norm},
                             {"rms", res.rms},
                             {"max_over_rho_g", res.max_norm / (a.rho * a.g)}};
  std::vector<std::string> warnings;
  if (!a.csv_path.empty()) {
    write_text_file(a.csv_path, field_csv_text(f, res));
    result["csv"] = a.csv_path;
  }
  return envelope("granular-field", std::move(inputs), std::move(result),
                  std::move(warnings));
}

// ------------------------------------------------------------- finance ----

struct FinanceArgs {
  std::string path;
  double rf = 0;
  std::string sigma;  // "", "sample", or "population"
};

finance::ReturnsFormat detect_format(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto body = finance::detail::trim(line);
    if (body.empty()) continue;
    return body.find(',') != std::string_view::npos ? finance::ReturnsFormat::labeled_csv
                                                    : finance::ReturnsFormat::plain;
  }
  return finance::ReturnsFormat::plain;
}

ojson run_finance(const FinanceArgs& a) {
  std::ifstream in(a.path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + a.path + "' for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  const finance::ReturnsFormat fmt = detect_format(content);
  std::istringstream stream(content);
  const finance::ReturnSeries series = finance::ingest_returns(stream, fmt);

  // Convention default: population for the closed two-period identity,
  // sample for general series.
  finance::SigmaConvention conv;
  if (a.sigma == "sample")
    conv = finance::SigmaConvention::sample;
  else if (a.sigma == "population")
    conv = finance::SigmaConvention::population;
  else
    conv = series.size() == 2 ? finance::SigmaConvention::population
                              : finance::SigmaConvention::sample;

  ojson inputs{{"returns_file", a.path},
               {"format",
                fmt == finance::ReturnsFormat::labeled_csv ? "labeled-csv" : "plain"},
               {"n", series.size()},
               {"rf", a.rf},
               {"sigma_convention", finance::to_string(conv)}};
  std::vector<std::string> warnings;
  ojson result;

  if (series.size() == 2) {
    const finance::SharpeReport rep =
        finance::two_period_report(series.returns[0], series.returns[1], a.rf, conv);
    result["mode"] = "two-period";
    result["labels"] = ojson::array({series.labels[0], series.labels[1]});
    result["r1"] = rep.r1;
    result["r2"] = rep.r2;
    result["rf"] = rep.rf;
    result["sigma_convention"] = finance::to_string(rep.sigma_convention);
    result["sigma"] = rep.sigma;
    result["s_am"] = rep.s_am;
    result["s_gm"] = rep.s_gm;
    result["g_ratio"] = rep.g_ratio;
    result["mu1_crosscheck"] = rep.mu1_crosscheck;
  } else {
    double mean = 0;
    for (double r : series.returns) mean += r;
    mean /= static_cast<double>(series.size());
    result["mode"] = "series";
    result["n"] = series.size();
    result["rf"] = a.rf;
    result["sigma_convention"] = finance::to_string(conv);
    result["mean"] = mean;
    result["sigma"] = finance::stddev(series.returns, conv);
    try {
      result["sharpe"] = finance::sharpe_ratio(series, a.rf, conv);
    } catch (const Error& e) {
      if (e.code() != Errc::zero_volatility) throw;
      result["sharpe"] = nullptr;
      warnings.emplace_back("zero volatility: Sharpe ratio is undefined");
    }
    ojson rolling = ojson::array();
    std::size_t skipped = 0;
    for (const finance::RollingEntry& e : finance::rolling_gm_am(series, a.rf)) {
      ojson entry{{"first", e.label_first}, {"second", e.label_second}};
      if (e.skipped) {
        entry["g"] = nullptr;
        entry["skipped"] = true;
        ++skipped;
      } else {
        entry["g"] = e.g;
        entry["skipped"] = false;
      }
      rolling.push_back(std::move(entry));
    }
    if (skipped > 0)
      warnings.push_back(std::to_string(skipped) +
                         " rolling pair(s) skipped: non-positive net return");
    result["rolling_g"] = std::move(rolling);
  }
  return envelope("finance", std::move(inputs), std::move(result), std::move(warnings));
}

// ------------------------------------------------------------- triples ----

struct TriplesArgs {
  std::int64_t m = 0, n = 0;
  std::int64_t max_c = 0;
  bool single_mode = false, enum_mode = false;
  std::string csv_path;
};

ojson triple_json(const pyth::PythTriple& t) {
  return ojson{{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

std::string triples_csv_text(
    const std::vector<std::pair<pyth::TripleParams, pyth::PythTriple>>& list) {
  std::ostringstream csv;
  csv << "m,n,a,b,c,cos_num,cos_den,sin_num,sin_den\n";
  for (const auto& [p, t] : list) {
    const auto [cos_phi, sin_phi] = pyth::pyth_trig(p);
    csv << p.m << ',' << p.n << ',' << t.a << ',' << t.b << ',' << t.c << ','
        << cos_phi.num() << ',' << cos_phi.den() << ',' << sin_phi.num() << ','
        << sin_phi.den() << '\n';
  }
  return csv.str();
}

ojson run_triples(const TriplesArgs& a) {
  if (a.single_mode) {
    const pyth::TripleParams p = pyth::validate_params(a.m, a.n);
    const pyth::PythReport rep = pyth::pyth_report(p);
    ojson inputs{{"m", a.m}, {"n", a.n}};
    ojson result;
    result["m"] = p.m;
    result["n"] = p.n;
    result["triple"] = triple_json(rep.triple);
    result["cos_phi"] = rational_json(rep.cos_phi);
    result["sin_phi"] = rational_json(rep.sin_phi);
    result["phi"] = angle_json(std::acos(rep.cos_phi.to_double()));
    result["antieigenvectors"] =
        ojson{{"plus", vector_json(rep.antieigs.plus)},
              {"minus", vector_json(rep.antieigs.minus)},
              {"exact_numerators_plus", ojson::array({p.m, p.n})},
              {"exact_numerators_minus", ojson::array({p.m, -p.n})},
              {"denominator_radicand", rep.triple.c}};
    result["x_axis_point"] = rational_json(rep.x_axis_point);
    result["stereographic_point"] =
        ojson{{"x", rational_json(rep.stereo_x)}, {"y", rational_json(rep.stereo_y)}};
    return envelope("triples", std::move(inputs), std::move(result));
  }

  const auto list = pyth::enumerate_primitive_triples(a.max_c);
  ojson inputs{{"max_c", a.max_c}};
  ojson entries = ojson::array();
  for (const auto& [p, t] : list) {
    const auto [cos_phi, sin_phi] = pyth::pyth_trig(p);
    entries.push_back(ojson{{"m", p.m},
                            {"n", p.n},
                            {"a", t.a},
                            {"b", t.b},
                            {"c", t.c},
                            {"cos_phi", rational_json(cos_phi)},
                            {"sin_phi", rational_json(sin_phi)}});
  }
  ojson result;
  result["c_max"] = a.max_c;
  result["count"] = list.size();
  result["triples"] = std::move(entries);
  if (!a.csv_path.empty()) {
    write_text_file(a.csv_path, triples_csv_text(list));
    result["csv"] = a.csv_path;
  }
  return envelope("triples", std::move(inputs), std::move(result));
}

// --------------------------------------------------------------- plots ----

ojson run_plot_circle(std::int64_t max_c, const std::string& out_path) {
  const auto list = pyth::enumerate_primitive_triples(max_c);
  const std::string svg = render_plot_circle(list);  // validates before any write
  write_text_file(out_path, svg);
  ojson inputs{{"max_c", max_c}, {"out", out_path}};
  ojson result{{"out", out_path}, {"c_max", max_c}, {"points", list.size()}};
  return envelope("plot-circle", std::move(inputs), std::move(result));
}

ojson run_plot_angle(double lmin, double lmax, int steps, const std::string& out_path) {
  const std::string svg = render_plot_angle(lmin, lmax, steps);
  write_text_file(out_path, svg);
  const auto phi_of = [](double k) { return std::acos(std::min(1.0, 2 * std::sqrt(k) / (1 + k))); };
  ojson inputs{{"lmin", lmin}, {"lmax", lmax}, {"steps", steps}, {"out", out_path}};
  ojson result{{"out", out_path},
               {"lambda_min", lmin},
               {"lambda_max", lmax},
               {"steps", steps},
               {"phi_at_lmin", angle_json(phi_of(lmin))},
               {"phi_at_lmax", angle_json(phi_of(lmax))}};
  return envelope("plot-angle", std::move(inputs), std::move(result));
}

}  // namespace

int run_subcommand(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antieigenvalue analysis: operator trigonometry of SPD matrices with granular, "
               "finance, and Pythagorean applications"};
  app.name("optrig");
  app.require_subcommand(1);

  TrigArgs trig_args;
  auto* trig = app.add_subcommand("trig", "Operator trigonometry report for a matrix file");
  trig->add_option("matrixfile", trig_args.path,
                   "text file: dimension header, then n rows of n reals")
      ->required();
  trig->add_option("--seed", trig_args.seed, "seed for the variational restarts");
  trig->add_option("--restarts", trig_args.restarts, "variational restart count")
      ->check(CLI::PositiveNumber);

  double sxx = 0, sxz = 0, szz = 0;
  auto* gran =
      app.add_subcommand("granular", "Angle-of-repose analysis of a 2x2 stress tensor");
  gran->add_option("sxx", sxx, "normal stress along the slope")->required();
  gran->add_option("sxz", sxz, "shear stress")->required();
  gran->add_option("szz", szz, "normal stress across the slope")->required();

  FieldArgs field_args;
  auto* field = app.add_subcommand(
      "granular-field", "Linear-depth stress field and its equilibrium residual");
  field->add_option("--theta", field_args.theta_deg, "slope angle in degrees")->required();
  field->add_option("--rho", field_args.rho, "bulk density")->required();
  field->add_option("--g", field_args.g, "gravity")->required();
  field->add_option("--K", field_args.k_ratio, "lateral stress ratio sigma_xx/sigma_zz")
      ->required();
  field->add_option("--depth", field_args.depth, "domain depth")->required();
  field->add_option("--nx", field_args.nx, "grid nodes along x")->required();
  field->add_option("--nz", field_args.nz, "grid nodes along z")->required();
  field->add_option("--csv", field_args.csv_path, "also dump the field and residuals as CSV");

  FinanceArgs fin_args;
  auto* fin = app.add_subcommand("finance", "Sharpe-ratio analytics for a return series");
  fin->add_option("returns", fin_args.path, "returns file: plain values or label,value rows")
      ->required();
  fin->add_option("--rf", fin_args.rf, "risk-free rate");
  fin->add_option("--sigma", fin_args.sigma, "deviation convention")
      ->check(CLI::IsMember({"sample", "population"}));

  TriplesArgs tri_args;
  auto* tri = app.add_subcommand("triples", "Pythagorean triple trigonometry");
  auto* tri_m = tri->add_option("m", tri_args.m, "generator m");
  auto* tri_n = tri->add_option("n", tri_args.n, "generator n");
  auto* tri_c =
      tri->add_option("--max-c", tri_args.max_c, "enumerate primitive triples with c <= C");
  tri->add_option("--csv", tri_args.csv_path, "also write the enumerated list as CSV");
  tri_m->needs(tri_n);
  tri_n->needs(tri_m);
  tri_c->excludes(tri_m);

  std::int64_t pc_max = 0;
  std::string pc_out;
  auto* pc = app.add_subcommand("plot-circle",
                                "SVG of stereographic triple points on the unit circle");
  pc->add_option("--max-c", pc_max, "enumerate primitive triples with c <= C")->required();
  pc->add_option("--out", pc_out, "output SVG path")->required();

  double pa_lmin = 0, pa_lmax = 0;
  int pa_steps = 0;
  std::string pa_out;
  auto* pa =
      app.add_subcommand("plot-angle", "SVG of the turning angle vs condition number");
  pa->add_option("--lmin", pa_lmin, "smallest condition number (>= 1)")->required();
  pa->add_option("--lmax", pa_lmax, "largest condition number")->required();
  pa->add_option("--steps", pa_steps, "number of samples (>= 2)")->required();
  pa->add_option("--out", pa_out, "output SVG path")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    ojson env;
    if (app.got_subcommand(trig)) {
      env = run_trig(trig_args);
    } else if (app.got_subcommand(gran)) {
      env = run_granular(sxx, sxz, szz);
    } else if (app.got_subcommand(field)) {
      env = run_field(field_args);
    } else if (app.got_subcommand(fin)) {
      env = run_finance(fin_args);
    } else if (app.got_subcommand(tri)) {
      tri_args.single_mode = tri_m->count() > 0;
      tri_args.enum_mode = tri_c->count() > 0;
      if (!tri_args.single_mode && !tri_args.enum_mode)
        throw Error(Errc::bad_range, "provide either generators 'm n' or --max-c");
      env = run_triples(tri_args);
    } else if (app.got_subcommand(pc)) {
      env = run_plot_circle(pc_max, pc_out);
    } else {
      env = run_plot_angle(pa_lmin, pa_lmax, pa_steps, pa_out);
    }
    out << dump_json(env) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace optrig::report
