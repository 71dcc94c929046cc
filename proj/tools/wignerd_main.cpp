// wignerd: rotation-matrix elements, tables, derivatives, Fourier
// coefficients, region maps, error sweeps, and the phase-estimation demo,
// serialized as reproducible CSV/JSON.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wignerd/engine.hpp"
#include "wignerd/oracle.hpp"
#include "wignerd/serialize.hpp"
#include "wignerd/sweep.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using wigner::Cell;
using wigner::HalfInt;
using wigner::MetaFields;
using wigner::OracleAngle;
using wigner::RecordTable;

struct OutputOpts {
  std::string format = "csv";
  std::string path;
};

struct AngleOpts {
  double theta = 0.0;
  bool has_theta = false;
  std::string theta_pi;

  OracleAngle resolve() const {
    if (!theta_pi.empty()) {
      std::int64_t num = 0, den = 0;
      char slash = 0;
      std::istringstream is(theta_pi);
      if (!(is >> num >> slash >> den) || slash != '/' || !is.eof())
        throw wigner::domain_error("--theta-pi expects N/M, got '" + theta_pi +
                                   "'");
      return OracleAngle::pi_fraction(num, den);
    }
    if (has_theta) return OracleAngle::radians(theta);
    throw wigner::domain_error("an angle is required: --theta or --theta-pi");
  }
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
}

void add_angle_opts(CLI::App* cmd, AngleOpts& angle) {
  auto* t = cmd->add_option("--theta", angle.theta, "Angle in radians");
  auto* tp = cmd->add_option("--theta-pi", angle.theta_pi,
                             "Angle as a rational multiple of pi (N/M)");
  t->excludes(tp);
  tp->excludes(t);
  cmd->callback([&angle, t] { angle.has_theta = t->count() > 0; });
}

void emit(const RecordTable& table, MetaFields meta, const OutputOpts& out,
          const std::string& command) {
  MetaFields full;
  full.emplace_back("tool", std::string("wignerd"));
  full.emplace_back("version", std::string(kVersion));
  full.emplace_back("command", command);
  for (auto& kv : meta) full.push_back(std::move(kv));

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.path.empty()) {
    file.open(out.path);
    if (!file) throw wigner::domain_error("cannot open --out " + out.path);
    os = &file;
  }
  if (out.format == "json")
    wigner::write_json(*os, table, full);
  else
    wigner::write_csv(*os, table);
}

HalfInt half(std::int64_t twice) { return HalfInt::from_twice(twice); }

// ------------------------------------------------------------- subcommands

struct ElementArgs {
  std::int64_t two_j = 0, two_m = 0, two_n = 0;
  int order = 0;
  AngleOpts angle;
  OutputOpts out;
};

void run_element(const ElementArgs& a, bool with_order) {
  const HalfInt j = half(a.two_j), m = half(a.two_m), n = half(a.two_n);
  const OracleAngle angle = a.angle.resolve();
  const double theta = angle.to_double();
  const auto basis = wigner::eigenbasis(j);
  const double value = with_order
                           ? wigner::d_derivative(basis, m, n, theta, a.order)
                           : wigner::d_element(basis, m, n, theta);

  RecordTable t;
  t.columns = {"two_j", "two_m", "two_n", "theta"};
  std::vector<Cell> row = {a.two_j, a.two_m, a.two_n, theta};
  if (with_order) {
    t.columns.push_back("order");
    row.emplace_back(static_cast<std::int64_t>(a.order));
  }
  t.columns.push_back("value");
  row.emplace_back(value);
  t.rows.push_back(std::move(row));

  MetaFields meta = {{"two_j", a.two_j}, {"two_m", a.two_m},
                     {"two_n", a.two_n}, {"theta", theta}};
  if (with_order) meta.emplace_back("order", static_cast<std::int64_t>(a.order));
  emit(t, std::move(meta), a.out, with_order ? "derivative" : "element");
}

struct TableArgs {
  std::int64_t two_j = 0;
  AngleOpts angle;
  bool serial = false;
  OutputOpts out;
};

void run_table(const TableArgs& a) {
  const HalfInt j = half(a.two_j);
  const OracleAngle angle = a.angle.resolve();
  const double theta = angle.to_double();
  const auto basis = wigner::eigenbasis(j);
  const auto table = wigner::d_matrix(
      basis, theta, a.serial ? wigner::Exec::serial : wigner::Exec::parallel);

  RecordTable t;
  t.columns = {"two_m", "two_n", "value"};
  for (std::int64_t tm = -a.two_j; tm <= a.two_j; tm += 2)
    for (std::int64_t tn = -a.two_j; tn <= a.two_j; tn += 2)
      t.rows.push_back({tm, tn, table.value(half(tm), half(tn))});
  emit(t, {{"two_j", a.two_j}, {"theta", theta}}, a.out, "table");
}

struct FourierArgs {
  std::int64_t two_j = 0, two_m = 0, two_n = 0;
  OutputOpts out;
};

void run_fourier(const FourierArgs& a) {
  const HalfInt j = half(a.two_j);
  const auto basis = wigner::eigenbasis(j);
  const auto slice = wigner::fourier_slice(basis, half(a.two_m), half(a.two_n));

  RecordTable t;
  t.columns = {"two_mu", "p", "t_real", "t_imag"};
  for (std::size_t k = 0; k < slice.p.size(); ++k) {
    const std::int64_t tmu = -a.two_j + 2 * static_cast<std::int64_t>(k);
    double re = 0.0, im = 0.0;
    switch (slice.quarter_phase) {
      case 0: re = slice.p[k]; break;
      case 1: im = slice.p[k]; break;
      case 2: re = -slice.p[k]; break;
      default: im = -slice.p[k]; break;
    }
    t.rows.push_back({tmu, slice.p[k], re, im});
  }
  emit(t,
       {{"two_j", a.two_j},
        {"two_m", a.two_m},
        {"two_n", a.two_n},
        {"quarter_phase", static_cast<std::int64_t>(slice.quarter_phase)}},
       a.out, "fourier");
}

void run_boundary(const TableArgs& a) {
  const OracleAngle angle = a.angle.resolve();
  const double theta = angle.to_double();
  const auto cells = wigner::boundary_map(half(a.two_j), theta);
  RecordTable t;
  t.columns = {"two_m", "two_n", "inside", "abs_d"};
  for (const auto& c : cells)
    t.rows.push_back({c.m.twice(), c.n.twice(),
                      static_cast<std::int64_t>(c.region == wigner::Region::Inside),
                      c.abs_d});
  emit(t, {{"two_j", a.two_j}, {"theta", theta}}, a.out, "boundary");
}

struct SweepArgs {
  std::vector<std::int64_t> two_j;
  std::size_t budget = 2000;
  long precision_bits = 512;
  std::uint64_t seed = 0;
  int order = 1;
  bool include_theta_zero = false;
  bool serial = false;
  OutputOpts out;
};

RecordTable sweep_table(const std::vector<wigner::ErrorRecord>& records) {
  RecordTable t;
  t.columns = {"two_j",
               "theta",
               "max_abs_error",
               "argmax_abs_two_m",
               "argmax_abs_two_n",
               "max_rel_error_inside",
               "argmax_rel_two_m",
               "argmax_rel_two_n",
               "samples"};
  for (const auto& r : records)
    t.rows.push_back({r.j.twice(), r.theta, r.max_abs_error,
                      r.argmax_abs_m.twice(), r.argmax_abs_n.twice(),
                      r.max_rel_error_inside, r.argmax_rel_m.twice(),
                      r.argmax_rel_n.twice(),
                      static_cast<std::int64_t>(r.samples)});
  return t;
}

void run_sweep(const SweepArgs& a, bool derivative) {
  if (a.two_j.empty())
    throw wigner::domain_error("at least one --two-j is required");
  std::vector<HalfInt> js;
  for (std::int64_t tj : a.two_j) js.push_back(half(tj));

  wigner::SweepConfig cfg;
  cfg.sample_budget = a.budget;
  cfg.precision_bits = a.precision_bits;
  cfg.seed = a.seed;
  cfg.exec = a.serial ? wigner::Exec::serial : wigner::Exec::parallel;
  const auto grid = wigner::default_theta_grid(a.include_theta_zero);

  const auto records =
      derivative ? wigner::derivative_error_sweep(js, grid, a.order, cfg)
                 : wigner::error_sweep(js, grid, cfg);

  MetaFields meta = {{"budget", static_cast<std::int64_t>(a.budget)},
                     {"precision_bits", static_cast<std::int64_t>(a.precision_bits)},
                     {"seed", static_cast<std::int64_t>(a.seed)},
                     {"theta_grid", std::string("pi/36..pi/2")}};
  if (derivative) meta.emplace_back("order", static_cast<std::int64_t>(a.order));
  emit(sweep_table(records), std::move(meta), a.out,
       derivative ? "derivative-sweep" : "error-sweep");
}

struct FitArgs {
  std::string in;
  OutputOpts out;
};

void run_fit(const FitArgs& a) {
  std::ifstream is(a.in);
  if (!is) throw wigner::domain_error("cannot open --in " + a.in);
  std::string line;
  if (!std::getline(is, line))
    throw wigner::domain_error("empty input file " + a.in);

  const auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };

  const auto header = split(line);
  std::ptrdiff_t col_j = -1, col_err = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "two_j") col_j = static_cast<std::ptrdiff_t>(i);
    if (header[i] == "max_abs_error") col_err = static_cast<std::ptrdiff_t>(i);
  }
  if (col_j < 0 || col_err < 0)
    throw wigner::domain_error(
        "input lacks two_j/max_abs_error columns (expected error-sweep CSV)");

  std::vector<wigner::ErrorRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto parts = split(line);
    if (parts.size() <= static_cast<std::size_t>(std::max(col_j, col_err)))
      throw wigner::domain_error("short row in " + a.in);
    wigner::ErrorRecord r;
    r.j = half(std::stoll(parts[static_cast<std::size_t>(col_j)]));
    r.max_abs_error = std::stod(parts[static_cast<std::size_t>(col_err)]);
    records.push_back(r);
  }
  const wigner::FitResult fit = wigner::fit_quadratic(records);

  RecordTable t;
  t.columns = {"a", "b", "rms_residual"};
  t.rows.push_back({fit.a, fit.b, fit.rms_residual});
  emit(t,
       {{"in", a.in}, {"records", static_cast<std::int64_t>(records.size())}},
       a.out, "fit");
}

struct FisherArgs {
  std::int64_t two_j = 0;
  AngleOpts angle;
  OutputOpts out;
};

void run_fisher(const FisherArgs& a) {
  const OracleAngle angle = a.angle.resolve();
  const double theta = angle.to_double();
  const auto basis = wigner::eigenbasis(half(a.two_j));
  const double f = wigner::fisher_information(basis, theta);
  RecordTable t;
  t.columns = {"two_j", "theta", "fisher_information"};
  t.rows.push_back({a.two_j, theta, f});
  emit(t, {{"two_j", a.two_j}, {"theta", theta}}, a.out, "fisher");
}

struct OracleArgs {
  std::string kind = "sum";
  std::int64_t two_j = 0, two_m = 0, two_n = 0, two_mu = 0;
  int order = 0;
  long precision_bits = 512;
  AngleOpts angle;
  OutputOpts out;
};

void run_oracle(const OracleArgs& a) {
  const HalfInt j = half(a.two_j), m = half(a.two_m);
  const int digits =
      std::max(8, static_cast<int>(static_cast<double>(a.precision_bits) * 0.3));

  if (a.kind == "fourier") {
    const auto t = wigner::oracle_fourier_coefficient(j, m, half(a.two_n),
                                                      half(a.two_mu));
    RecordTable table;
    table.columns = {"two_mu", "quarter_phase", "rho", "radicand",
                     "coefficient"};
    table.rows.push_back(
        {a.two_mu, static_cast<std::int64_t>(t.quarter_phase),
         t.rho.get_str(), t.radicand.get_str(),
         t.coefficient(a.precision_bits).str(digits)});
    emit(table,
         {{"two_j", a.two_j}, {"two_m", a.two_m}, {"two_n", a.two_n}},
         a.out, "oracle");
    return;
  }

  const OracleAngle angle = a.angle.resolve();
  std::unique_ptr<wigner::BigReal> value;
  if (a.kind == "sum") {
    value = std::make_unique<wigner::BigReal>(wigner::oracle_d_derivative(
        j, m, half(a.two_n), angle, a.order, a.precision_bits));
  } else if (a.kind == "edge") {
    value = std::make_unique<wigner::BigReal>(
        wigner::oracle_edge_row(j, m, angle, a.precision_bits));
  } else {
    value = std::make_unique<wigner::BigReal>(
        wigner::oracle_legendre(j, m, angle, a.precision_bits));
  }

  RecordTable table;
  table.columns = {"two_j", "two_m", "two_n", "order", "value",
                   "value_double"};
  table.rows.push_back({a.two_j, a.two_m, a.two_n,
                        static_cast<std::int64_t>(a.order), value->str(digits),
                        value->to_double()});
  emit(table,
       {{"kind", a.kind},
        {"theta", angle.to_double()},
        {"precision_bits", static_cast<std::int64_t>(a.precision_bits)}},
       a.out, "oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision Wigner d-matrix evaluation"};
  app.set_version_flag("--version", std::string("wignerd ") + kVersion);
  app.require_subcommand(1);

  ElementArgs element;
  auto* el = app.add_subcommand("element", "One matrix element d^j_{m,n}(theta)");
  el->add_option("--two-j", element.two_j, "2j")->required();
  el->add_option("--two-m", element.two_m, "2m")->required();
  el->add_option("--two-n", element.two_n, "2n")->required();
  add_angle_opts(el, element.angle);
  add_output_opts(el, element.out);

  ElementArgs deriv;
  auto* dv = app.add_subcommand("derivative",
                                "k-th theta-derivative of one element");
  dv->add_option("--two-j", deriv.two_j, "2j")->required();
  dv->add_option("--two-m", deriv.two_m, "2m")->required();
  dv->add_option("--two-n", deriv.two_n, "2n")->required();
  dv->add_option("--order", deriv.order, "Derivative order k >= 0")
      ->capture_default_str();
  add_angle_opts(dv, deriv.angle);
  add_output_opts(dv, deriv.out);

  TableArgs table;
  auto* tb = app.add_subcommand("table", "Full (2j+1)^2 table at one angle");
  tb->add_option("--two-j", table.two_j, "2j")->required();
  tb->add_flag("--serial", table.serial, "Use the serial reference kernels");
  add_angle_opts(tb, table.angle);
  add_output_opts(tb, table.out);

  FourierArgs fourier;
  auto* fo = app.add_subcommand("fourier",
                                "Fourier coefficients of one (m, n) pair");
  fo->add_option("--two-j", fourier.two_j, "2j")->required();
  fo->add_option("--two-m", fourier.two_m, "2m")->required();
  fo->add_option("--two-n", fourier.two_n, "2n")->required();
  add_output_opts(fo, fourier.out);

  TableArgs boundary;
  auto* bd = app.add_subcommand("boundary",
                                "Central-region map with |d| magnitudes");
  bd->add_option("--two-j", boundary.two_j, "2j")->required();
  add_angle_opts(bd, boundary.angle);
  add_output_opts(bd, boundary.out);

  SweepArgs sweep;
  auto* es = app.add_subcommand("error-sweep",
                                "Engine-vs-oracle maxima over the central region");
  es->add_option("--two-j", sweep.two_j, "2j (repeatable)")->required();
  es->add_option("--budget", sweep.budget, "Oracle calls per (j, theta) cell")
      ->capture_default_str();
  es->add_option("--precision-bits", sweep.precision_bits, "Oracle precision")
      ->capture_default_str();
  es->add_option("--seed", sweep.seed, "Subsample seed")->capture_default_str();
  es->add_flag("--include-theta-zero", sweep.include_theta_zero,
               "Prepend theta = 0 to the grid");
  es->add_flag("--serial", sweep.serial, "Use the serial reference kernels");
  add_output_opts(es, sweep.out);

  SweepArgs dsweep;
  auto* ds = app.add_subcommand("derivative-sweep",
                                "Derivative error sweep (order 1 or 2)");
  ds->add_option("--two-j", dsweep.two_j, "2j (repeatable)")->required();
  ds->add_option("--order", dsweep.order, "Derivative order (1 or 2)")
      ->capture_default_str();
  ds->add_option("--budget", dsweep.budget, "Oracle calls per (j, theta) cell")
      ->capture_default_str();
  ds->add_option("--precision-bits", dsweep.precision_bits, "Oracle precision")
      ->capture_default_str();
  ds->add_option("--seed", dsweep.seed, "Subsample seed")->capture_default_str();
  ds->add_flag("--include-theta-zero", dsweep.include_theta_zero,
               "Prepend theta = 0 to the grid");
  ds->add_flag("--serial", dsweep.serial, "Use the serial reference kernels");
  add_output_opts(ds, dsweep.out);

  FitArgs fit;
  auto* ft = app.add_subcommand("fit",
                                "Quadratic fit 1e14*max_abs ~ a*j^2 + b");
  ft->add_option("--in", fit.in, "error-sweep CSV file")->required();
  add_output_opts(ft, fit.out);

  FisherArgs fisher;
  auto* fi = app.add_subcommand("fisher",
                                "Fisher information of the rotated coherent state");
  fi->add_option("--two-j", fisher.two_j, "2j")->required();
  add_angle_opts(fi, fisher.angle);
  add_output_opts(fi, fisher.out);

  OracleArgs oracle;
  auto* oc = app.add_subcommand("oracle", "Arbitrary-precision reference values");
  oc->add_option("--kind", oracle.kind, "sum|edge|legendre|fourier")
      ->check(CLI::IsMember({"sum", "edge", "legendre", "fourier"}))
      ->capture_default_str();
  oc->add_option("--two-j", oracle.two_j, "2j")->required();
  oc->add_option("--two-m", oracle.two_m, "2m");
  oc->add_option("--two-n", oracle.two_n, "2n");
  oc->add_option("--two-mu", oracle.two_mu, "2mu (kind=fourier)");
  oc->add_option("--order", oracle.order, "Derivative order (kind=sum)")
      ->capture_default_str();
  oc->add_option("--precision-bits", oracle.precision_bits, "Working precision")
      ->capture_default_str();
  add_angle_opts(oc, oracle.angle);
  add_output_opts(oc, oracle.out);

  try {
    app.parse(argc, argv);
    if (*el) run_element(element, false);
    if (*dv) run_element(deriv, true);
    if (*tb) run_table(table);
    if (*fo) run_fourier(fourier);
    if (*bd) run_boundary(boundary);
    if (*es) run_sweep(sweep, false);
    if (*ds) run_sweep(dsweep, true);
    if (*ft) run_fit(fit);
    if (*fi) run_fisher(fisher);
    if (*oc) run_oracle(oracle);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wigner::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const wigner::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
