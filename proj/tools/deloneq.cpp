// deloneq: deformed-exponential / coherent-state toolkit for Delone
// perturbations of the naturals. Every subcommand reads a sequence spec
// (JSON) or family flags, runs the numeric pipeline, and emits deterministic
// CSV (or a simple SVG line plot).

#include "delone/gha.hpp"
#include "delone/io.hpp"
#include "delone/moments.hpp"
#include "delone/orthopoly.hpp"
#include "delone/quadrature.hpp"
#include "delone/quantize.hpp"
#include "delone/renorm.hpp"
#include "delone/sequence.hpp"
#include "delone/series.hpp"
#include "delone/stats.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using namespace delone;

std::unique_ptr<DeloneSequence> load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  nlohmann::json j;
  in >> j;
  return std::make_unique<DeloneSequence>(SequenceSpec::from_json(j));
}

struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buf;

  ~Output() = default;
  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream out(path);
      if (!out) throw std::invalid_argument("cannot open output file: " + path);
      out << buf.str();
    }
  }
};

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return g;
}

// known closed asymptote for mu_n, if the family has one
std::optional<double> known_asymptote(const SequenceSpec& s, std::size_t n) {
  if (n == 0) return std::nullopt;
  if (s.family == Family::ConstantShift)
    return asymptotic_mu(AsymptoticModel::ConstantShift, s.epsilon, n);
  if (s.family == Family::Homographic && s.a == 0.0 && s.c == 1.0 && s.d == 0.0 &&
      s.b < 0.0)
    return asymptotic_mu(AsymptoticModel::InverseSquare, -s.b, n);
  return std::nullopt;
}

int run_seq(const std::string& spec_path, std::size_t n_max, Output& out) {
  auto seq = load_spec(spec_path);
  CsvWriter csv(out.buf, {"n", "x_n", "alpha_n"});
  for (std::size_t n = 0; n <= n_max; ++n)
    csv.row({static_cast<double>(n), seq->value(n), seq->alpha(n)});
  return 0;
}

int run_mu(const std::string& spec_path, std::size_t n_max, double tol,
           const std::string& format, Output& out) {
  auto seq = load_spec(spec_path);
  const MomentTable t = mu_sequence(*seq, n_max, tol);
  if (format == "svg") {
    PlotSeries s;
    s.label = "mu_n";
    for (std::size_t n = 0; n <= n_max; ++n) {
      s.x.push_back(static_cast<double>(n));
      s.y.push_back(t.mu[n]);
    }
    write_svg_plot(out.buf, {s}, "moment ratios mu_n");
    return 0;
  }
  CsvWriter csv(out.buf, {"n", "mu_n", "abs_err", "asymptote"});
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto asym = known_asymptote(seq->spec(), n);
    csv.row({static_cast<double>(n), t.mu[n], t.abs_err[n],
             asym ? *asym : std::numeric_limits<double>::quiet_NaN()});
  }
  return 0;
}

int run_renorm(const std::string& spec_path, std::size_t n_max, double tol, Output& out) {
  auto seq = load_spec(spec_path);
  const MomentTable t = mu_sequence(*seq, n_max, tol);
  const RenormalizedSequence ren = renormalize(*seq, t);
  if (ren.reordered()) std::cerr << "note: renormalized values were reordered\n";
  CsvWriter csv(out.buf, {"n", "x_n", "xt_n", "x_n_minus_xt_n"});
  for (std::size_t n = 0; n <= n_max; ++n)
    csv.row({static_cast<double>(n), seq->value(n), ren.value(n),
             seq->value(n) - ren.value(n)});
  return 0;
}

int run_measures(double epsilon, double t_min, double t_max, std::size_t steps, double tol,
                 const std::string& format, Output& out) {
  const auto rows = compare_measures(epsilon, linspace(t_min, t_max, steps), tol);
  if (format == "svg") {
    PlotSeries a, b;
    a.label = "solved";
    b.label = "nu";
    b.color = "#d62728";
    for (const auto& r : rows) {
      a.x.push_back(r.t);
      a.y.push_back(r.solved);
      b.x.push_back(r.t);
      b.y.push_back(r.nu);
    }
    write_svg_plot(out.buf, {a, b}, "measure densities");
    return 0;
  }
  CsvWriter csv(out.buf, {"t", "solved", "nu"});
  for (const auto& r : rows) csv.row({r.t, r.solved, r.nu});
  return 0;
}

int run_quantize(const std::string& spec_path, const std::string& symbol_name,
                 std::size_t dim, double tol, Output& out) {
  auto seq = load_spec(spec_path);
  const MomentTable t = mu_sequence(*seq, dim + 1, tol);
  const RenormalizedSequence ren = renormalize(*seq, t);
  RadialSymbol sym;
  if (symbol_name == "one")
    sym = symbol_one();
  else if (symbol_name == "z")
    sym = symbol_z();
  else if (symbol_name == "zbar")
    sym = symbol_zbar();
  else if (symbol_name == "zzbar")
    sym = symbol_zzbar();
  else if (symbol_name == "q")
    sym = symbol_q();
  else if (symbol_name == "p")
    sym = symbol_p();
  else
    throw std::invalid_argument("unknown symbol: " + symbol_name);
  const OperatorMatrix a = quantize_radial(*seq, ren, sym, dim, tol);
  CsvWriter csv(out.buf, {"n", "np", "re", "im"});
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      csv.row({static_cast<double>(i), static_cast<double>(j), a.at(i, j).real(),
               a.at(i, j).imag()});
  return 0;
}

int run_spectrum(const std::string& spec_path, std::size_t n, double tol, Output& out) {
  auto seq = load_spec(spec_path);
  const MomentTable t = mu_sequence(*seq, n, tol);
  const RenormalizedSequence ren = renormalize(*seq, t);
  const SpectrumResult sp = spectrum(ren, n);
  CsvWriter csv(out.buf, {"n", "k", "lambda_k"});
  for (std::size_t k = 0; k < n; ++k)
    csv.row({static_cast<double>(n), static_cast<double>(k), sp.eigenvalues[k]});
  return 0;
}

int run_stats(const std::string& spec_path, const std::string& mode, double t,
              std::size_t n, double p, double a, double eps, double tol, Output& out) {
  auto seq = load_spec(spec_path);
  if (mode == "poisson") {
    CsvWriter csv(out.buf, {"n", "pmf"});
    for (std::size_t k = 0; k <= n; ++k)
      csv.row({static_cast<double>(k), poisson_like_pmf(*seq, t, k, tol)});
    return 0;
  }
  if (mode == "binomial") {
    const DeformedBinomial db{seq.get(), n, p, a, eps};
    const auto row = deformed_binomial_row(db, tol);
    CsvWriter csv(out.buf, {"k", "pmf"});
    for (std::size_t k = 0; k <= n; ++k) csv.row({static_cast<double>(k), row[k]});
    return 0;
  }
  throw std::invalid_argument("unknown stats mode: " + mode);
}

int emit_gha(const DeloneSequence& seq, std::size_t n_max, const std::string& format,
             Output& out) {
  const GhaModel model(seq);
  if (format == "svg") {
    PlotSeries sa, sg, sd;
    sa.label = "alpha";
    sg.label = "gamma";
    sg.color = "#d62728";
    sd.label = "delta";
    sd.color = "#2ca02c";
    for (std::size_t k = 0; k <= n_max; ++k) {
      const double x = seq.value(k);
      sa.x.push_back(static_cast<double>(k));
      sa.y.push_back(seq.alpha(k));
      sg.x.push_back(static_cast<double>(k));
      sg.y.push_back(model.gamma(x));
      sd.x.push_back(static_cast<double>(k));
      sd.y.push_back(model.delta(x));
    }
    write_svg_plot(out.buf, {sa, sg, sd}, "GHA perturbation functions");
    return 0;
  }
  CsvWriter csv(out.buf, {"n", "alpha", "gamma", "delta"});
  for (std::size_t k = 0; k <= n_max; ++k) {
    const double x = seq.value(k);
    csv.row({static_cast<double>(k), seq.alpha(k), model.gamma(x), model.delta(x)});
  }
  return 0;
}

int run_gha(const std::string& spec_path, std::size_t n_max, const std::string& format,
            Output& out) {
  auto seq = load_spec(spec_path);
  return emit_gha(*seq, n_max, format, out);
}

int run_figure(const std::string& which, double epsilon, std::size_t n_max,
               std::size_t skip_first, double tol, const std::string& format, Output& out) {
  if (which == "fig1") {
    return run_measures(epsilon, 0.0, 30.0, 121, tol, format, out);
  }
  if (which == "fig2") {
    const DeloneSequence seq(SequenceSpec::constant_shift(epsilon));
    const MomentTable t = mu_sequence(seq, n_max ? n_max : 14, tol);
    const RenormalizedSequence ren = renormalize(seq, t);
    if (format == "svg") {
      PlotSeries s;
      s.label = "x_n - xt_n";
      for (std::size_t n = 0; n < t.mu.size(); ++n) {
        s.x.push_back(static_cast<double>(n));
        s.y.push_back(seq.value(n) - ren.value(n));
      }
      write_svg_plot(out.buf, {s}, "renormalization shift");
      return 0;
    }
    CsvWriter csv(out.buf, {"n", "x_n_minus_xt_n"});
    for (std::size_t n = 0; n < t.mu.size(); ++n)
      csv.row({static_cast<double>(n), seq.value(n) - ren.value(n)});
    return 0;
  }
  if (which == "fig3") {
    const DeloneSequence seq(SequenceSpec::sine_over_n(epsilon, 1.0));
    const std::size_t nm = n_max ? n_max : 300;
    const MomentTable t = mu_sequence(seq, nm, tol);
    if (format == "svg") {
      PlotSeries s;
      s.label = "mu_n";
      for (std::size_t n = std::max<std::size_t>(1, skip_first); n <= nm; ++n) {
        s.x.push_back(static_cast<double>(n));
        s.y.push_back(t.mu[n]);
      }
      write_svg_plot(out.buf, {s}, "oscillating moment ratios");
      return 0;
    }
    CsvWriter csv(out.buf, {"n", "mu_n"});
    for (std::size_t n = std::max<std::size_t>(1, skip_first); n <= nm; ++n)
      csv.row({static_cast<double>(n), t.mu[n]});
    return 0;
  }
  if (which == "fig4") {
    const DeloneSequence seq(SequenceSpec::homographic(0.1, 0.0, 1.0, 2.2));
    return emit_gha(seq, n_max ? n_max : 40, format, out);
  }
  throw std::invalid_argument("unknown figure: " + which);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deloneq: deformed exponentials, moment integrals, renormalized "
               "sequences, and coherent-state quantization for Delone perturbations "
               "of the naturals"};
  app.require_subcommand(1);

  std::string spec_path, out_path, format = "csv";
  double tol = 1e-10;

  std::size_t n_max = 20, dim = 16, steps = 121, skip_first = 0, spec_n = 8;
  double t_val = 2.0, t_min = 0.0, t_max = 30.0;
  double epsilon = 0.1, p_prob = 0.5, a_param = 1.0, eps_param = 0.1;
  std::string symbol = "one", mode = "poisson", figure;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec)
      sub->add_option("--spec", spec_path, "sequence spec JSON file")->required();
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--format", format, "csv or svg")->capture_default_str();
    sub->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  };

  auto* seq_cmd = app.add_subcommand(
      "seq", "evaluate the sequence x_n = n + alpha(n) and its perturbation");
  add_common(seq_cmd, true);
  seq_cmd->add_option("--nmax", n_max, "largest index")->capture_default_str();

  auto* mu_cmd = app.add_subcommand(
      "mu", "moment ratios mu_n = I(n)/x_n! of the deformed exponential");
  add_common(mu_cmd, true);
  mu_cmd->add_option("--nmax", n_max, "largest order")->capture_default_str();

  auto* ren_cmd = app.add_subcommand(
      "renorm", "renormalized sequence xt_n = (mu_n/mu_{n-1}) x_n");
  add_common(ren_cmd, true);
  ren_cmd->add_option("--nmax", n_max, "largest index")->capture_default_str();

  auto* mea_cmd = app.add_subcommand(
      "measures",
      "solved weight density vs the renormalized nu density for the constant shift");
  add_common(mea_cmd, false);
  mea_cmd->add_option("--epsilon", epsilon, "shift parameter")->capture_default_str();
  mea_cmd->add_option("--tmin", t_min, "grid start")->capture_default_str();
  mea_cmd->add_option("--tmax", t_max, "grid end")->capture_default_str();
  mea_cmd->add_option("--steps", steps, "grid points")->capture_default_str();

  auto* qu_cmd = app.add_subcommand(
      "quantize", "coherent-state quantization of a radial symbol (matrix entries)");
  add_common(qu_cmd, true);
  qu_cmd->add_option("--symbol", symbol, "one|z|zbar|zzbar|q|p")->capture_default_str();
  qu_cmd->add_option("--dim", dim, "truncation dimension")->capture_default_str();

  auto* sp_cmd = app.add_subcommand(
      "spectrum", "eigenvalues of the truncated position operator (Jacobi matrix)");
  add_common(sp_cmd, true);
  sp_cmd->add_option("--n", spec_n, "truncation size")->capture_default_str();

  auto* st_cmd = app.add_subcommand(
      "stats", "Poisson-like pmf or the deformed binomial row");
  add_common(st_cmd, true);
  st_cmd->add_option("--mode", mode, "poisson|binomial")->capture_default_str();
  st_cmd->add_option("--t", t_val, "Poisson-like intensity")->capture_default_str();
  st_cmd->add_option("--n", n_max, "support size / trial count")->capture_default_str();
  st_cmd->add_option("--p", p_prob, "win probability")->capture_default_str();
  st_cmd->add_option("--a", a_param, "Kummer parameter a")->capture_default_str();
  st_cmd->add_option("--eps", eps_param, "perturbation size")->capture_default_str();

  auto* gha_cmd = app.add_subcommand(
      "gha", "generalized Heisenberg algebra functions gamma, delta, h");
  add_common(gha_cmd, true);
  gha_cmd->add_option("--nmax", n_max, "largest index")->capture_default_str();

  auto* fig_cmd = app.add_subcommand(
      "figures", "canned datasets: fig1 (measures), fig2 (renormalization shift), "
                 "fig3 (oscillating mu_n), fig4 (GHA curves)");
  fig_cmd->add_option("figure", figure, "fig1|fig2|fig3|fig4")->required();
  fig_cmd->add_option("--epsilon", epsilon, "family parameter")->capture_default_str();
  fig_cmd->add_option("--nmax", n_max, "largest index (0 = figure default)")
      ->default_val(0);
  fig_cmd->add_option("--skip-first", skip_first,
                      "drop the first K indices (large oscillations near the origin)")
      ->capture_default_str();
  fig_cmd->add_option("--out", out_path, "output file (default: stdout)");
  fig_cmd->add_option("--format", format, "csv or svg")->capture_default_str();
  fig_cmd->add_option("--tol", tol, "numeric tolerance")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.path = out_path;
  try {
    int rc = 0;
    if (*seq_cmd) rc = run_seq(spec_path, n_max, out);
    if (*mu_cmd) rc = run_mu(spec_path, n_max, tol, format, out);
    if (*ren_cmd) rc = run_renorm(spec_path, n_max, tol, out);
    if (*mea_cmd) rc = run_measures(epsilon, t_min, t_max, steps, tol, format, out);
    if (*qu_cmd) rc = run_quantize(spec_path, symbol, dim, tol, out);
    if (*sp_cmd) rc = run_spectrum(spec_path, spec_n, tol, out);
    if (*st_cmd) rc = run_stats(spec_path, mode, t_val, n_max, p_prob, a_param,
                                eps_param, tol, out);
    if (*gha_cmd) rc = run_gha(spec_path, n_max, format, out);
    if (*fig_cmd) rc = run_figure(figure, epsilon, n_max, skip_first, tol, format, out);
    out.flush();
    return rc;
  } catch (const quadrature_error& e) {
    std::cerr << "numeric non-convergence: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
