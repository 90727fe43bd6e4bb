#include "pmt/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/moments.hpp"
#include "pmt/pmt.hpp"
#include "pmt/rh.hpp"
#include "pmt/special.hpp"
#include "pmt/zeta.hpp"

namespace pmt::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kDefaultTol = 1e-12;

json cplx(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(text) + "'");
  return v;
}

// Tolerance default: PM_TOL if set, then --tol.
double base_tolerance() {
  if (const char* env = std::getenv("PM_TOL"); env && *env) {
    const double v = parse_double(env);
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidArgument, "PM_TOL must be > 0");
    return v;
  }
  return kDefaultTol;
}

struct Envelope {
  std::string command;
  json inputs = json::object();
  json defaults = json::object();
  json value;
  std::optional<double> err_est;
  std::optional<double> sigma_used;
  std::optional<std::size_t> nodes;
  std::optional<std::string> fallback_used;
  json extra = json::object();

  void set_quad(const QuadResult& q) {
    value = cplx(q.value);
    err_est = q.err_est;
    sigma_used = q.sigma_used;
    nodes = q.nodes;
  }

  json finish(Clock::time_point start) const {
    json j{{"command", command}, {"inputs", inputs}, {"defaults", defaults}, {"value", value}};
    j["err_est"] = err_est ? json(*err_est) : json(nullptr);
    j["sigma_used"] = sigma_used ? json(*sigma_used) : json(nullptr);
    j["nodes"] = nodes ? json(*nodes) : json(nullptr);
    j["runtime_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (fallback_used) j["fallback_used"] = *fallback_used;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
  }
};

struct Options {
  std::string s_text = "0";
  double a = 1.0;
  std::optional<double> sigma;
  std::optional<double> tol;
  std::string dist = "normal";
  double scale = 1.0;
  std::string r_text = "1";
  std::string entry;
  std::string z_text = "0";
  std::vector<std::string> params;
  std::vector<std::string> entries;
  std::vector<std::string> props;
  bool extended = false;
  double from = 10.0;
  double to = 30.0;
  double step = 0.05;
  std::string csv;
  double x = 1.0;
};

int exit_for(const Error& e) {
  return e.is_numerical() ? ExitCode::numerical : ExitCode::usage;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

json report_rows(const VerificationReport& rep) { return json::parse(rep.to_json()); }

void write_csv_file(const std::string& path, const std::function<void(std::ostream&)>& fill) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open CSV path '" + path + "'");
  fill(f);
}

GammaConfig gamma_cfg(const Options& o, Envelope& env) {
  GammaConfig cfg;
  if (o.sigma) cfg.contour.sigma = *o.sigma;
  cfg.contour.tol = o.tol.value_or(base_tolerance());
  env.defaults = {{"sigma", cfg.contour.sigma},
                  {"tol", cfg.contour.tol},
                  {"rel_tol", cfg.contour.rel_tol},
                  {"step", cfg.contour.step}};
  return cfg;
}

ZetaConfig zeta_cfg(ZetaFamily family, const Options& o, Envelope& env) {
  ZetaConfig cfg = ZetaConfig::for_family(family);
  if (o.sigma) cfg.contour.sigma = *o.sigma;
  cfg.contour.tol = o.tol.value_or(base_tolerance());
  env.defaults = {{"sigma", cfg.contour.sigma},
                  {"tol", cfg.contour.tol},
                  {"rel_tol", cfg.contour.rel_tol},
                  {"step", cfg.contour.step},
                  {"integer_guard", kIntegerGuard}};
  return cfg;
}

int eval_function(const std::string& fn, const Options& o, Envelope& env) {
  const Complex s = parse_complex(o.s_text);
  env.command = "eval " + fn;
  env.inputs = {{"s", cplx(s)}};
  if (o.sigma) env.inputs["sigma"] = *o.sigma;
  if (o.tol) env.inputs["tol"] = *o.tol;

  if (fn == "gamma" || fn == "rgamma" || fn == "digamma") {
    const GammaConfig cfg = gamma_cfg(o, env);
    if (fn == "gamma") env.set_quad(gamma_fn_quad(s, cfg));
    if (fn == "rgamma") env.set_quad(reciprocal_gamma_quad(s, cfg));
    if (fn == "digamma") env.set_quad(digamma_quad(s, cfg));
    return ExitCode::ok;
  }

  const bool is_eta = fn == "eta";
  const double a = fn == "hurwitz" ? o.a : 1.0;
  if (fn == "hurwitz") env.inputs["a"] = a;
  const ZetaConfig cfg = zeta_cfg(is_eta ? ZetaFamily::D : ZetaFamily::R, o, env);

  if (!near_positive_integer(s)) {
    env.set_quad(is_eta ? eta_quad(s, cfg) : hurwitz_zeta_quad(s, a, cfg));
    return ExitCode::ok;
  }
  // The ratio form is 0/0 near s ∈ ℕ; switch to a formula regular there.
  if (a == 1.0) {
    if (is_eta && s == Complex{1.0, 0.0}) {
      env.value = cplx({std::numbers::ln2, 0.0});
      env.fallback_used = "limit";
      return ExitCode::ok;
    }
    const Complex z = jensen_oracle(s);
    env.value = cplx(is_eta ? (1.0 - std::exp((1.0 - s) * std::numbers::ln2)) * z : z);
    env.fallback_used = "jensen";
  } else {
    env.value = cplx(hurwitz_reference(s, a));
    env.fallback_used = "euler_maclaurin";
  }
  return ExitCode::ok;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::InvalidArgument, "--param expects key=value, got '" + item + "'");
    p[item.substr(0, eq)] = parse_double(std::string_view(item).substr(eq + 1));
  }
  return p;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty complex literal");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view v) {
    if (v.empty() || v == "+") return 1.0;
    if (v == "-") return -1.0;
    if (v.front() == '+') v.remove_prefix(1);
    return parse_double(v);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  CLI::App app{"Parabolic contour evaluation of Gamma- and zeta-family functions"};
  app.require_subcommand(1);
  Options o;
  Envelope env;
  std::function<int()> action;

  auto add_eval_fn = [&](CLI::App* parent, const std::string& fn) {
    auto* c = parent->add_subcommand(fn, "evaluate " + fn + "(s)");
    c->add_option("--s", o.s_text, "argument, RE[+IMi]")->required();
    if (fn == "hurwitz") c->add_option("--a", o.a, "shift a > 0");
    c->add_option("--sigma", o.sigma, "abscissa of the integration line");
    c->add_option("--tol", o.tol, "absolute quadrature tolerance");
    c->callback([&, fn] { action = [&, fn] { return eval_function(fn, o, env); }; });
  };

  auto* eval = app.add_subcommand("eval", "evaluate a special function");
  eval->require_subcommand(1);
  for (const char* fn : {"gamma", "rgamma", "digamma", "zeta", "eta", "hurwitz"})
    add_eval_fn(eval, fn);

  auto* moment = eval->add_subcommand("moment", "E|X|^r from the MGF");
  moment->add_option("--dist", o.dist, "normal | laplace | bernoulli | uniform");
  moment->add_option("--scale", o.scale, "normal sd or laplace b");
  moment->add_option("--r", o.r_text, "order, Re(r) > 0")->required();
  moment->add_option("--sigma", o.sigma, "abscissa");
  moment->add_option("--tol", o.tol, "absolute quadrature tolerance");
  moment->callback([&] {
    action = [&] {
      const Complex r = parse_complex(o.r_text);
      const MgfSpec d = make_distribution(o.dist, o.scale);
      const double tol = o.tol.value_or(base_tolerance());
      env.command = "eval moment";
      env.inputs = {{"dist", o.dist}, {"scale", o.scale}, {"r", cplx(r)}};
      if (o.sigma) env.inputs["sigma"] = *o.sigma;
      env.defaults = {{"sigma", d.default_sigma()}, {"tol", tol}};
      const MomentResult m = absolute_moment(d, r, o.sigma, tol);
      env.value = cplx(m.value);
      env.err_est = m.err_est;
      env.sigma_used = m.sigma_used;
      env.nodes = m.nodes;
      if (d.closed_form) env.extra["closed_form"] = cplx(d.closed_form(r));
      return int(ExitCode::ok);
    };
  });

  auto* eg = eval->add_subcommand("euler-gamma", "Euler's constant");
  eg->add_option("--sigma", o.sigma, "abscissa");
  eg->add_option("--tol", o.tol, "absolute quadrature tolerance");
  eg->callback([&] {
    action = [&] {
      env.command = "eval euler-gamma";
      if (o.sigma) env.inputs["sigma"] = *o.sigma;
      env.set_quad(euler_gamma_quad(gamma_cfg(o, env)));
      return int(ExitCode::ok);
    };
  });

  auto* pmt_cmd = app.add_subcommand("pmt", "parabolic transform dictionary");
  pmt_cmd->require_subcommand(1);
  auto* pe = pmt_cmd->add_subcommand("eval", "transform of a registered weight");
  pe->add_option("--entry", o.entry, "entry name")->required();
  pe->add_option("--z", o.z_text, "argument, RE[+IMi]")->required();
  pe->add_option("--param", o.params, "entry parameter key=value");
  pe->callback([&] {
    action = [&] {
      const Complex z = parse_complex(o.z_text);
      const Params p = parse_params(o.params);
      const WeightEntry e = make_entry(o.entry, p);
      env.command = "pmt eval";
      env.inputs = {{"entry", o.entry}, {"z", cplx(z)}, {"params", p}};
      env.defaults = {{"params", e.params},
                      {"mode", e.mode == PmtMode::absolute ? "absolute" : "boundary_abel"},
                      {"sigma", e.default_sigma}};
      if (e.mode == PmtMode::boundary_abel && e.damped)
        env.defaults["abel_epsilons"] = AbelSchedule{}.epsilons;
      env.set_quad(pmt_evaluate(e, z));
      try {
        env.extra["expected"] = cplx(e.expected(z));
      } catch (const Error&) {
        env.extra["expected"] = nullptr;  // no closed form at this z
      }
      return int(ExitCode::ok);
    };
  });

  auto* vt = pmt_cmd->add_subcommand("verify-table", "check every dictionary row");
  vt->add_option("--entries", o.entries, "subset of entries")->delimiter(',');
  vt->add_flag("--extended", o.extended, "also run the slow convolution check");
  vt->callback([&] {
    action = [&] {
      env.command = "pmt verify-table";
      env.inputs = {{"entries", o.entries}, {"extended", o.extended}};
      env.defaults = {{"absolute_tol", kAbsoluteRowTol}, {"boundary_tol", kBoundaryRowTol}};
      VerificationReport rep = dictionary_verify(o.entries);
      if (o.extended) rep.append(property_verify(Property::convolution));
      env.value = report_rows(rep);
      env.extra["all_pass"] = rep.all_pass();
      return int(rep.all_pass() ? ExitCode::ok : ExitCode::verification_failed);
    };
  });

  auto* vp = pmt_cmd->add_subcommand("verify-props", "check the operational rules");
  vp->add_option("--props", o.props, "subset of properties")->delimiter(',');
  vp->add_flag("--extended", o.extended, "include convolution in the default set");
  vp->callback([&] {
    action = [&] {
      env.command = "pmt verify-props";
      std::vector<std::string> names = o.props;
      if (names.empty()) {
        for (const auto& n : property_names())
          if (n != "convolution" || o.extended) names.push_back(n);
      }
      env.inputs = {{"props", names}, {"extended", o.extended}};
      VerificationReport rep;
      for (const auto& n : names) rep.append(property_verify(parse_property(n)));
      env.value = report_rows(rep);
      env.extra["all_pass"] = rep.all_pass();
      return int(rep.all_pass() ? ExitCode::ok : ExitCode::verification_failed);
    };
  });

  auto* scan = app.add_subcommand("scan", "root scanning");
  scan->require_subcommand(1);
  auto* zeros = scan->add_subcommand("zeros", "sign changes of the critical-line integral");
  zeros->add_option("--from", o.from, "tau_min")->required();
  zeros->add_option("--to", o.to, "tau_max")->required();
  zeros->add_option("--step", o.step, "coarse step");
  zeros->add_option("--sigma", o.sigma, "abscissa in (0, sqrt(pi/2))");
  zeros->add_option("--csv", o.csv, "also write CSV here");
  zeros->callback([&] {
    action = [&] {
      ScanConfig cfg;
      cfg.tau_min = o.from;
      cfg.tau_max = o.to;
      cfg.coarse_step = o.step;
      if (o.sigma) cfg.sigma = *o.sigma;
      env.command = "scan zeros";
      env.inputs = {{"from", o.from}, {"to", o.to}, {"step", o.step}};
      env.defaults = {{"sigma", cfg.sigma},
                      {"refine_tol", cfg.refine_tol},
                      {"zeta_threshold", cfg.zeta_threshold}};
      const auto roots = scan_zeros(cfg);
      json rows = json::array();
      for (const auto& r : roots)
        rows.push_back({{"tau", r.tau},
                        {"residual", r.residual},
                        {"scaled_residual", r.scaled_residual},
                        {"classification", to_string(r.classification)},
                        {"zeta_modulus", r.zeta_modulus},
                        {"slope", r.slope}});
      env.value = rows;
      env.sigma_used = cfg.sigma;
      if (!o.csv.empty()) write_csv_file(o.csv, [&](std::ostream& f) { write_roots_csv(f, roots); });
      return int(ExitCode::ok);
    };
  });

  auto* lind = app.add_subcommand("lindelof", "growth diagnostic of R on the critical line");
  double lind_step = 0.5;
  lind->add_option("--to", o.to, "largest tau (<= 30)")->required();
  lind->add_option("--step", lind_step, "grid spacing");
  lind->add_option("--sigma", o.sigma, "abscissa in (0, sqrt(pi))");
  lind->add_option("--csv", o.csv, "also write CSV here");
  lind->callback([&] {
    action = [&] {
      if (!(lind_step > 0.0)) throw Error(ErrorKind::InvalidArgument, "--step must be > 0");
      std::vector<double> grid;
      for (int i = 0;; ++i) {
        const double t = i * lind_step;
        if (t > o.to + 1e-12) break;
        grid.push_back(std::min(t, o.to));
      }
      const double sigma = o.sigma.value_or(1.7);
      env.command = "lindelof";
      env.inputs = {{"to", o.to}, {"step", lind_step}};
      env.defaults = {{"sigma", sigma}};
      const auto rows = lindelof_table(grid, sigma);
      json table = json::array();
      for (const auto& r : rows)
        table.push_back({{"tau", r.tau},
                         {"abs_r", r.abs_r},
                         {"normalized", r.normalized},
                         {"abs_g", r.abs_g}});
      env.value = table;
      env.sigma_used = sigma;
      if (!o.csv.empty())
        write_csv_file(o.csv, [&](std::ostream& f) { write_lindelof_csv(f, rows); });
      return int(ExitCode::ok);
    };
  });

  auto* check = app.add_subcommand("check", "numerical identity checks");
  check->require_subcommand(1);
  auto* van = check->add_subcommand("vanishing", "∫ e^{-itx}/w^{r+1} dt = 0");
  van->add_option("--x", o.x, "x > 0")->required();
  van->add_option("--r", o.r_text, "order, Re(r) >= 1")->required();
  van->add_option("--sigma", o.sigma, "abscissa");
  van->add_option("--tol", o.tol, "pass threshold (default 1e-6)");
  van->callback([&] {
    action = [&] {
      const Complex r = parse_complex(o.r_text);
      const ContourSpec spec = vanishing_spec(o.sigma.value_or(1.0));
      const double threshold = o.tol.value_or(1e-6);
      env.command = "check vanishing";
      env.inputs = {{"x", o.x}, {"r", cplx(r)}};
      env.defaults = {{"sigma", spec.sigma},
                      {"truncation", *spec.truncation},
                      {"threshold", threshold}};
      const double residual = vanishing_residual(o.x, r, spec);
      env.value = cplx({residual, 0.0});
      env.sigma_used = spec.sigma;
      env.extra["pass"] = residual < threshold;
      return int(residual < threshold ? ExitCode::ok : ExitCode::verification_failed);
    };
  });

  std::vector<std::string> argv_store{"pmt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return ExitCode::usage;
  }

  try {
    const int code = action ? action() : int(ExitCode::usage);
    out << env.finish(start).dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return exit_for(e);
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return ExitCode::numerical;
  }
}

}  // namespace pmt::cli
