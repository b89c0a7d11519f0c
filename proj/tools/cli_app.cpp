#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ctqw/amplitudes.hpp"
#include "ctqw/asymptotics.hpp"
#include "ctqw/error.hpp"
#include "ctqw/families.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/io.hpp"
#include "ctqw/moments.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw::cli {

using json = nlohmann::json;

namespace {

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    fail(ErrorCode::ParseError, "not a number: '" + s + "'");
  return v;
}

std::size_t to_size(const std::string& s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) fail(ErrorCode::ParseError, "not a count: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<double> parse_time_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) fail(ErrorCode::ParseError, "time grid must be a:b:steps");
    const double a = to_double(parts[0]), b = to_double(parts[1]);
    const std::size_t steps = to_size(parts[2]);
    if (!(a >= 0.0) || !(b > a) || steps < 1)
      fail(ErrorCode::ParseError, "time grid needs 0 <= a < b and steps >= 1");
    if (steps == 1) return {a};
    std::vector<double> t(steps);
    for (std::size_t i = 0; i < steps; ++i)
      t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(steps - 1);
    t.back() = b;
    return t;
  }
  std::vector<double> t;
  for (const auto& p : split(text, ',')) {
    const double v = to_double(p);
    if (v < 0.0) fail(ErrorCode::ParseError, "times must be non-negative");
    t.push_back(v);
  }
  if (t.empty()) fail(ErrorCode::ParseError, "empty time list");
  return t;
}

std::vector<std::size_t> parse_int_range(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) fail(ErrorCode::ParseError, "range must be a:b:step");
    const std::size_t a = to_size(parts[0]), b = to_size(parts[1]), step = to_size(parts[2]);
    if (step == 0 || b < a) fail(ErrorCode::ParseError, "range needs a <= b and step >= 1");
    for (std::size_t v = a; v <= b; v += step) out.push_back(v);
    return out;
  }
  for (const auto& p : split(text, ',')) out.push_back(to_size(p));
  if (out.empty()) fail(ErrorCode::ParseError, "empty range");
  return out;
}

namespace {

struct Options {
  std::string family;
  std::string graph_path;
  std::size_t origin = 0;
  std::optional<double> scale;
  std::string times;  // empty selects the command default
  std::size_t kmax = 3;
  std::string method;
  std::size_t order = 0;
  std::string measure_kind = "gauss";
  std::string out_path;
  std::string format = "csv";
  // measure
  std::size_t points = 401;
  std::string range;
  double eps = 1e-6;
  // moments
  std::string q_orders = "1,2";
  std::string convention;
  // asymptotics
  bool pi_table = false;
  std::string n_range = "100:700:50";
  double dt = 0.05;
  std::size_t k = 0;
  // verify
  double tol = 1e-8;
};

struct Source {
  std::optional<FamilySpec> spec;
  std::optional<Graph> graph;
  std::optional<JacobiSeq> jacobi;
  std::string label;
  double scale = 1.0;
};

Source load_source(const Options& o) {
  if (o.family.empty() == o.graph_path.empty())
    fail(ErrorCode::ParseError, "give exactly one of --family or --graph");
  Source src;
  if (!o.graph_path.empty()) {
    src.graph = load_graph_file(o.graph_path, o.origin);
    src.scale = o.scale.value_or(1.0);
    src.jacobi = extract_jacobi(*src.graph, stratify(*src.graph)).with_scale(src.scale);
    src.label = o.graph_path;
    return src;
  }
  auto spec = parse_family(o.family);
  if (o.scale) spec.scale = o.scale;
  src.scale = spec.scale.value_or(default_scale(spec));
  src.jacobi = family_jacobi(spec);
  if (has_explicit_graph(spec.kind)) src.graph = family_graph(spec);
  src.label = format_family(spec);
  src.spec = std::move(spec);
  return src;
}

Method parse_method(const std::string& name) {
  if (name == "quadrature") return Method::Quadrature;
  if (name == "ode") return Method::ODE;
  if (name == "closed") return Method::ClosedForm;
  if (name == "oracle") return Method::Oracle;
  fail(ErrorCode::ParseError, "unknown method '" + name + "'");
}

AmplitudeSeries resize(const AmplitudeSeries& s, std::size_t kmax) {
  if (s.kmax == kmax) return s;
  AmplitudeSeries r(s.times, kmax, s.method);
  r.max_tail_mass = s.max_tail_mass;
  for (std::size_t ti = 0; ti < s.times.size(); ++ti)
    for (std::size_t k = 0; k <= std::min(kmax, s.kmax); ++k) r.at(ti, k) = s.at(ti, k);
  return r;
}

double t_max_of(std::span<const double> times) {
  return times.empty() ? 0.0 : *std::max_element(times.begin(), times.end());
}

SpectralMeasure amplitude_measure(const Source& src, const Options& o, double t_max) {
  if (o.measure_kind == "closed") {
    if (!src.spec) fail(ErrorCode::ParseError, "--measure closed needs --family");
    return closed_form_measure(*src.spec);
  }
  if (o.measure_kind != "gauss") fail(ErrorCode::ParseError, "--measure is gauss or closed");
  const std::size_t n = o.order ? o.order : default_quadrature_order(*src.jacobi, t_max);
  return jacobi_to_quadrature(*src.jacobi, n);
}

AmplitudeSeries oracle_series(const Source& src, std::size_t kmax, std::span<const double> times) {
  if (!src.graph) fail(ErrorCode::ParseError, "the oracle needs an explicit graph");
  const auto s = stratify(*src.graph);
  const DenseEvolution dense(*src.graph);
  AmplitudeSeries series({times.begin(), times.end()}, kmax, Method::Oracle);
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const auto q = stratum_project(dense.evolve(src.scale, times[ti]), s);
    for (std::size_t k = 0; k <= kmax && k < q.size(); ++k) series.at(ti, k) = q[k];
  }
  return series;
}

AmplitudeSeries compute_series(const Source& src, Method m, const Options& o, std::size_t kmax,
                               std::span<const double> times) {
  switch (m) {
    case Method::Quadrature:
      return amplitude_quadrature_series(amplitude_measure(src, o, t_max_of(times)), *src.jacobi,
                                         kmax, times);
    case Method::ODE: {
      std::size_t K = o.order ? o.order : default_quadrature_order(*src.jacobi, t_max_of(times));
      K = std::max(K, kmax);
      return resize(amplitude_ode(*src.jacobi, K, times), kmax);
    }
    case Method::ClosedForm:
      if (!src.spec) fail(ErrorCode::ParseError, "closed forms need --family");
      return amplitude_closed_form_series(*src.spec, kmax, times);
    case Method::Oracle:
      return oracle_series(src, kmax, times);
    case Method::Product:
      break;
  }
  fail(ErrorCode::ParseError, "method not available from the command line");
}

// {family, params, method, data}
json envelope(const Source& src, const std::string& method, json data) {
  json params = json::object();
  std::string family = "graph";
  if (src.spec) {
    family = std::string(family_name(src.spec->kind));
    for (const auto& [name, value] : src.spec->params) params[name] = value;
  } else {
    params["path"] = src.label;
  }
  if (src.graph) {
    params["vertices"] = src.graph->vertex_count();
    params["origin"] = src.graph->origin();
  }
  params["scale"] = src.scale;
  return {{"family", family}, {"params", std::move(params)}, {"method", method}, {"data", std::move(data)}};
}

json series_json(const Source& src, const AmplitudeSeries& s) {
  json re = json::array(), im = json::array();
  for (std::size_t ti = 0; ti < s.times.size(); ++ti) {
    json r = json::array(), i = json::array();
    for (std::size_t k = 0; k <= s.kmax; ++k) {
      r.push_back(s.at(ti, k).real());
      i.push_back(s.at(ti, k).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(i));
  }
  return envelope(src, std::string(to_string(s.method)),
                  {{"kmax", s.kmax}, {"times", s.times}, {"re", std::move(re)}, {"im", std::move(im)}});
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out_path.empty())
    out << content;
  else
    write_atomic(o.out_path, content);
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") fail(ErrorCode::ParseError, "--format is csv or json");
}

// ---- commands ----

void cmd_amplitudes(const Options& o, std::ostream& out) {
  check_format(o);
  const auto src = load_source(o);
  const auto times = parse_time_grid(o.times);
  const auto series = compute_series(src, parse_method(o.method.empty() ? "quadrature" : o.method), o,
                                     o.kmax, times);
  emit(o, o.format == "csv" ? amplitudes_csv(series) : series_json(src, series).dump() + "\n", out);
}

std::vector<double> density_grid(const Options& o, double lo, double hi) {
  if (!o.range.empty()) {
    const auto parts = split(o.range, ':');
    if (parts.size() != 2) fail(ErrorCode::ParseError, "--range must be a:b");
    lo = to_double(parts[0]);
    hi = to_double(parts[1]);
    if (!(hi > lo)) fail(ErrorCode::ParseError, "--range needs a < b");
  }
  if (o.points < 1) fail(ErrorCode::ParseError, "--points must be positive");
  // cell midpoints keep singular endpoints off the grid
  std::vector<double> x(o.points);
  for (std::size_t i = 0; i < o.points; ++i)
    x[i] = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(o.points);
  return x;
}

void cmd_measure(const Options& o, std::ostream& out) {
  check_format(o);
  const auto src = load_source(o);
  std::string method = o.method;
  if (method.empty()) {
    method = "quadrature";
    if (src.spec) {
      try {
        closed_form_measure(*src.spec);
        method = "closed";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoClosedFormMeasure) throw;
      }
    }
  }

  SpectralMeasure mu;
  std::vector<double> grid, stieltjes;
  if (method == "closed") {
    if (!src.spec) fail(ErrorCode::ParseError, "closed measures need --family");
    mu = closed_form_measure(*src.spec);
    if (const auto* c = std::get_if<ContinuousMeasure>(&mu)) {
      const double lo = std::isfinite(c->lo) ? c->lo : (std::isfinite(c->hi) ? c->hi - 20.0 : -10.0);
      const double hi = std::isfinite(c->hi) ? c->hi : lo + 20.0;
      grid = density_grid(o, lo, hi);
    }
  } else if (method == "quadrature") {
    const std::size_t n = o.order ? o.order : src.jacobi->levels().value_or(64);
    mu = jacobi_to_quadrature(*src.jacobi, n);
  } else if (method == "stieltjes") {
    const std::size_t depth = o.order ? o.order : default_cf_depth(*src.jacobi);
    const double r = gershgorin_radius(*src.jacobi, src.jacobi->levels().value_or(64));
    grid = density_grid(o, -r, r);
    stieltjes = stieltjes_inversion(*src.jacobi, grid, o.eps, depth);
  } else {
    fail(ErrorCode::ParseError, "measure method is closed, quadrature or stieltjes");
  }

  if (method == "stieltjes") {
    if (o.format == "json") {
      emit(o, envelope(src, method, {{"x", grid}, {"density", stieltjes}}).dump() + "\n", out);
    } else {
      std::string csv = "x,density\n";
      for (std::size_t i = 0; i < grid.size(); ++i)
        csv += format_double(grid[i]) + "," + format_double(stieltjes[i]) + "\n";
      emit(o, csv, out);
    }
    return;
  }
  if (o.format == "csv") {
    emit(o, measure_csv(mu, grid), out);
    return;
  }
  json doc = json::object();
  if (const auto* d = std::get_if<DiscreteMeasure>(&mu)) {
    doc["nodes"] = d->nodes;
    doc["weights"] = d->weights;
  } else {
    const auto& c = std::get<ContinuousMeasure>(mu);
    std::vector<double> dens;
    for (double x : grid) dens.push_back(c.density(x));
    doc["x"] = grid;
    doc["density"] = dens;
    doc["atom_nodes"] = c.atoms.nodes;
    doc["atom_weights"] = c.atoms.weights;
  }
  emit(o, envelope(src, method, std::move(doc)).dump() + "\n", out);
}

void cmd_moments(const Options& o, std::ostream& out) {
  check_format(o);
  const auto src = load_source(o);
  const auto times = parse_time_grid(o.times);
  std::vector<unsigned> orders;
  for (auto q : parse_int_range(o.q_orders)) orders.push_back(static_cast<unsigned>(q));

  MomentConvention conv = MomentConvention::Strata;
  if (o.convention == "line" || (o.convention.empty() && src.spec && src.spec->kind == FamilyKind::Line))
    conv = MomentConvention::SignedLine;
  else if (!o.convention.empty() && o.convention != "strata")
    fail(ErrorCode::ParseError, "--convention is strata or line");

  MomentReport rep;
  const std::string method = o.method.empty() ? "ode" : o.method;
  if (method == "closed") {
    if (!src.spec) fail(ErrorCode::ParseError, "closed moments need --family");
    rep.q_orders = orders;
    rep.times = times;
    for (unsigned q : orders) {
      std::vector<double> v;
      for (double t : times) v.push_back(closed_moments(*src.spec, q, t));
      rep.values.push_back(std::move(v));
    }
    for (double t : times) rep.sigma.push_back(closed_sigma(*src.spec, t));
    try {
      rep.nu = fit_exponent(rep.times, rep.sigma);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientSpan) throw;
    }
  } else {
    std::size_t kmax = o.kmax;
    if (method == "ode" || method == "quadrature") {
      // moments need the whole occupied chain
      kmax = std::max(kmax, default_quadrature_order(*src.jacobi, t_max_of(times)) - 1);
      if (src.jacobi->levels()) kmax = std::min(kmax, *src.jacobi->levels() - 1);
    }
    const auto series = compute_series(src, parse_method(method), o, kmax, times);
    rep = moment_report(series, orders, conv);
  }

  if (o.format == "json") {
    json doc{{"q", rep.q_orders}, {"times", rep.times}, {"values", rep.values}, {"sigma", rep.sigma}};
    if (rep.nu) doc["nu"] = {{"value", rep.nu->nu}, {"half_width", rep.nu->half_width},
                             {"coeff", rep.nu->coeff}, {"points", rep.nu->points}};
    emit(o, envelope(src, method, std::move(doc)).dump() + "\n", out);
    return;
  }
  std::string csv = "t";
  for (unsigned q : rep.q_orders) csv += ",m" + std::to_string(q);
  csv += ",sigma\n";
  for (std::size_t ti = 0; ti < rep.times.size(); ++ti) {
    csv += format_double(rep.times[ti]);
    for (const auto& v : rep.values) csv += "," + format_double(v[ti]);
    csv += "," + format_double(rep.sigma[ti]) + "\n";
  }
  emit(o, csv, out);
}

void pi_table(const Options& o, const Source& src, std::ostream& out) {
  if (!src.spec || src.spec->kind != FamilyKind::Line)
    fail(ErrorCode::ParseError, "--pi-table needs --family line");
  const auto ts = parse_time_grid(o.times);
  const double t_max = t_max_of(ts);
  const auto ns = parse_int_range(o.n_range);
  std::vector<double> maxima(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0) fail(ErrorCode::ParseError, "quadrature order must be positive");
    maxima[i] = max_finite_infinite_diff(ns[i], t_max, o.dt);
  }
  if (o.format == "json") {
    emit(o,
         envelope(src, "pi-table", {{"t_max", t_max}, {"dt", o.dt}, {"n", ns}, {"max_pi", maxima}}).dump() + "\n",
         out);
    return;
  }
  std::string csv = "n,max_pi\n";
  for (std::size_t i = 0; i < ns.size(); ++i) csv += std::to_string(ns[i]) + "," + format_double(maxima[i]) + "\n";
  emit(o, csv, out);
}

AsymptoticForm leading_form(const FamilySpec& spec, std::size_t k, double scale) {
  switch (spec.kind) {
    case FamilyKind::Laguerre:
      return laguerre_asymptotic(spec.param_or("a", 1.0) * scale, spec.param_or("gamma", 0.0), k);
    case FamilyKind::HermiteInfinite: {
      auto f = hermite_asymptotic(k);
      // |q_k| = τ^k e^{−τ²/2}/√k! with τ = scale·t
      f.amplitude_coeff *= std::pow(scale, static_cast<double>(k));
      f.gaussian_rate *= scale * scale;
      return f;
    }
    default:
      break;
  }
  if (k != 0) fail(ErrorCode::UnsupportedEdgeBehavior, "edge asymptotics are implemented for q_0 only");
  const auto mu = closed_form_measure(spec);
  const auto* c = std::get_if<ContinuousMeasure>(&mu);
  if (!c) fail(ErrorCode::UnsupportedEdgeBehavior, "discrete measures have no decaying asymptotics");
  return stationary_phase_edge(*c, scale);
}

void cmd_asymptotics(const Options& o, std::ostream& out) {
  check_format(o);
  const auto src = load_source(o);
  if (o.pi_table) {
    pi_table(o, src, out);
    return;
  }
  if (!src.spec) fail(ErrorCode::ParseError, "asymptotics needs --family");
  const auto window = parse_time_grid(o.times);
  const double t1 = window.front(), t2 = window.back();
  const auto form = leading_form(*src.spec, o.k, src.scale);
  const auto grid = wkb_grid(form, t1, t2, std::max<std::size_t>(o.points, 200));

  const Options& eo = o;
  AmplitudeSeries exact;
  if (!o.method.empty()) {
    exact = compute_series(src, parse_method(o.method), eo, o.k, grid);
  } else {
    try {
      exact = amplitude_closed_form_series(*src.spec, o.k, grid);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoClosedForm) throw;
      // Gauss quadrature sized to the light cone at t2; adaptive integration of
      // the oscillatory density is far slower at these times
      exact = compute_series(src, Method::Quadrature, eo, o.k, grid);
    }
  }
  const auto rep = wkb_validate(exact, o.k, form, t1, t2);
  if (o.format == "json") {
    json doc{{"k", o.k},
             {"p_fitted", rep.p_fitted},
             {"p_half_width", rep.p_half_width},
             {"p_theory", rep.p_theory},
             {"C_fitted", rep.C_fitted},
             {"C_theory", rep.C_theory},
             {"max_coeff_error", rep.max_coeff_error},
             {"mean_coeff_error", rep.mean_coeff_error},
             {"power_law_rejected", rep.power_law_rejected},
             {"window", {rep.t1, rep.t2}}};
    emit(o, envelope(src, "wkb:" + std::string(to_string(exact.method)), std::move(doc)).dump() + "\n", out);
    return;
  }
  std::string csv = "t,re,im,approx\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto q = exact.at(i, o.k);
    csv += format_double(grid[i]) + "," + format_double(q.real()) + "," + format_double(q.imag()) + "," +
           format_double(form.value(grid[i])) + "\n";
  }
  emit(o, csv, out);
}

double max_dev(const AmplitudeSeries& a, const AmplitudeSeries& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

bool cmd_verify(const Options& o, std::ostream& out) {
  const auto src = load_source(o);
  if (!src.graph) fail(ErrorCode::ParseError, "verify needs a finite family with an explicit graph or --graph");
  const auto times = parse_time_grid(o.times);
  const auto strata = stratify(*src.graph);
  const std::size_t kmax = strata.depth() - 1;
  const auto& j = *src.jacobi;

  const DenseEvolution dense(*src.graph);
  AmplitudeSeries oracle(times, kmax, Method::Oracle);
  std::vector<cvec> psis;
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    psis.push_back(dense.evolve(src.scale, times[ti]));
    const auto q = stratum_project(psis.back(), strata);
    for (std::size_t k = 0; k <= kmax; ++k) oracle.at(ti, k) = q[k];
  }

  json devs = json::object();
  double worst = 0.0;
  auto record = [&](const char* name, double d) {
    devs[name] = d;
    worst = std::max(worst, d);
  };
  const auto quad = amplitude_quadrature_series(jacobi_to_quadrature(j, *j.levels()), j, kmax, times);
  record("quadrature", max_dev(quad, oracle));
  record("ode", max_dev(resize(amplitude_ode(j, kmax, times), kmax), oracle));
  if (src.spec) {
    try {
      record("closed", max_dev(amplitude_closed_form_series(*src.spec, kmax, times), oracle));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoClosedForm) throw;
    }
  }
  // every vertex of stratum k carries q_k/√|V_k|
  double site = 0.0;
  for (std::size_t ti = 0; ti < times.size(); ++ti)
    for (Vertex v = 0; v < src.graph->vertex_count(); ++v) {
      const std::size_t k = strata.distance[v];
      const auto expect = quad.at(ti, k) / std::sqrt(static_cast<double>(strata.strata[k].size()));
      site = std::max(site, std::abs(psis[ti][v] - expect));
    }
  record("site", site);

  const bool pass = worst < o.tol;
  json doc{{"strata", strata.depth()}, {"times", times}, {"max_deviation", devs},
           {"max", worst},           {"tol", o.tol},     {"pass", pass}};
  emit(o, envelope(src, "verify", std::move(doc)).dump() + "\n", out);
  return pass;
}

void cmd_list(const Options& o, std::ostream& out) {
  check_format(o);
  if (o.format == "json") {
    json arr = json::array();
    for (auto kind : all_families())
      arr.push_back({{"name", std::string(family_name(kind))}, {"graph", has_explicit_graph(kind)}});
    emit(o, arr.dump() + "\n", out);
    return;
  }
  std::string text;
  for (auto kind : all_families())
    text += std::string(family_name(kind)) + (has_explicit_graph(kind) ? "\tgraph\n" : "\tsequence\n");
  emit(o, text, out);
}

void error_line(std::ostream& err, std::string_view code, const std::string& message, int exit) {
  err << json{{"error", std::string(code)}, {"message", message}, {"exit", exit}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks on stratified graphs", "ctqw"};
  app.require_subcommand(1);
  Options o;

  auto source_opts = [&](CLI::App* c) {
    c->add_option("--family", o.family, "family spec, e.g. cycle:n=7");
    c->add_option("--graph", o.graph_path, "graph file (.json or adjacency .csv)");
    c->add_option("--origin", o.origin, "origin vertex for adjacency CSV input");
    c->add_option("--scale", o.scale, "Hamiltonian scale override");
    c->add_option("--out", o.out_path, "output file (written atomically)");
    c->add_option("--format", o.format, "csv or json");
  };
  auto method_opts = [&](CLI::App* c) {
    c->add_option("--method", o.method, "quadrature, ode, closed or oracle");
    c->add_option("--order", o.order, "quadrature order / ODE truncation");
    c->add_option("--measure", o.measure_kind, "gauss or closed (quadrature method)");
  };

  auto* amp = app.add_subcommand("amplitudes", "stratum amplitudes q_k(t)");
  source_opts(amp);
  method_opts(amp);
  amp->add_option("--t", o.times, "a:b:steps or t1,t2,...");
  amp->add_option("--kmax", o.kmax, "largest stratum index");

  auto* meas = app.add_subcommand("measure", "spectral distribution");
  source_opts(meas);
  meas->add_option("--method", o.method, "closed, quadrature or stieltjes");
  meas->add_option("--order", o.order, "quadrature order / continued-fraction depth");
  meas->add_option("--points", o.points, "density grid points");
  meas->add_option("--range", o.range, "density grid a:b");
  meas->add_option("--eps", o.eps, "Stieltjes inversion offset");

  auto* mom = app.add_subcommand("moments", "moments <k^q> and spread");
  source_opts(mom);
  method_opts(mom);
  mom->add_option("--t", o.times, "a:b:steps or t1,t2,...");
  mom->add_option("--q", o.q_orders, "moment orders, e.g. 1,2,4");
  mom->add_option("--convention", o.convention, "strata or line");

  auto* asy = app.add_subcommand("asymptotics", "large-time forms and the pi(n,t) table");
  source_opts(asy);
  method_opts(asy);
  asy->add_flag("--pi-table", o.pi_table, "max over [0,t] of pi(n,t) per n (family line)");
  asy->add_option("--n", o.n_range, "quadrature orders a:b:step");
  asy->add_option("--t", o.times, "time window a:b:steps, or t_max for the table");
  asy->add_option("--dt", o.dt, "time step of the pi(n,t) scan");
  asy->add_option("--k", o.k, "stratum");
  asy->add_option("--points", o.points, "minimum window samples");

  auto* ver = app.add_subcommand("verify", "agreement of all methods with the dense oracle");
  source_opts(ver);
  ver->add_option("--t", o.times, "times");
  ver->add_option("--tol", o.tol, "pass threshold");

  auto* lst = app.add_subcommand("list-families", "known families");
  lst->add_option("--format", o.format, "csv or json");
  lst->add_option("--out", o.out_path, "output file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "ParseError", e.what(), kParseError);
    return kParseError;
  }

  if (o.times.empty() && (amp->parsed() || mom->parsed())) o.times = "0:10:101";
  try {
    if (amp->parsed()) cmd_amplitudes(o, out);
    else if (meas->parsed()) cmd_measure(o, out);
    else if (mom->parsed()) cmd_moments(o, out);
    else if (asy->parsed()) {
      if (o.times.empty()) o.times = o.pi_table ? "1000" : "50:500:2";
      cmd_asymptotics(o, out);
    } else if (ver->parsed()) {
      if (o.times.empty()) o.times = "1,5,20";
      return cmd_verify(o, out) ? kOk : kCheckFailed;
    } else {
      cmd_list(o, out);
    }
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::NotQDGraph ? kNotQD
                     : is_numerical(e.code())          ? kNumerical
                                                       : kParseError;
    error_line(err, to_string(e.code()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    error_line(err, "Internal", e.what(), kNumerical);
    return kNumerical;
  }
  return kOk;
}

}  // namespace ctqw::cli
