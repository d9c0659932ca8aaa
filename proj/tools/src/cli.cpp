#include "hillspec_tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hillspec/parallel.hpp"

namespace hillspec::cli {
namespace {

using io::json;

struct OptionSpec {
  const char* name;
  const char* help;
  bool repeated = false;
  bool flag = false;
};

const std::vector<OptionSpec>& option_table() {
  static const std::vector<OptionSpec> table = {
      {"mathieu", "Mathieu coefficients a_re,a_im,b_re,b_im"},
      {"q", "Fourier coefficient n:re,im (repeatable)", true},
      {"potential", "potential JSON file {\"coeffs\": [...]}"},
      {"t", "quasimomentum"},
      {"t-grid", "number of quasimomenta -pi + 2 pi (j+1)/G"},
      {"n", "index or index range lo..hi"},
      {"method", "floquet | matrix | series"},
      {"half-width", "matrix truncation half width (0 = automatic)"},
      {"tol", "solver tolerance"},
      {"pair", "coefficient pair a_re,a_im,b_re,b_im (repeatable)", true},
      {"grid", "arc grid size"},
      {"n-max", "largest gap index"},
      {"order", "number of eigenfunction coefficients"},
      {"samples", "sample count for the eigenfunction residual and CSV"},
      {"lambda", "spectral parameter re,im"},
      {"input", "eigenvalue JSON (spectrum output)"},
      {"out", "output file (stdout if omitted)"},
      {"format", "json | csv"},
      {"include-resonant", "keep t = 0 and t = pi in grids for floquet/series", false, true},
  };
  return table;
}

const std::map<Command, std::vector<std::string>>& command_options() {
  static const std::map<Command, std::vector<std::string>> m = {
      {Command::spectrum,
       {"mathieu", "q", "potential", "t", "t-grid", "n", "method", "half-width", "tol",
        "include-resonant", "out", "format"}},
      {Command::discriminant, {"mathieu", "q", "potential", "lambda", "tol", "out", "format"}},
      {Command::isospectral, {"pair", "t-grid", "n", "half-width", "tol", "out", "format"}},
      {Command::arcs, {"pair", "mathieu", "n", "grid", "half-width", "out", "format"}},
      {Command::recover_ab, {"input", "t", "out", "format"}},
      {Command::gasymov, {"mathieu", "q", "potential", "n", "t", "order", "samples", "out", "format"}},
      {Command::gaps, {"mathieu", "n-max", "out", "format"}},
  };
  return m;
}

const OptionSpec& spec_of(const std::string& name) {
  for (const auto& s : option_table()) {
    if (name == s.name) return s;
  }
  raise(ErrorKind::InvalidArgument, "unknown option '" + name + "'");
}

/// Option values as strings, before validation. Repeated options keep every
/// occurrence; flags are stored as "true".
using RawOptions = std::map<std::string, std::vector<std::string>>;

[[noreturn]] void config_error(const std::string& msg) { raise(ErrorKind::InvalidArgument, msg); }

double parse_double(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    config_error("--" + name + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v < -1000000 || v > 1000000) {
    config_error("--" + name + ": expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

std::string json_scalar_to_text(const std::string& key, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  config_error("config key '" + key + "' must be a string or number");
}

/// Fills options absent from the command line from a JSON config object.
void merge_config_file(const std::string& path, Command cmd, RawOptions& raw, json& inline_potential) {
  const json j = io::read_json_file(path);
  if (!j.is_object()) config_error("config file '" + path + "' must hold a JSON object");
  const auto& allowed = command_options().at(cmd);
  for (const auto& [key, value] : j.items()) {
    if (key == "command" || key == "schema" || key == "version") continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      config_error("config key '" + key + "' does not apply to '" +
                   std::string(command_name(cmd)) + "'");
    }
    if (raw.count(key) != 0) continue;  // command line wins
    if (key == "potential" && value.is_object()) {
      inline_potential = value;
      continue;
    }
    const auto& spec = spec_of(key);
    std::vector<std::string> items;
    if (value.is_array() && spec.repeated) {
      for (const auto& item : value) items.push_back(json_scalar_to_text(key, item));
    } else {
      items.push_back(json_scalar_to_text(key, value));
    }
    if (spec.flag && items.front() != "true" && items.front() != "false") {
      config_error("config key '" + key + "' must be a boolean");
    }
    raw[key] = std::move(items);
  }
}

const std::string* single(const RawOptions& raw, const std::string& key) {
  auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return nullptr;
  return &it->second.back();
}

FourierPotential parse_q_terms(const std::vector<std::string>& terms) {
  std::map<int, cplx> coeffs;
  for (const auto& term : terms) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) config_error("--q expects n:re,im, got '" + term + "'");
    const int n = parse_int("q", term.substr(0, colon));
    if (!coeffs.emplace(n, io::parse_complex(term.substr(colon + 1))).second) {
      config_error("--q given twice for n=" + std::to_string(n));
    }
  }
  return FourierPotential(coeffs);
}

std::optional<FourierPotential> resolve_potential(const RawOptions& raw, const json& inline_potential) {
  std::vector<FourierPotential> found;
  if (const auto* m = single(raw, "mathieu")) {
    const auto [a, b] = io::parse_pair(*m);
    found.push_back(make_mathieu(a, b));
  }
  if (raw.count("q") != 0) found.push_back(parse_q_terms(raw.at("q")));
  if (const auto* path = single(raw, "potential")) {
    found.push_back(io::parse_potential(io::read_json_file(*path)));
  } else if (!inline_potential.is_null()) {
    found.push_back(io::parse_potential(inline_potential));
  }
  if (found.size() > 1) config_error("give exactly one of --mathieu, --q, --potential");
  if (found.empty()) return std::nullopt;
  if (!found.front().is_finite()) config_error("potential coefficients must be finite");
  return found.front();
}

std::vector<double> t_grid(int g) {
  std::vector<double> ts;
  for (int j = 0; j < g; ++j) {
    const double t = normalize_quasimomentum(-kPi + kTwoPi * (j + 1) / g);
    ts.push_back(std::abs(t) < 1e-14 ? 0.0 : t);
  }
  ts.back() = kPi;
  return ts;
}

bool is_resonant(double t) { return t == 0.0 || t == kPi; }

RunConfig resolve(Command cmd, const RawOptions& raw, const json& inline_potential) {
  RunConfig c;
  c.command = cmd;
  c.potential = resolve_potential(raw, inline_potential);
  if (raw.count("pair") != 0) {
    for (const auto& p : raw.at("pair")) c.pairs.push_back(io::parse_pair(p));
  }
  if (const auto* v = single(raw, "include-resonant")) c.include_resonant = (*v == "true");
  if (const auto* v = single(raw, "method")) {
    const auto m = parse_method(*v);
    if (!m) config_error("--method must be floquet, matrix or series, got '" + *v + "'");
    c.method = *m;
  }
  if (const auto* v = single(raw, "n")) c.n_range = io::parse_range(*v);
  if (const auto* v = single(raw, "half-width")) c.half_width = parse_int("half-width", *v);
  if (const auto* v = single(raw, "tol")) c.tol = parse_double("tol", *v);
  if (const auto* v = single(raw, "grid")) c.grid = parse_int("grid", *v);
  if (const auto* v = single(raw, "n-max")) c.n_max = parse_int("n-max", *v);
  if (const auto* v = single(raw, "order")) c.order = parse_int("order", *v);
  if (const auto* v = single(raw, "samples")) c.samples = parse_int("samples", *v);
  if (const auto* v = single(raw, "lambda")) c.lambda = io::parse_complex(*v);
  if (const auto* v = single(raw, "input")) c.input = *v;
  if (const auto* v = single(raw, "out")) c.out = *v;
  if (const auto* v = single(raw, "format")) {
    c.format = *v;
  } else if (cmd == Command::gaps) {
    c.format = "csv";
  }

  if (!(c.tol > 0.0)) config_error("--tol must be positive");
  if (c.half_width < 0) config_error("--half-width must be >= 0");
  if (c.format != "json" && c.format != "csv") config_error("--format must be json or csv");

  const auto* t = single(raw, "t");
  const auto* tg = single(raw, "t-grid");
  if (t != nullptr && tg != nullptr) config_error("give either --t or --t-grid, not both");
  if (t != nullptr) {
    c.t_values = {normalize_quasimomentum(parse_double("t", *t))};
  } else if (tg != nullptr) {
    const int g = parse_int("t-grid", *tg);
    if (g < 1) config_error("--t-grid must be >= 1");
    c.t_values = t_grid(g);
    const bool drop = c.command == Command::spectrum && c.method != Method::matrix && !c.include_resonant;
    if (drop) std::erase_if(c.t_values, is_resonant);
    std::sort(c.t_values.begin(), c.t_values.end());
    if (c.t_values.empty()) config_error("--t-grid leaves no quasimomenta after excluding 0 and pi");
  }

  switch (cmd) {
    case Command::spectrum:
      if (!c.potential) config_error("spectrum needs a potential");
      if (c.t_values.empty()) config_error("spectrum needs --t or --t-grid");
      if (c.half_width != 0 && c.half_width < c.n_range.max_abs()) {
        config_error("--half-width must cover the requested indices");
      }
      break;
    case Command::discriminant:
      if (!c.potential) config_error("discriminant needs a potential");
      if (single(raw, "lambda") == nullptr) config_error("discriminant needs --lambda");
      break;
    case Command::isospectral:
      if (c.pairs.size() != 2) config_error("isospectral needs exactly two --pair options");
      if (c.t_values.empty()) c.t_values = t_grid(8);
      break;
    case Command::arcs:
      if (c.potential) {
        const auto& p = *c.potential;
        if (p.min_index() < -1 || p.max_index() > 1 || p.coeff(0) != cplx{}) {
          config_error("arcs needs a Mathieu potential (--mathieu or --pair)");
        }
        c.pairs.insert(c.pairs.begin(), {p.coeff(-1), p.coeff(1)});
      }
      if (c.pairs.empty() || c.pairs.size() > 2) config_error("arcs needs one or two coefficient pairs");
      if (c.grid < 16) config_error("--grid must be >= 16");
      if (c.format == "csv" && c.out.empty()) config_error("arcs --format csv needs --out");
      break;
    case Command::recover_ab:
      if (c.input.empty()) config_error("recover-ab needs --input");
      break;
    case Command::gasymov:
      if (!c.potential) config_error("gasymov needs a potential");
      if (c.t_values.empty()) config_error("gasymov needs --t");
      if (c.n_range.size() != 1) config_error("gasymov needs a single index --n");
      if (c.order < 1) config_error("--order must be >= 1");
      if (c.samples < 32) config_error("--samples must be >= 32");
      break;
    case Command::gaps:
      if (!c.potential) config_error("gaps needs --mathieu");
      if (c.potential->min_index() < -1 || c.potential->max_index() > 1 || c.potential->coeff(0) != cplx{}) {
        config_error("gaps needs a Mathieu potential");
      }
      break;
  }
  return c;
}

/// Either a parsed config or a request that has already been answered
/// (help text, version).
struct Parsed {
  std::optional<RunConfig> config;
};

Parsed parse(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Spectra of non-self-adjoint Mathieu-Hill operators", "hillspec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct Sub {
    Command cmd;
    CLI::App* app;
    std::string config_path;
    std::map<std::string, std::string> scalar;
    std::map<std::string, std::vector<std::string>> repeated;
    std::map<std::string, bool> flags;
    std::map<std::string, CLI::Option*> handles;
  };
  std::vector<std::unique_ptr<Sub>> subs;
  const std::vector<std::pair<Command, const char*>> about = {
      {Command::spectrum, "indexed eigenvalues lambda_n(t)"},
      {Command::discriminant, "Hill discriminant F(lambda) and F'(lambda)"},
      {Command::isospectral, "compare H(a,b) with H(c,d)"},
      {Command::arcs, "trace spectral arcs over t in (-pi, pi]"},
      {Command::recover_ab, "recover the product ab from eigenvalue data"},
      {Command::gasymov, "exact eigenfunction of a one-sided potential"},
      {Command::gaps, "periodic/antiperiodic gaps against their asymptotic"},
  };
  for (const auto& [cmd, desc] : about) {
    auto s = std::make_unique<Sub>();
    s->cmd = cmd;
    s->app = app.add_subcommand(std::string(command_name(cmd)), desc);
    s->app->add_option("--config", s->config_path, "JSON config file; flags override it");
    for (const auto& name : command_options().at(cmd)) {
      const auto& spec = spec_of(name);
      const std::string flag = "--" + name;
      if (spec.flag) {
        s->handles[name] = s->app->add_flag(flag, s->flags[name], spec.help);
      } else if (spec.repeated) {
        s->handles[name] = s->app->add_option(flag, s->repeated[name], spec.help)->allow_extra_args(false);
      } else {
        s->handles[name] = s->app->add_option(flag, s->scalar[name], spec.help);
      }
    }
    subs.push_back(std::move(s));
  }

  // CLI11 wants argv order reversed in a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {};
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return {};
  } catch (const CLI::ParseError& e) {
    config_error(e.what());
  }

  for (const auto& s : subs) {
    if (!s->app->parsed()) continue;
    RawOptions raw;
    for (const auto& [name, opt] : s->handles) {
      if (opt->count() == 0) continue;
      const auto& spec = spec_of(name);
      if (spec.flag) {
        raw[name] = {s->flags[name] ? "true" : "false"};
      } else if (spec.repeated) {
        raw[name] = s->repeated[name];
      } else {
        raw[name] = {s->scalar[name]};
      }
    }
    json inline_potential;
    if (!s->config_path.empty()) merge_config_file(s->config_path, s->cmd, raw, inline_potential);
    return {resolve(s->cmd, raw, inline_potential)};
  }
  config_error("no subcommand given");
}

json envelope(const RunConfig& c) {
  return {{"schema", kSchema}, {"version", kVersion}, {"config", c.to_json()}};
}

std::string csv_header(const json& env) {
  std::string h;
  h += "# schema: " + env.at("schema").get<std::string>() + "\n";
  h += "# version: " + env.at("version").get<std::string>() + "\n";
  h += "# config: " + env.at("config").dump() + "\n";
  return h;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) raise(ErrorKind::Io, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) raise(ErrorKind::Io, "failed writing '" + path + "'");
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

void emit_json(const RunConfig& c, const json& doc, std::ostream& out) {
  emit(c, doc.dump(2) + "\n", out);
}

bool is_mathieu_shaped(const FourierPotential& p) {
  return p.min_index() >= -1 && p.max_index() <= 1 && p.coeff(0) == cplx{};
}

SpectrumSlice series_slice(const RunConfig& c, double t, unsigned threads) {
  const auto& p = *c.potential;
  if (!is_mathieu_shaped(p)) {
    raise(ErrorKind::UnsupportedPotential, "the series method needs a Mathieu potential");
  }
  const cplx a = p.coeff(-1);
  const cplx b = p.coeff(1);
  SpectrumSlice slice;
  slice.t = t;
  slice.potential_id = p.fingerprint();
  slice.entries.resize(static_cast<std::size_t>(c.n_range.size()));
  parallel_for(slice.entries.size(), threads, [&](std::size_t i) {
    const int n = c.n_range.lo + static_cast<int>(i);
    const cplx lambda = eigenvalue_by_series(n, t, a, b, c.tol);
    const cplx a_val = a_series(n, t, a, b, lambda, 1e-14).value;
    slice.entries[i] = {n, lambda, std::abs(lambda - free_eigenvalue(n, t) - a_val), Method::series};
  });
  return slice;
}

SpectrumSlice spectrum_slice(const RunConfig& c, double t, unsigned threads) {
  const QuasiProblem prob(*c.potential, t);
  switch (c.method) {
    case Method::matrix: {
      const int hw = c.half_width != 0 ? c.half_width : c.n_range.max_abs() + 20;
      const auto m = build_matrix(prob, hw, std::max(1, prob.potential.bandwidth()));
      AberthOptions opts;
      opts.tol = c.tol;
      auto all = all_eigenvalues(m, opts);
      std::erase_if(all.entries, [&](const SpectrumEntry& e) { return !c.n_range.contains(e.n); });
      all.sort_by_index();
      return all;
    }
    case Method::floquet: {
      RootSearchOptions opts;
      opts.residual_tol = c.tol;
      return eigenvalues_by_discriminant(prob, c.n_range, opts, threads);
    }
    case Method::series:
      return series_slice(c, t, threads);
  }
  raise(ErrorKind::InvalidArgument, "unknown method");
}

json slice_json(const SpectrumSlice& s) { return io::to_json(s); }

void run_spectrum(const RunConfig& c, std::ostream& out, unsigned threads) {
  std::vector<SpectrumSlice> slices(c.t_values.size());
  // Parallelize over t when there are several slices, over n otherwise.
  const unsigned inner = slices.size() > 1 ? 1U : threads;
  parallel_for(slices.size(), slices.size() > 1 ? threads : 1U,
               [&](std::size_t i) { slices[i] = spectrum_slice(c, c.t_values[i], inner); });

  const json env = envelope(c);
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_header(env);
    io::write_spectrum_csv(os, slices);
    emit(c, os.str(), out);
    return;
  }
  json doc = env;
  if (slices.size() == 1) {
    doc.update(slice_json(slices.front()));
  } else {
    json arr = json::array();
    for (const auto& s : slices) arr.push_back(slice_json(s));
    doc["slices"] = arr;
  }
  emit_json(c, doc, out);
}

void require_json(const RunConfig& c) {
  if (c.format != "json") {
    config_error("'" + std::string(command_name(c.command)) + "' only writes JSON");
  }
}

void run_discriminant(const RunConfig& c, std::ostream& out) {
  require_json(c);
  DiscriminantOptions opts;
  opts.rel_tol = c.tol;
  const auto s = discriminant(*c.potential, c.lambda, opts);
  json doc = envelope(c);
  doc.update(io::to_json(s));
  emit_json(c, doc, out);
}

void run_isospectral(const RunConfig& c, std::ostream& out, unsigned threads) {
  require_json(c);
  CompareOptions opts;
  opts.half_width = c.half_width;
  opts.threads = threads;
  const auto& [a, b] = c.pairs[0];
  const auto& [cc, d] = c.pairs[1];
  const auto report = compare_operators(a, b, cc, d, c.t_values, c.n_range, opts);
  json doc = envelope(c);
  doc.update(io::to_json(report));
  emit_json(c, doc, out);
}

std::string numbered_path(const std::string& path, std::size_t k) {
  std::filesystem::path p(path);
  const auto stem = p.stem().string() + "_" + std::to_string(k + 1);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

void run_arcs(const RunConfig& c, std::ostream& out, unsigned threads) {
  ArcOptions opts;
  opts.half_width = c.half_width;
  const int per_pair = c.n_range.size();
  std::vector<ArcTrace> traces(c.pairs.size() * static_cast<std::size_t>(per_pair));
  parallel_for(traces.size(), threads, [&](std::size_t i) {
    const auto& [a, b] = c.pairs[i / static_cast<std::size_t>(per_pair)];
    const int n = c.n_range.lo + static_cast<int>(i % static_cast<std::size_t>(per_pair));
    traces[i] = trace_arc(a, b, n, c.grid, opts);
  });

  const json env = envelope(c);
  if (c.format == "csv") {
    json written = json::array();
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const std::string path = traces.size() == 1 ? c.out : numbered_path(c.out, i);
      emit_plot_data(traces[i], path, env);
      written.push_back(path);
    }
    out << json{{"written", written}}.dump(2) << '\n';
    return;
  }
  json doc = env;
  json arr = json::array();
  for (const auto& tr : traces) arr.push_back(io::to_json(tr));
  doc["arcs"] = arr;
  if (c.pairs.size() == 2) {
    json dist = json::array();
    for (int k = 0; k < per_pair; ++k) {
      dist.push_back({{"n", c.n_range.lo + k},
                      {"hausdorff", hausdorff_distance(traces[static_cast<std::size_t>(k)],
                                                       traces[static_cast<std::size_t>(per_pair + k)])}});
    }
    doc["hausdorff_distance"] = dist;
  }
  emit_json(c, doc, out);
}

void run_recover(const RunConfig& c, std::ostream& out) {
  require_json(c);
  const json in = io::read_json_file(c.input);
  json source = in;
  if (in.contains("slices")) {
    const auto& slices = in.at("slices");
    if (c.t_values.empty() && slices.size() != 1) {
      config_error("input holds several t slices; select one with --t");
    }
    source = json();
    for (const auto& s : slices) {
      if (c.t_values.empty() || std::abs(s.at("t").get<double>() - c.t_values.front()) < 1e-12) {
        source = s;
        break;
      }
    }
    if (source.is_null()) config_error("no slice in the input matches --t");
  }
  auto data = io::parse_eigenvalues(source);
  if (!c.t_values.empty()) data.t = c.t_values.front();
  const auto r = recover_ab(data.eigs, data.t);
  json doc = envelope(c);
  doc["t"] = data.t;
  doc.update(io::to_json(r));
  emit_json(c, doc, out);
}

void run_gasymov(const RunConfig& c, std::ostream& out) {
  const int n = c.n_range.lo;
  const double t = c.t_values.front();
  const auto ef = gasymov_eigenfunction(*c.potential, n, t, c.order);
  const json env = envelope(c);
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_header(env);
    io::write_psi_csv(os, ef, c.samples);
    emit(c, os.str(), out);
    return;
  }
  json doc = env;
  doc["eigenvalue"] = free_eigenvalue(n, t);
  doc["eigenfunction"] = io::to_json(ef);
  doc["residual"] = residual(ef, *c.potential, c.samples);
  emit_json(c, doc, out);
}

void run_gaps(const RunConfig& c, std::ostream& out, unsigned threads) {
  const auto sweep = gap_sweep(c.potential->coeff(-1), c.potential->coeff(1), c.n_max, threads);
  const json env = envelope(c);
  if (c.format == "csv") {
    if (c.out.empty()) {
      std::ostringstream os;
      os << csv_header(env);
      io::write_gap_csv(os, sweep.reports);
      out << os.str();
    } else {
      emit_plot_data(sweep.reports, c.out, env);
    }
    return;
  }
  json doc = env;
  doc.update(io::to_json(sweep));
  emit_json(c, doc, out);
}

void execute(const RunConfig& c, std::ostream& out) {
  const unsigned threads = thread_budget();
  switch (c.command) {
    case Command::spectrum: return run_spectrum(c, out, threads);
    case Command::discriminant: return run_discriminant(c, out);
    case Command::isospectral: return run_isospectral(c, out, threads);
    case Command::arcs: return run_arcs(c, out, threads);
    case Command::recover_ab: return run_recover(c, out);
    case Command::gasymov: return run_gasymov(c, out);
    case Command::gaps: return run_gaps(c, out, threads);
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnsupportedPotential:
    case ErrorKind::Io:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

void report_error(std::ostream& err, std::string_view name, const std::string& message) {
  err << json{{"error", {{"name", name}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::discriminant: return "discriminant";
    case Command::isospectral: return "isospectral";
    case Command::arcs: return "arcs";
    case Command::recover_ab: return "recover-ab";
    case Command::gasymov: return "gasymov";
    case Command::gaps: return "gaps";
  }
  return "unknown";
}

io::json RunConfig::to_json() const {
  json j;
  j["command"] = command_name(command);
  j["potential"] = potential ? io::to_json(*potential) : json(nullptr);
  json pj = json::array();
  for (const auto& [a, b] : pairs) pj.push_back({{"a", io::to_json(a)}, {"b", io::to_json(b)}});
  j["pairs"] = pj;
  j["t_values"] = t_values;
  j["include_resonant"] = include_resonant;
  j["n_range"] = {n_range.lo, n_range.hi};
  j["method"] = method_name(method);
  j["half_width"] = half_width;
  j["tol"] = tol;
  j["grid"] = grid;
  j["n_max"] = n_max;
  j["order"] = order;
  j["samples"] = samples;
  j["lambda"] = io::to_json(lambda);
  j["input"] = input;
  j["format"] = format;
  return j;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("HILLSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void emit_plot_data(const ArcTrace& trace, const std::string& path, const io::json& header) {
  if (trace.samples.empty()) raise(ErrorKind::InvalidArgument, "arc trace is empty; nothing written to '" + path + "'");
  std::ostringstream os;
  os << csv_header(header);
  io::write_arc_csv(os, trace);
  write_file(path, os.str());
}

void emit_plot_data(const std::vector<GapReport>& reports, const std::string& path,
                    const io::json& header) {
  if (reports.empty()) raise(ErrorKind::InvalidArgument, "gap list is empty; nothing written to '" + path + "'");
  std::ostringstream os;
  os << csv_header(header);
  io::write_gap_csv(os, reports);
  write_file(path, os.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    auto parsed = parse(args, out);
    if (!parsed.config) return kExitOk;
    config = std::move(*parsed.config);
  } catch (const Error& e) {
    report_error(err, e.name(), e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    report_error(err, "InvalidArgument", e.what());
    return kExitConfig;
  }

  try {
    execute(config, out);
  } catch (const Error& e) {
    report_error(err, e.name(), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace hillspec::cli
