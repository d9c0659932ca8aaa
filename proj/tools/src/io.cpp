#include "hillspec_tools/io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hillspec::io {
namespace {

std::vector<double> split_numbers(std::string_view text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      raise(ErrorKind::InvalidArgument, std::string("cannot parse ") + what + " from '" +
                                            std::string(text) + "'");
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    raise(ErrorKind::InvalidArgument, std::string(what) + " expects " + std::to_string(expected) +
                                          " comma-separated numbers, got '" + std::string(text) + "'");
  }
  return out;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    raise(ErrorKind::InvalidArgument, "cannot parse integer from '" + std::string(text) + "'");
  }
  return v;
}

json nan_safe(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

cplx parse_complex(std::string_view text) {
  const auto v = split_numbers(text, 2, "complex value re,im");
  return {v[0], v[1]};
}

std::pair<cplx, cplx> parse_pair(std::string_view text) {
  const auto v = split_numbers(text, 4, "coefficient pair a_re,a_im,b_re,b_im");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  IndexRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.empty()) raise(ErrorKind::InvalidArgument, "index range '" + std::string(text) + "' is empty");
  return r;
}

FourierPotential parse_potential(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    raise(ErrorKind::InvalidArgument, "potential JSON must be an object with a \"coeffs\" array");
  }
  std::map<int, cplx> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.contains("n")) raise(ErrorKind::InvalidArgument, "potential coefficient without \"n\"");
    const int n = c.at("n").get<int>();
    const double re = c.value("re", 0.0);
    const double im = c.value("im", 0.0);
    if (!coeffs.emplace(n, cplx{re, im}).second) {
      raise(ErrorKind::InvalidArgument, "duplicate potential coefficient n=" + std::to_string(n));
    }
  }
  return FourierPotential(coeffs);
}

json to_json(const FourierPotential& p) {
  json arr = json::array();
  for (const auto& [n, q] : p.coeffs()) arr.push_back({{"n", n}, {"re", q.real()}, {"im", q.imag()}});
  return {{"coeffs", arr}};
}

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const SpectrumSlice& s) {
  json eigs = json::array();
  for (const auto& e : s.entries) {
    eigs.push_back({{"n", e.n},
                    {"re", e.lambda.real()},
                    {"im", e.lambda.imag()},
                    {"residual", e.residual},
                    {"method", std::string(method_name(e.method))}});
  }
  return {{"t", s.t}, {"potential_id", std::to_string(s.potential_id)}, {"eigs", eigs}};
}

json to_json(const DiscriminantSample& s) {
  return {{"lambda", to_json(s.lambda)},
          {"F", to_json(s.f_value)},
          {"dF", to_json(s.f_derivative)},
          {"steps", s.monodromy.step_count},
          {"wronskian_defect", std::abs(s.monodromy.wronskian() - 1.0)}};
}

json to_json(const IsospectralReport& r) {
  return {{"ab", to_json(r.ab)},
          {"cd", to_json(r.cd)},
          {"t_samples", r.t_samples},
          {"n_range", {r.n_range.lo, r.n_range.hi}},
          {"half_width", r.half_width},
          {"max_eigenvalue_distance", r.max_eigenvalue_distance},
          {"max_discriminant_distance", r.max_discriminant_distance},
          {"verdict", std::string(verdict_name(r.verdict))}};
}

json to_json(const ArcTrace& a) {
  json samples = json::array();
  for (const auto& s : a.samples) samples.push_back({{"t", s.t}, {"re", s.lambda.real()}, {"im", s.lambda.imag()}});
  return {{"n", a.n},
          {"samples", samples},
          {"endpoint_zero", to_json(a.endpoint_zero)},
          {"endpoint_pi", to_json(a.endpoint_pi)}};
}

json to_json(const RecoveryResult& r) {
  json seq = json::array();
  for (const auto& [n, e] : r.convergence_sequence) seq.push_back({{"n", n}, {"re", e.real()}, {"im", e.imag()}});
  return {{"ab_estimate", to_json(r.ab_estimate)},
          {"convergence_sequence", seq},
          {"extrapolated", r.extrapolated},
          {"residual_decay_exponent", nan_safe(r.residual_decay_exponent)},
          {"boundary_reading", r.boundary_reading}};
}

json to_json(const GasymovEigenfunction& ef) {
  json coeffs = json::array();
  for (std::size_t k = 0; k < ef.coefficients.size(); ++k) {
    coeffs.push_back({{"p", ef.index_of(k) - ef.n},
                      {"re", ef.coefficients[k].real()},
                      {"im", ef.coefficients[k].imag()}});
  }
  return {{"n", ef.n},
          {"t", ef.t},
          {"P", ef.order()},
          {"orientation", ef.orientation == Orientation::negative ? "negative" : "positive"},
          {"coeffs", coeffs},
          {"tail_magnitude", ef.tail_magnitude()}};
}

json to_json(const GapReport& r) {
  return {{"n", r.n},
          {"a", to_json(r.a)},
          {"b", to_json(r.b)},
          {"lambda_plus", to_json(r.lambda_plus)},
          {"lambda_minus", to_json(r.lambda_minus)},
          {"gap", to_json(r.gap_computed)},
          {"abs_gap", std::abs(r.gap_computed)},
          {"predicted", r.gap_predicted_magnitude},
          {"correction_factor", to_json(r.correction_factor)},
          {"ratio", nan_safe(r.ratio)},
          {"phase", r.phase},
          {"asymptotic_questionable", r.asymptotic_questionable}};
}

json to_json(const GapSweep& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"reports", reports}, {"convergence_exponent", nan_safe(s.convergence_exponent)}};
}

EigenvalueInput parse_eigenvalues(const json& j) {
  if (!j.is_object() || !j.contains("eigs") || !j.at("eigs").is_array()) {
    raise(ErrorKind::InvalidArgument, "eigenvalue JSON must contain an \"eigs\" array");
  }
  if (!j.contains("t")) raise(ErrorKind::InvalidArgument, "eigenvalue JSON must contain \"t\"");
  EigenvalueInput in;
  in.t = j.at("t").get<double>();
  for (const auto& e : j.at("eigs")) {
    in.eigs.push_back({e.at("n").get<int>(), {e.at("re").get<double>(), e.value("im", 0.0)}});
  }
  return in;
}

void write_arc_csv(std::ostream& os, const ArcTrace& trace) {
  os << "t,re,im,n\n";
  for (const auto& s : trace.samples) {
    os << format_double(s.t) << ',' << format_double(s.lambda.real()) << ','
       << format_double(s.lambda.imag()) << ',' << trace.n << '\n';
  }
}

void write_gap_csv(std::ostream& os, const std::vector<GapReport>& reports) {
  os << "n,abs_gap,predicted,ratio,phase\n";
  for (const auto& r : reports) {
    os << r.n << ',' << format_double(std::abs(r.gap_computed)) << ','
       << format_double(r.gap_predicted_magnitude) << ',' << format_double(r.ratio) << ','
       << format_double(r.phase) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumSlice>& slices) {
  os << "t,n,re,im,residual,method\n";
  for (const auto& s : slices) {
    for (const auto& e : s.entries) {
      os << format_double(s.t) << ',' << e.n << ',' << format_double(e.lambda.real()) << ','
         << format_double(e.lambda.imag()) << ',' << format_double(e.residual) << ','
         << method_name(e.method) << '\n';
    }
  }
}

void write_psi_csv(std::ostream& os, const GasymovEigenfunction& ef, int samples) {
  os << "x,re,im\n";
  for (int j = 0; j < samples; ++j) {
    const double x = static_cast<double>(j) / samples;
    const cplx v = synthesize(ef, x);
    os << format_double(x) << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Io, "cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorKind::InvalidArgument, "malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace hillspec::io
