#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hillspec_tools/io.hpp"

namespace hillspec::cli {

enum class Command { spectrum, discriminant, isospectral, arcs, recover_ab, gasymov, gaps };

std::string_view command_name(Command c);

/// Fully resolved, validated settings of one invocation.
struct RunConfig {
  Command command = Command::spectrum;
  std::optional<FourierPotential> potential;
  std::vector<std::pair<cplx, cplx>> pairs;
  /// Quasimomenta to evaluate, normalized into (-pi, pi] and ascending.
  std::vector<double> t_values;
  bool include_resonant = false;
  IndexRange n_range{-5, 5};
  Method method = Method::matrix;
  int half_width = 0;  ///< 0 = automatic
  double tol = 1e-10;
  int grid = 64;
  int n_max = 5;
  int order = 25;
  int samples = 64;
  cplx lambda{};
  std::string input;
  std::string out;
  std::string format = "json";  ///< gaps defaults to csv

  [[nodiscard]] io::json to_json() const;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Parses argv-style arguments (without the program name), executes, and
/// writes results to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes CSV for external plotting, prefixed by "# " header lines. Fails
/// without creating the file when there is nothing to write.
void emit_plot_data(const ArcTrace& trace, const std::string& path, const io::json& header);
void emit_plot_data(const std::vector<GapReport>& reports, const std::string& path,
                    const io::json& header);

/// Worker count: HILLSPEC_THREADS if set and positive, else the hardware count.
unsigned thread_budget();

}  // namespace hillspec::cli
