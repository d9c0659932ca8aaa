#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hillspec/hillspec.hpp"

namespace hillspec::io {

using json = nlohmann::json;

/// %.17g: enough digits to round-trip every double, fixed for byte-stable output.
std::string format_double(double x);

cplx parse_complex(std::string_view text);          // "re,im"
std::pair<cplx, cplx> parse_pair(std::string_view text);  // "a_re,a_im,b_re,b_im"
IndexRange parse_range(std::string_view text);      // "lo..hi" or "n"

/// {"coeffs": [{"n": -1, "re": 2.0, "im": 0.0}, ...]}
FourierPotential parse_potential(const json& j);
json to_json(const FourierPotential& p);

json to_json(cplx z);
json to_json(const SpectrumSlice& s);
json to_json(const DiscriminantSample& s);
json to_json(const IsospectralReport& r);
json to_json(const ArcTrace& a);
json to_json(const RecoveryResult& r);
json to_json(const GasymovEigenfunction& ef);
json to_json(const GapReport& r);
json to_json(const GapSweep& s);

/// Reads {"t": ..., "eigs": [{"n": .., "re": .., "im": ..}, ...]} -- the
/// shape written by to_json(SpectrumSlice).
struct EigenvalueInput {
  double t = 0.0;
  std::vector<IndexedEigenvalue> eigs;
};
EigenvalueInput parse_eigenvalues(const json& j);

/// Columns: t,re,im,n
void write_arc_csv(std::ostream& os, const ArcTrace& trace);
/// Columns: n,abs_gap,predicted,ratio,phase
void write_gap_csv(std::ostream& os, const std::vector<GapReport>& reports);
/// Columns: t,n,re,im,residual,method
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumSlice>& slices);
/// Columns: x,re,im -- Psi sampled at x_j = j / samples
void write_psi_csv(std::ostream& os, const GasymovEigenfunction& ef, int samples);

json read_json_file(const std::string& path);

}  // namespace hillspec::io
