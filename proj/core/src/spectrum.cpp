#include "hillspec/spectrum.hpp"

#include <algorithm>

namespace hillspec {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::floquet: return "floquet";
    case Method::matrix: return "matrix";
    case Method::series: return "series";
  }
  return "matrix";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "floquet") return Method::floquet;
  if (name == "matrix") return Method::matrix;
  if (name == "series") return Method::series;
  return std::nullopt;
}

const SpectrumEntry* SpectrumSlice::find(int n) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const SpectrumEntry& e, int k) { return e.n < k; });
  if (it == entries.end() || it->n != n) return nullptr;
  return &*it;
}

std::vector<cplx> SpectrumSlice::values() const {
  std::vector<cplx> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.lambda);
  return out;
}

void SpectrumSlice::sort_by_index() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.n < b.n; });
}

}  // namespace hillspec
