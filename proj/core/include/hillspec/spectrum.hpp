#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hillspec/types.hpp"

namespace hillspec {

enum class Method { floquet, matrix, series };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct SpectrumEntry {
  int n = 0;
  cplx lambda{};
  double residual = 0.0;
  Method method = Method::matrix;
};

/// Indexed eigenvalues lambda_n(t) of one fiber operator, sorted by n.
struct SpectrumSlice {
  std::vector<SpectrumEntry> entries;
  double t = 0.0;
  std::uint64_t potential_id = 0;

  [[nodiscard]] const SpectrumEntry* find(int n) const;
  [[nodiscard]] std::vector<cplx> values() const;
  void sort_by_index();
};

}  // namespace hillspec
