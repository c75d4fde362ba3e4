#include "windflex/weather/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "windflex/common.hpp"

namespace windflex::weather {

std::vector<Histogram> conditional_error_histogram(const std::vector<double>& forecast,
                                                   const std::vector<double>& actual,
                                                   const std::vector<int>& condition_labels,
                                                   std::size_t bins) {
  if (forecast.size() != actual.size() || forecast.size() != condition_labels.size())
    throw ValidationError("conditional_error_histogram: series lengths differ");
  if (bins < 2) throw ValidationError("conditional_error_histogram: bins must be >= 2");
  if (forecast.empty()) throw ValidationError("conditional_error_histogram: empty input");

  int max_label = 0;
  for (int l : condition_labels) {
    if (l < 0) throw ValidationError("negative condition label");
    max_label = std::max(max_label, l);
  }
  const std::size_t groups = static_cast<std::size_t>(max_label) + 1;

  std::vector<double> errors(forecast.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < forecast.size(); ++i) {
    errors[i] = actual[i] - forecast[i];
    lo = std::min(lo, errors[i]);
    hi = std::max(hi, errors[i]);
  }
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }

  std::vector<Histogram> out(groups);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (auto& h : out) {
    h.edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = lo + width * static_cast<double>(b);
    h.mass.assign(bins, 0.0);
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    auto& h = out[static_cast<std::size_t>(condition_labels[i])];
    auto b = static_cast<std::size_t>((errors[i] - lo) / width);
    if (b >= bins) b = bins - 1;
    h.mass[b] += 1.0;
    ++h.count;
  }

  for (std::size_t g = 0; g < groups; ++g) {
    if (out[g].count == 0)
      throw ValidationError("empty condition label group: " + std::to_string(g));
    for (auto& m : out[g].mass) m /= static_cast<double>(out[g].count);
  }
  return out;
}

}  // namespace windflex::weather
