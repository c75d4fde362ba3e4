#pragma once

#include <vector>

namespace windflex::weather {

struct Histogram {
  std::vector<double> edges;   // bins + 1, shared across labels
  std::vector<double> mass;    // bins entries, sums to 1
  std::size_t count = 0;
};

/// Per-label normalized histogram of (actual - forecast). Labels must cover
/// [0, max_label] with no empty group. Bin edges are shared across labels.
std::vector<Histogram> conditional_error_histogram(const std::vector<double>& forecast,
                                                   const std::vector<double>& actual,
                                                   const std::vector<int>& condition_labels,
                                                   std::size_t bins);

}  // namespace windflex::weather
