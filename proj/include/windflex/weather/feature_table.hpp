#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace windflex::weather {

/// Physical role of a feature, inferred from its id prefix. Drives unit
/// defaults, validation ranges, and the sine encoding of directions.
enum class FeatureKind { Speed, Direction, Pressure, Humidity, Temperature, Other };

FeatureKind feature_kind(const std::string& feature_id);
std::string default_unit(FeatureKind kind);

struct FeatureSeries {
  std::string id;
  std::string unit;
  std::vector<double> values;
};

/// Time-indexed matrix of weather features. Validated on construction:
/// strictly increasing timestamps on a fixed base step (gaps from dropped
/// rows are allowed as whole multiples of the step), equal series lengths,
/// no missing values, and per-kind physical ranges.
class FeatureTable {
public:
  FeatureTable(std::vector<std::int64_t> timestamps, std::vector<FeatureSeries> features);

  std::size_t n_steps() const { return timestamps_.size(); }
  std::size_t n_features() const { return features_.size(); }
  std::int64_t resolution() const { return resolution_; }

  const std::vector<std::int64_t>& timestamps() const { return timestamps_; }
  const std::vector<FeatureSeries>& features() const { return features_; }

  int find(const std::string& feature_id) const;  // -1 when absent
  const FeatureSeries& series(const std::string& feature_id) const;
  double value(std::size_t row, std::size_t col) const { return features_[col].values[row]; }

  /// Contiguity check for operations that need an unbroken window.
  bool contiguous() const;

  FeatureTable select(const std::vector<std::string>& feature_ids) const;

private:
  std::vector<std::int64_t> timestamps_;
  std::vector<FeatureSeries> features_;
  std::int64_t resolution_ = 0;
};

/// Column-name convention for the 21-feature wind-power set:
/// pressure_100m, humidity_2m, temperature_100m, direction_<h>m and
/// speed_<h>m for h in 40..200 step 20.
std::vector<std::string> standard_feature_ids();

struct LoadSpec {
  std::string timestamp_column = "timestamp";
  /// feature id -> source column; empty means every non-timestamp column
  /// loads under its own name.
  std::map<std::string, std::string> columns;
};

struct LoadReport {
  std::vector<std::size_t> dropped_rows;  // 0-based data-row indices with missing cells
};

FeatureTable load_feature_table(const std::string& path, const LoadSpec& spec,
                                LoadReport* report = nullptr);

}  // namespace windflex::weather
