#include "windflex/weather/feature_table.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "windflex/common.hpp"
#include "windflex/io/csv.hpp"

namespace windflex::weather {

FeatureKind feature_kind(const std::string& id) {
  auto starts = [&](const char* p) { return id.rfind(p, 0) == 0; };
  if (starts("speed")) return FeatureKind::Speed;
  if (starts("direction")) return FeatureKind::Direction;
  if (starts("pressure")) return FeatureKind::Pressure;
  if (starts("humidity")) return FeatureKind::Humidity;
  if (starts("temperature")) return FeatureKind::Temperature;
  return FeatureKind::Other;
}

std::string default_unit(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Speed: return "m/s";
    case FeatureKind::Direction: return "deg";
    case FeatureKind::Pressure: return "Pa";
    case FeatureKind::Humidity: return "%";
    case FeatureKind::Temperature: return "degC";
    case FeatureKind::Other: return "";
  }
  return "";
}

namespace {

void validate_range(const FeatureSeries& s) {
  const FeatureKind kind = feature_kind(s.id);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double v = s.values[i];
    if (!std::isfinite(v))
      throw ValidationError("non-finite value in feature " + s.id + " at row " +
                            std::to_string(i));
    bool ok = true;
    switch (kind) {
      case FeatureKind::Speed: ok = v >= 0.0; break;
      case FeatureKind::Humidity: ok = v >= 0.0 && v <= 100.0; break;
      case FeatureKind::Pressure: ok = v > 0.0; break;
      case FeatureKind::Temperature: ok = v > -100.0; break;
      default: break;
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "feature " << s.id << " out of physical range at row " << i << ": " << v;
      throw ValidationError(msg.str());
    }
  }
}

}  // namespace

FeatureTable::FeatureTable(std::vector<std::int64_t> timestamps,
                           std::vector<FeatureSeries> features)
    : timestamps_(std::move(timestamps)), features_(std::move(features)) {
  const std::size_t h = timestamps_.size();
  if (h == 0) throw ValidationError("feature table has no rows");
  for (const auto& f : features_) {
    if (f.values.size() != h)
      throw ValidationError("feature " + f.id + " length mismatch: " +
                            std::to_string(f.values.size()) + " vs " + std::to_string(h));
    validate_range(f);
  }
  if (h >= 2) {
    std::int64_t base = 0;
    for (std::size_t i = 1; i < h; ++i) {
      const std::int64_t d = timestamps_[i] - timestamps_[i - 1];
      if (d <= 0)
        throw ValidationError("non-monotone timestamps at row " + std::to_string(i));
      base = (base == 0) ? d : std::min(base, d);
    }
    for (std::size_t i = 1; i < h; ++i) {
      const std::int64_t d = timestamps_[i] - timestamps_[i - 1];
      if (d % base != 0)
        throw ValidationError("timestamp step at row " + std::to_string(i) +
                              " is not a multiple of the base step " + std::to_string(base));
    }
    resolution_ = base;
  }
}

int FeatureTable::find(const std::string& feature_id) const {
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (features_[i].id == feature_id) return static_cast<int>(i);
  return -1;
}

const FeatureSeries& FeatureTable::series(const std::string& feature_id) const {
  const int idx = find(feature_id);
  if (idx < 0) throw ValidationError("feature not present: " + feature_id);
  return features_[static_cast<std::size_t>(idx)];
}

bool FeatureTable::contiguous() const {
  for (std::size_t i = 1; i < timestamps_.size(); ++i)
    if (timestamps_[i] - timestamps_[i - 1] != resolution_) return false;
  return true;
}

FeatureTable FeatureTable::select(const std::vector<std::string>& feature_ids) const {
  std::vector<FeatureSeries> chosen;
  chosen.reserve(feature_ids.size());
  for (const auto& id : feature_ids) chosen.push_back(series(id));
  return FeatureTable(timestamps_, std::move(chosen));
}

std::vector<std::string> standard_feature_ids() {
  std::vector<std::string> ids = {"pressure_100m", "humidity_2m", "temperature_100m"};
  for (int h = 40; h <= 200; h += 20) ids.push_back("direction_" + std::to_string(h) + "m");
  for (int h = 40; h <= 200; h += 20) ids.push_back("speed_" + std::to_string(h) + "m");
  return ids;
}

FeatureTable load_feature_table(const std::string& path, const LoadSpec& spec,
                                LoadReport* report) {
  const io::CsvTable csv = io::read_csv(path);
  const int ts_col = csv.column(spec.timestamp_column);
  if (ts_col < 0)
    throw ValidationError("missing timestamp column '" + spec.timestamp_column + "' in " + path);

  struct Binding {
    std::string feature_id;
    int col;
  };
  std::vector<Binding> bindings;
  if (spec.columns.empty()) {
    for (std::size_t c = 0; c < csv.header.size(); ++c)
      if (static_cast<int>(c) != ts_col) bindings.push_back({csv.header[c], static_cast<int>(c)});
  } else {
    for (const auto& [feature_id, column] : spec.columns) {
      const int c = csv.column(column);
      if (c < 0)
        throw ValidationError("missing column '" + column + "' (feature " + feature_id +
                              ") in " + path);
      bindings.push_back({feature_id, c});
    }
    std::sort(bindings.begin(), bindings.end(),
              [](const Binding& a, const Binding& b) { return a.feature_id < b.feature_id; });
  }

  std::vector<std::int64_t> timestamps;
  std::vector<FeatureSeries> features(bindings.size());
  for (std::size_t j = 0; j < bindings.size(); ++j) {
    features[j].id = bindings[j].feature_id;
    features[j].unit = default_unit(feature_kind(bindings[j].feature_id));
  }

  LoadReport local;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    bool missing = false;
    std::vector<double> parsed(bindings.size());
    for (std::size_t j = 0; j < bindings.size(); ++j) {
      const std::size_t c = static_cast<std::size_t>(bindings[j].col);
      if (c >= row.size()) {
        missing = true;
        break;
      }
      const auto v = io::parse_double(row[c]);
      if (!v) {
        missing = true;
        break;
      }
      parsed[j] = *v;
    }
    const auto ts = static_cast<std::size_t>(ts_col) < row.size()
                        ? io::parse_timestamp(row[static_cast<std::size_t>(ts_col)])
                        : std::nullopt;
    if (!ts) missing = true;
    if (missing) {
      local.dropped_rows.push_back(r);
      continue;
    }
    timestamps.push_back(*ts);
    for (std::size_t j = 0; j < bindings.size(); ++j) features[j].values.push_back(parsed[j]);
  }
  if (report) *report = local;
  if (timestamps.empty())
    throw ValidationError("all rows of " + path + " were dropped (missing values)");
  return FeatureTable(std::move(timestamps), std::move(features));
}

}  // namespace windflex::weather
