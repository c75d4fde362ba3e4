#include "windflex/turbine/turbine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "windflex/common.hpp"

namespace windflex::turbine {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kGasConstantDry = 287.058;    // J/(kg K)
constexpr double kGasConstantVapor = 461.495;  // J/(kg K)
constexpr double kBetzLimit = 0.593;
}  // namespace

std::string region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
  }
  return "?";
}

double TurbineSpec::rotor_area() const {
  const double r = rotor_diameter / 2.0;
  return kPi * r * r;
}

void TurbineSpec::validate() const {
  if (!(rotor_diameter > 0.0)) throw ValidationError("rotor_diameter must be positive");
  if (!(hub_height > 0.0)) throw ValidationError("hub_height must be positive");
  if (!(rated_power_mw > 0.0)) throw ValidationError("rated_power must be positive");
  if (!(0.0 < cut_in && cut_in < rated_speed && rated_speed < cut_out))
    throw ValidationError("need 0 < cut_in < rated_speed < cut_out");
  if (!(wake_loss_fraction >= 0.0 && wake_loss_fraction < 1.0))
    throw ValidationError("wake_loss_fraction must be in [0,1)");
  if (cp_curve.empty()) throw ValidationError("cp_curve is empty");
  for (std::size_t i = 0; i < cp_curve.size(); ++i) {
    if (cp_curve[i].coefficient < 0.0 || cp_curve[i].coefficient > kBetzLimit)
      throw ValidationError("cp coefficient outside [0, 0.593] at entry " + std::to_string(i));
    if (i > 0 && !(cp_curve[i].speed > cp_curve[i - 1].speed))
      throw ValidationError("cp_curve speeds must be strictly increasing");
  }
}

TurbineSpec default_offshore_spec() {
  TurbineSpec spec;
  spec.cp_curve = {
      {3.0, 0.40}, {4.0, 0.45}, {5.0, 0.47}, {6.0, 0.47}, {7.0, 0.47},
      {8.0, 0.47}, {9.0, 0.46}, {10.0, 0.44}, {10.6, 0.42}, {12.0, 0.30},
      {14.0, 0.19}, {16.0, 0.13}, {18.0, 0.09}, {20.0, 0.066}, {22.0, 0.050},
      {25.0, 0.034},
  };
  spec.validate();
  return spec;
}

void WindProfile::validate() const {
  if (levels.empty()) throw ValidationError("wind profile has no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].speed < 0.0) throw ValidationError("negative wind speed in profile");
    if (i > 0 && !(levels[i].height > levels[i - 1].height))
      throw ValidationError("profile heights must be strictly increasing");
  }
}

double air_density(double pressure_pa, double temperature_c, double relative_humidity_pct) {
  if (!(pressure_pa > 0.0)) throw ValidationError("pressure must be positive");
  if (relative_humidity_pct < 0.0 || relative_humidity_pct > 100.0)
    throw ValidationError("relative humidity must be in [0,100]");
  if (!(temperature_c > -100.0)) throw ValidationError("temperature below -100 degC");

  const double t_kelvin = temperature_c + 273.15;
  // Magnus saturation vapor pressure (Alduchov-Eskridge coefficients), Pa.
  const double saturation =
      610.94 * std::exp(17.625 * temperature_c / (temperature_c + 243.04));
  const double vapor = (relative_humidity_pct / 100.0) * saturation;
  const double dry = pressure_pa - vapor;
  const double rho = dry / (kGasConstantDry * t_kelvin) + vapor / (kGasConstantVapor * t_kelvin);
  if (rho < 0.5 || rho > 2.0) {
    std::ostringstream msg;
    msg << "implausible air density " << rho << " kg/m^3 from (P=" << pressure_pa
        << " Pa, T=" << temperature_c << " C, RH=" << relative_humidity_pct << " %)";
    throw ValidationError(msg.str());
  }
  return rho;
}

namespace {

// Integral of the chord width 2*sqrt(R^2 - y^2) from the disk center.
double chord_area_antiderivative(double y, double radius) {
  y = std::clamp(y, -radius, radius);
  return y * std::sqrt(std::max(0.0, radius * radius - y * y)) +
         radius * radius * std::asin(std::clamp(y / radius, -1.0, 1.0));
}

double interpolate_cp(const TurbineSpec& spec, double speed) {
  const auto& curve = spec.cp_curve;
  if (speed < curve.front().speed || speed > curve.back().speed) {
    std::ostringstream msg;
    msg << "speed " << speed << " m/s outside cp_curve domain [" << curve.front().speed << ", "
        << curve.back().speed << "]";
    throw ModelError(msg.str());
  }
  auto it = std::lower_bound(curve.begin(), curve.end(), speed,
                             [](const CpPoint& p, double v) { return p.speed < v; });
  if (it == curve.begin()) return it->coefficient;
  const CpPoint& hi = *it;
  const CpPoint& lo = *(it - 1);
  const double w = (speed - lo.speed) / (hi.speed - lo.speed);
  return lo.coefficient + w * (hi.coefficient - lo.coefficient);
}

}  // namespace

double rotor_equivalent_wind_speed(const WindProfile& profile, const TurbineSpec& spec) {
  profile.validate();
  const double radius = spec.rotor_diameter / 2.0;
  const double lo = spec.hub_height - radius;
  const double hi = spec.hub_height + radius;
  const auto& levels = profile.levels;
  if (levels.front().height > lo + 1e-9 || levels.back().height < hi - 1e-9) {
    std::ostringstream msg;
    msg << "rotor disk [" << lo << ", " << hi << "] m not covered by profile heights ["
        << levels.front().height << ", " << levels.back().height << "]";
    throw ModelError(msg.str());
  }

  const double area = spec.rotor_area();
  double cubic_sum = 0.0;
  double area_sum = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double slab_lo =
        (i == 0) ? lo : std::max(lo, 0.5 * (levels[i - 1].height + levels[i].height));
    const double slab_hi = (i + 1 == levels.size())
                               ? hi
                               : std::min(hi, 0.5 * (levels[i].height + levels[i + 1].height));
    if (slab_hi <= slab_lo) continue;
    const double seg_area = chord_area_antiderivative(slab_hi - spec.hub_height, radius) -
                            chord_area_antiderivative(slab_lo - spec.hub_height, radius);
    const double projection =
        std::max(0.0, std::cos((levels[i].direction - profile.hub_direction) * kDegToRad));
    const double v = levels[i].speed * projection;
    cubic_sum += (seg_area / area) * v * v * v;
    area_sum += seg_area;
  }
  if (std::abs(area_sum - area) > 1e-9 * area)
    throw ModelError("rotor disk slab areas do not add up to the rotor area");
  return std::cbrt(cubic_sum);
}

Region classify_region(double speed, const TurbineSpec& spec) {
  if (speed < 0.0) throw ValidationError("negative wind speed");
  if (speed < spec.cut_in) return Region::I;
  if (speed < spec.rated_speed) return Region::II;
  if (speed < spec.cut_out) return Region::III;
  return Region::IV;
}

double modified_power_curve(double v_equ, double rho_hub, const TurbineSpec& spec) {
  if (!(rho_hub >= 0.5 && rho_hub <= 2.0))
    throw ValidationError("implausible air density " + std::to_string(rho_hub));
  const double plateau =
      spec.plateau_mode == PlateauMode::ClipUnity ? 1.0 : 1.0 - spec.wake_loss_fraction;
  switch (classify_region(v_equ, spec)) {
    case Region::I:
    case Region::IV:
      return 0.0;
    case Region::III:
      return plateau;
    case Region::II: {
      const double cp = interpolate_cp(spec, v_equ);
      const double watts = (1.0 - spec.wake_loss_fraction) * 0.5 * rho_hub * spec.rotor_area() *
                           v_equ * v_equ * v_equ * cp;
      return std::min(plateau, watts / (spec.rated_power_mw * 1e6));
    }
  }
  return 0.0;
}

double farm_power_mw(const WeatherRecord& record, const TurbineSpec& spec,
                     double farm_capacity_mw) {
  const double rho =
      air_density(record.pressure_pa, record.temperature_c, record.relative_humidity_pct);
  const double v_equ = rotor_equivalent_wind_speed(record.profile, spec);
  return modified_power_curve(v_equ, rho, spec) * farm_capacity_mw;
}

}  // namespace windflex::turbine
