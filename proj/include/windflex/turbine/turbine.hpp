#pragma once

#include <string>
#include <vector>

namespace windflex::turbine {

/// Power-curve regions: I below cut-in (idle), II cut-in..rated (cubic),
/// III rated..cut-out (plateau), IV at/above cut-out (shutdown).
enum class Region { I, II, III, IV };

std::string region_name(Region r);

enum class PlateauMode {
  ClipUnity,  // Region III produces the full rated output (normalized 1)
  Derated     // Region III plateau keeps the wake-loss factor: 1 - delta
};

struct CpPoint {
  double speed;        // m/s
  double coefficient;  // power coefficient, [0, Betz limit]
};

struct TurbineSpec {
  double rotor_diameter = 120.0;  // m
  double hub_height = 100.0;      // m
  double rated_power_mw = 15.0;
  double cut_in = 3.0;       // m/s
  double rated_speed = 10.6; // m/s
  double cut_out = 25.0;     // m/s
  std::vector<CpPoint> cp_curve;     // strictly increasing speeds
  double wake_loss_fraction = 0.15;  // delta
  PlateauMode plateau_mode = PlateauMode::ClipUnity;

  double rotor_area() const;
  void validate() const;
};

/// Reference curve approximating an offshore turbine with cut-in 3 m/s and
/// cut-out 25 m/s. A configuration asset, not ground truth: tests that need
/// exact values must supply their own curve.
TurbineSpec default_offshore_spec();

struct ProfileLevel {
  double height;     // m
  double speed;      // m/s
  double direction;  // deg
};

struct WindProfile {
  std::vector<ProfileLevel> levels;  // heights strictly increasing
  double hub_direction = 0.0;        // deg

  void validate() const;
};

/// Moist-air density at hub height from pressure (Pa), temperature (degC)
/// and relative humidity (%), via partial pressures with the Magnus
/// saturation-vapor approximation.
double air_density(double pressure_pa, double temperature_c, double relative_humidity_pct);

/// Cubic-mean, segment-area-weighted, direction-projected wind speed over
/// the rotor disk. Each measurement level owns the horizontal slab between
/// midpoints to its neighbors; projections below zero are floored at 0.
double rotor_equivalent_wind_speed(const WindProfile& profile, const TurbineSpec& spec);

Region classify_region(double speed, const TurbineSpec& spec);

/// Normalized farm output in [0, 1] for a rotor-equivalent speed and hub
/// air density: zero in Regions I/IV, density-corrected cubic law with wake
/// loss in Region II, plateau in Region III.
double modified_power_curve(double v_equ, double rho_hub, const TurbineSpec& spec);

struct WeatherRecord {
  double pressure_pa = 0.0;
  double temperature_c = 0.0;
  double relative_humidity_pct = 0.0;
  WindProfile profile;
};

double farm_power_mw(const WeatherRecord& record, const TurbineSpec& spec,
                     double farm_capacity_mw);

}  // namespace windflex::turbine
