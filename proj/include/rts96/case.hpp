#pragma once

#include <array>
#include <string>
#include <vector>

namespace rts96 {

inline constexpr int kAreas = 4;
inline constexpr double kBaseMva = 100.0;

enum class BusKind { load, generator, slack };

const char* to_string(BusKind k);
BusKind bus_kind_from_string(const std::string& s);

enum class WindZone { DK1, DK2, SE1, SE4 };
inline constexpr int kWindZones = 4;

const char* to_string(WindZone z);
WindZone wind_zone_from_string(const std::string& s);

struct Bus {
  int id = 0;        // 101..124, 201..224, 301..324, 401..424
  int area = 0;      // 1..4 == id / 100
  BusKind kind = BusKind::load;
  double gl = 0.0;   // shunt conductance, stored only
  double bl = 0.0;   // shunt susceptance, stored only
  double base_kv = 0.0;
  double vmax = 0.0; // stored only
  double vmin = 0.0; // stored only
};

struct LoadSpec {
  std::string id;    // e.g. "1-D03"
  int bus = 0;
  double peak_mw = 0.0;              // includes the 10% uplift
  double utility_usd_per_mwh = 0.0;  // area scaling already applied
  int i1 = 0;                        // residential/commercial profile
  int i2 = 0;                        // industrial profile
};

struct GenSpec {
  std::string id;    // e.g. "2-G23"
  int bus = 0;
  double pmax_mw = 0.0;
  double qmin_mvar = 0.0;  // stored only
  double qmax_mvar = 0.0;  // stored only
  double cost_usd_per_mwh = 0.0;  // area scaling already applied
};

struct WindFarm {
  std::string id;    // "W01".."W16"
  int bus = 0;
  double pmax_mw = 0.0;
  WindZone profile_key = WindZone::DK1;
};

struct AcBranch {
  std::string id;    // "1-L11", "AC02-1", ...
  int from_bus = 0;
  int to_bus = 0;
  double r_pu = 0.0;
  double x_pu = 0.0;
  double b_pu = 0.0;
  double rating_mva = 0.0;
  double tap_ratio = 0.0;  // 0 for lines/cables, >0 for transformers
};

struct HvdcLink {
  std::string id;    // "DC01".."DC03"
  int from_bus = 0;
  int to_bus = 0;
  double r_pu = 0.0;
  double a_inv = 0.0;
  double a_rec = 0.0;
  double b_coef = 0.0;
  double c_coef = 0.0;
  double rating_mw = 0.0;
};

// Full network description. Treated as immutable after construction; safe to
// share across threads.
struct SystemCase {
  double base_mva = kBaseMva;
  std::array<double, kAreas> utility_factors{};
  std::array<double, kAreas> cost_factors{};
  std::vector<Bus> buses;           // sorted by id
  std::vector<LoadSpec> loads;      // area-major, table order within area
  std::vector<GenSpec> generators;  // area-major, table order within area
  std::vector<WindFarm> wind_farms;
  std::vector<AcBranch> ac_branches;  // per-area branches, then the 4 AC ties
  std::vector<HvdcLink> hvdc_links;

  // Index of a bus id in buses, -1 if unknown.
  int bus_pos(int bus_id) const;
};

// Constructs the 96-bus 4-area system from the embedded data tables.
// Deterministic; building twice yields identical cases.
SystemCase build_system();

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
  std::string to_text() const;
};

// Checks entity counts, per-area aggregates and island connectivity against
// the known totals of the embedded tables.
ValidationReport validate(const SystemCase& sys);

}  // namespace rts96
