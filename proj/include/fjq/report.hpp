#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fjq {

enum class Quantity { kInternalConflict, kDisagreement, kPolarization, kControversy, kDcIndex };

inline constexpr std::array<Quantity, 5> kAllQuantities = {
    Quantity::kInternalConflict, Quantity::kDisagreement, Quantity::kPolarization,
    Quantity::kControversy, Quantity::kDcIndex};

// Short column name: C_I, D, P, C, I_dc.
std::string_view short_name(Quantity q);
// Long key used in serialized reports, e.g. "internal_conflict".
std::string_view key_name(Quantity q);

// The five scalars in kAllQuantities order.
struct Quantities {
  double internal_conflict = 0.0;
  double disagreement = 0.0;
  double polarization = 0.0;
  double controversy = 0.0;
  double dc_index = 0.0;

  double get(Quantity q) const;
  double& get(Quantity q);

  bool operator==(const Quantities&) const = default;
};

// |exact - estimate| / exact, with 0/0 read as 0.
double relative_error(double exact, double estimate);

// Result record shared by the exact, dynamical and approximate paths.
//
// Serialized field order (both formats):
//   method, n, m, epsilon, internal_conflict, disagreement, polarization,
//   controversy, disagreement_controversy_index, solver_iterations,
//   wall_time_s
// followed by method-specific extras: dc_index_check (D + C, exact paths),
// delta_theoretical, delta_effective, delta_mode, delta_clamped (approx).
struct QuantityReport {
  std::string method;  // "exact", "approx" or "fj"
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> epsilon;
  Quantities values;
  long long solver_iterations = 0;
  double wall_time_s = 0.0;

  std::optional<double> dc_index_check;
  std::optional<double> delta_theoretical;
  std::optional<double> delta_effective;
  std::optional<std::string> delta_mode;
  std::optional<bool> delta_clamped;
};

// One "key=value" line per field.
void write_key_value(std::ostream& out, const QuantityReport& report);
// Single-line JSON object.
void write_json(std::ostream& out, const QuantityReport& report);
std::string to_json(const QuantityReport& report);
QuantityReport report_from_json(std::string_view text);

}  // namespace fjq
