#include "ppdn/circuit.hpp"

#include <cmath>

#include "ppdn/errors.hpp"

namespace ppdn {
namespace {

void check_line(const LineParams& line, bool needs_load) {
  detail::require(std::isfinite(line.capacitance) && line.capacitance > 0.0,
                  errc::invalid_parameter, "capacitance must be > 0");
  detail::require(std::isfinite(line.resistance) && line.resistance > 0.0,
                  errc::invalid_parameter, "resistance must be > 0");
  if (needs_load) {
    detail::require(
        std::isfinite(line.load_resistance) && line.load_resistance > 0.0,
        errc::invalid_parameter, "load resistance must be > 0");
  }
}

void check_duration(double payload_seconds) {
  detail::require(std::isfinite(payload_seconds) && payload_seconds >= 0.0,
                  errc::invalid_parameter,
                  "payload duration must be finite and >= 0");
}

void check_sizing(double resistance, double unit_energy) {
  detail::require(std::isfinite(resistance) && resistance > 0.0,
                  errc::invalid_parameter, "resistance must be > 0");
  detail::require(std::isfinite(unit_energy) && unit_energy > 0.0,
                  errc::invalid_parameter, "unit energy must be > 0");
}

}  // namespace

std::pair<double, double> rr_update(double v1, double v2,
                                    const LineParams& line,
                                    double payload_seconds) {
  check_line(line, false);
  check_duration(payload_seconds);
  if (payload_seconds == 0.0) return {v1, v2};
  const double tau = line.capacitance * line.resistance;
  const double decay = std::exp(-2.0 * payload_seconds / tau);
  const double sum = v1 + v2;
  // Derive the smaller value from the conserved sum; the subtraction is
  // exact (Sterbenz) because the larger updated voltage lies in [sum/2, sum].
  if (v1 >= v2) {
    const double v1_after = 0.5 * (sum + (v1 - v2) * decay);
    return {v1_after, sum - v1_after};
  }
  const double v2_after = 0.5 * (sum + (v2 - v1) * decay);
  return {sum - v2_after, v2_after};
}

EnergyTriple rr_energies(double v1, double v2, const LineParams& line,
                         double payload_seconds) {
  check_line(line, false);
  check_duration(payload_seconds);
  const double tau = line.capacitance * line.resistance;
  const double x = 2.0 * payload_seconds / tau;
  const double decay = std::exp(-x);
  const double ramp = -std::expm1(-x);  // 1 - exp(-x), accurate for small x
  const double dv = v1 - v2;
  const double c8 = line.capacitance / 8.0;
  EnergyTriple e;
  e.send = c8 * dv * ramp * ((3.0 * v1 + v2) + dv * decay);
  e.receive = c8 * dv * ramp * ((v1 + 3.0 * v2) - dv * decay);
  e.loss = 0.25 * line.capacitance * dv * dv * ramp * (1.0 + decay);
  return e;
}

double rr_payload_length(double v1, double v2, double resistance,
                         double unit_energy) {
  check_sizing(resistance, unit_energy);
  const double linear_power_scale = (v1 - v2) * v2;
  detail::require(linear_power_scale > 0.0, errc::infeasible_transfer,
                  "transfer requires the sender above a positive receiver voltage");
  return resistance * unit_energy / linear_power_scale;
}

double sr_update(double source_volts, double v2, const LineParams& line,
                 double payload_seconds) {
  check_line(line, false);
  check_duration(payload_seconds);
  if (payload_seconds == 0.0) return v2;
  const double tau = line.capacitance * line.resistance;
  return (v2 - source_volts) * std::exp(-payload_seconds / tau) + source_volts;
}

EnergyTriple sr_energies(double source_volts, double v2,
                         const LineParams& line, double payload_seconds) {
  check_line(line, false);
  check_duration(payload_seconds);
  const double tau = line.capacitance * line.resistance;
  const double x = payload_seconds / tau;
  const double decay = std::exp(-x);
  const double ramp = -std::expm1(-x);
  const double dv = source_volts - v2;
  EnergyTriple e;
  e.send = line.capacitance * source_volts * dv * ramp;
  e.receive = 0.5 * line.capacitance * dv * ramp *
              (source_volts * ramp + v2 * (1.0 + decay));
  e.loss = 0.5 * line.capacitance * dv * dv * ramp * (1.0 + decay);
  return e;
}

double sr_payload_length(double source_volts, double v2, double resistance,
                         double unit_energy) {
  return rr_payload_length(source_volts, v2, resistance, unit_energy);
}

double rl_update(double v1, const LineParams& line, double payload_seconds) {
  check_line(line, true);
  check_duration(payload_seconds);
  if (payload_seconds == 0.0) return v1;
  const double tau =
      line.capacitance * (line.resistance + line.load_resistance);
  return v1 * std::exp(-payload_seconds / tau);
}

EnergyTriple rl_energies(double v1, const LineParams& line,
                         double payload_seconds) {
  check_line(line, true);
  check_duration(payload_seconds);
  const double total_resistance = line.resistance + line.load_resistance;
  const double tau = line.capacitance * total_resistance;
  const double ramp = -std::expm1(-2.0 * payload_seconds / tau);
  EnergyTriple e;
  e.send = 0.5 * line.capacitance * v1 * v1 * ramp;
  e.receive = e.send * (line.load_resistance / total_resistance);
  e.loss = e.send * (line.resistance / total_resistance);
  return e;
}

double rl_payload_length(double v1, double resistance, double load_resistance,
                         double unit_energy) {
  check_sizing(resistance, unit_energy);
  detail::require(std::isfinite(load_resistance) && load_resistance > 0.0,
                  errc::invalid_parameter, "load resistance must be > 0");
  detail::require(v1 > 0.0, errc::infeasible_transfer,
                  "load supply requires a positive capacitor voltage");
  const double total_resistance = resistance + load_resistance;
  return total_resistance * total_resistance * unit_energy /
         (load_resistance * v1 * v1);
}

}  // namespace ppdn
