#pragma once

#include <utility>

namespace ppdn {

/// Electrical constants of a single point-to-point connection. `capacitance`
/// is per capacitor (all capacitors on a connection are equal),
/// `resistance` is the total series resistance of the connection including
/// switches and lines. `load_resistance` is meaningful only for
/// router-load connections and stays 0 otherwise.
struct LineParams {
  double capacitance = 0.0;      // farads
  double resistance = 0.0;       // ohms
  double load_resistance = 0.0;  // ohms

  bool operator==(const LineParams&) const = default;
};

/// Energy bookkeeping of one transfer: `send` leaves the sender, `receive`
/// arrives at the receiver, `loss` is dissipated in the series resistance.
/// send == receive + loss up to round-off.
struct EnergyTriple {
  double send = 0.0;     // joules
  double receive = 0.0;  // joules
  double loss = 0.0;     // joules

  bool operator==(const EnergyTriple&) const = default;
};

// Router-router connection: two equal capacitors exchange charge through a
// series resistance while the switches stay closed for `payload_seconds`.

/// Closed-form voltage update. Charge is conserved exactly:
/// v1_after + v2_after == v1 + v2 for nonnegative inputs.
std::pair<double, double> rr_update(double v1, double v2, const LineParams& line,
                                    double payload_seconds);

EnergyTriple rr_energies(double v1, double v2, const LineParams& line,
                         double payload_seconds);

/// Payload duration that delivers `unit_energy` in the linear regime
/// (payload much shorter than the RC constant); callers check regime
/// validity. Requires the sender strictly above a positive receiver voltage.
double rr_payload_length(double v1, double v2, double resistance,
                         double unit_energy);

// Source-router connection: an ideal voltage source charges one capacitor of
// the receiving router.

double sr_update(double source_volts, double v2, const LineParams& line,
                 double payload_seconds);

EnergyTriple sr_energies(double source_volts, double v2, const LineParams& line,
                         double payload_seconds);

double sr_payload_length(double source_volts, double v2, double resistance,
                         double unit_energy);

// Router-load connection: one capacitor of the sending router discharges
// into a resistive load through the series resistance.

double rl_update(double v1, const LineParams& line, double payload_seconds);

/// receive/loss split follows the resistive divider: receive carries
/// R_L/(R+R_L) of the sent energy, loss carries R/(R+R_L), for any duration.
EnergyTriple rl_energies(double v1, const LineParams& line,
                         double payload_seconds);

double rl_payload_length(double v1, double resistance, double load_resistance,
                         double unit_energy);

}  // namespace ppdn
