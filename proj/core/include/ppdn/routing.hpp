#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ppdn/network.hpp"

namespace ppdn {

/// Per-hop cost definition. loss_over_send is the default; the two relate
/// by loss_over_receive = x / (1 - x).
enum class CostMetric { loss_over_send, loss_over_receive };

constexpr std::string_view to_string(CostMetric metric) {
  return metric == CostMetric::loss_over_send ? "loss_over_send"
                                              : "loss_over_receive";
}

inline std::ostream& operator<<(std::ostream& os, CostMetric metric) {
  return os << to_string(metric);
}

/// Which capacitor a router uses for sending vs. receiving within one slot.
/// The two indices never coincide.
struct CapacitorPair {
  int forwarding = 1;
  int receiving = 2;

  bool operator==(const CapacitorPair&) const = default;
};

/// Per-router capacitor roles for one slot.
struct CapacitorAssignment {
  std::map<int, CapacitorPair> routers;

  const CapacitorPair& at(int router_id) const;

  bool operator==(const CapacitorAssignment&) const = default;
};

/// Slot-specific directed transfer costs. Entries are finite and positive
/// for feasible one-hop transfers and +infinity otherwise (missing edge,
/// wrong node kinds, or wrong voltage ordering).
class WeightMatrix {
 public:
  static constexpr double infinite = std::numeric_limits<double>::infinity();

  WeightMatrix() = default;
  explicit WeightMatrix(std::vector<int> node_ids);

  double at(int from_id, int to_id) const;
  void set(int from_id, int to_id, double weight);
  bool finite(int from_id, int to_id) const;

  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }

  int index_of(int id) const;  // throws when absent
  double at_index(int from, int to) const {
    return weights_[static_cast<std::size_t>(from) * ids_.size() +
                    static_cast<std::size_t>(to)];
  }

 private:
  std::vector<int> ids_;  // ascending
  std::vector<double> weights_;
};

/// A loop-free directed walk as a sequence of edges, plus its summed cost
/// (edge weights added in path order).
struct PathSpec {
  std::vector<std::pair<int, int>> edges;
  double total_cost = 0.0;

  std::vector<int> nodes() const;

  bool operator==(const PathSpec&) const = default;
};

// One-hop costs. All three are evaluated from the circuit energy ratios;
// slot_seconds is the full slot length (costs are computed before payload
// sizing). Ordering violations raise infeasible-transfer; weight-matrix
// construction maps those to +infinity.

double cost_rr(double v1, double v2, double capacitance, double resistance,
               double slot_seconds, CostMetric metric);

double cost_sr(double source_volts, double v2, double capacitance,
               double resistance, double slot_seconds, CostMetric metric);

/// Router-load cost; a pure resistive-divider ratio, independent of voltage
/// and duration.
double cost_rl(double resistance, double load_resistance, CostMetric metric);

/// Evaluates both directions of every edge against the assigned capacitor
/// voltages: router-router and source-router transfers need the sender
/// strictly above a positive receiver, router-load is always feasible, and
/// every other kind combination is infinite.
WeightMatrix build_weight_matrix(const Network& net, const VoltageState& state,
                                 const CapacitorAssignment& assignment,
                                 double slot_seconds, CostMetric metric);

/// All-pairs shortest paths over a weight matrix (Floyd-Warshall with
/// next-hop reconstruction). Reported path costs are re-accumulated in path
/// order so they match an edge-by-edge sum bit for bit.
class AllPairsPaths {
 public:
  explicit AllPairsPaths(const WeightMatrix& weights);

  double distance(int from_id, int to_id) const;
  std::optional<PathSpec> path(int from_id, int to_id) const;

 private:
  WeightMatrix weights_;
  std::vector<double> dist_;
  std::vector<int> next_;
};

/// Minimum-cost simple path, or nullopt when the load is unreachable.
/// from == to is rejected as a degenerate query.
std::optional<PathSpec> shortest_path(const WeightMatrix& weights, int from_id,
                                      int to_id);

struct RankedPaths {
  std::vector<PathSpec> paths;            // ascending cost
  std::vector<double> normalized_costs;   // cost / min cost; [0] == 1.0
};

/// Exhaustive enumeration of every finite-cost simple path, sorted by cost.
/// Aborts with limit-exceeded above `path_limit` collected paths.
RankedPaths enumerate_all_paths(const WeightMatrix& weights, int from_id,
                                int to_id, std::size_t path_limit = 1'000'000);

RankedPaths enumerate_all_paths(const Network& net, const WeightMatrix& weights,
                                int from_id, int to_id,
                                std::size_t path_limit = 1'000'000);

/// Picks the source whose shortest path to the load costs least; ties break
/// toward the lowest source id. nullopt when no source can reach the load.
std::optional<std::pair<int, PathSpec>> best_source(const WeightMatrix& weights,
                                                    std::span<const int> sources,
                                                    int load_id);

}  // namespace ppdn
