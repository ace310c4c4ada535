#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace ppdn {

enum class NodeKind { source, router, load };

constexpr std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::source: return "source";
    case NodeKind::router: return "router";
    case NodeKind::load: return "load";
  }
  return "unknown";
}

inline std::ostream& operator<<(std::ostream& os, NodeKind kind) {
  return os << to_string(kind);
}

/// One node of the dispatching network. Only the fields matching `kind`
/// are meaningful; the rest stay at their zero defaults.
struct Node {
  int id = 0;
  NodeKind kind = NodeKind::router;
  double source_voltage = 0.0;   // sources: ideal source voltage, > 0
  double load_resistance = 0.0;  // loads: ohms, > 0
  int capacitor_count = 0;       // routers: >= 2
  double capacitance = 0.0;      // routers: farads per capacitor, > 0

  bool operator==(const Node&) const = default;
};

/// Undirected power line. Stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  double resistance = 0.0;  // ohms, total series resistance

  bool operator==(const Edge&) const = default;
};

struct SourceTap {
  int router = 0;
  double voltage = 0.0;

  bool operator==(const SourceTap&) const = default;
};

struct LoadTap {
  int router = 0;
  double resistance = 0.0;

  bool operator==(const LoadTap&) const = default;
};

/// Simple undirected graph of sources, routers and loads. Immutable after
/// construction; all builders validate their input.
class Network {
 public:
  Network() = default;

  /// Builds and validates a network from explicit node/edge lists.
  /// Rejects duplicate ids, self-loops, parallel edges, dangling endpoints,
  /// missing per-kind parameters and router-router edges whose endpoint
  /// capacitances differ.
  static Network from_parts(std::vector<Node> nodes, std::vector<Edge> edges);

  /// rows x cols router grid with 4-neighbor links. Routers are numbered
  /// 1..rows*cols in row-major order; each tap appends one node (sources
  /// first, then loads) wired to its router with one edge.
  static Network lattice(int rows, int cols, std::span<const SourceTap> sources,
                         std::span<const LoadTap> loads, double edge_resistance,
                         double router_capacitance, int capacitors_per_router = 2);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }  // ascending id
  const std::vector<Edge>& edges() const { return edges_; }  // sorted (a, b)

  bool has_node(int id) const;
  const Node& node(int id) const;
  bool has_edge(int a, int b) const;
  const Edge& edge(int a, int b) const;
  const std::vector<int>& neighbors(int id) const;  // ascending ids

  std::vector<int> node_ids() const;
  std::vector<int> sources() const;  // ascending source ids
  int count(NodeKind kind) const;

 private:
  int index_of(int id) const;  // -1 when absent

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Per-node capacitor voltages. Source rows read as the source voltage and
/// load rows as zero for any capacitor index (matrix fill convention);
/// router rows are backed by one value per capacitor, indexed from 1.
/// Copying the state yields an independent snapshot.
class VoltageState {
 public:
  VoltageState() = default;

  static VoltageState uniform(const Network& net, double router_volts);

  /// Router rows given explicitly; every router must appear with exactly
  /// capacitor_count entries, all finite and >= 0.
  static VoltageState from_rows(const Network& net,
                                const std::map<int, std::vector<double>>& rows);

  double get(int node_id, int cap_index) const;

  /// Writes are allowed on router rows only.
  void set(int node_id, int cap_index, double volts);

  NodeKind kind(int node_id) const;
  int capacitor_count(int node_id) const;
  std::vector<int> node_ids() const;

  bool operator==(const VoltageState&) const = default;

 private:
  struct Row {
    int node_id = 0;
    NodeKind kind = NodeKind::router;
    double fixed = 0.0;        // source voltage or 0 for loads
    double capacitance = 0.0;  // routers only
    std::vector<double> caps;

    bool operator==(const Row&) const = default;
  };

  friend double equalize_router_capacitors(VoltageState& state, int router_id);

  const Row& row(int id) const;
  Row& row(int id);

  std::vector<Row> rows_;  // ascending node id
};

/// Connects all capacitors of the router in parallel: every entry becomes
/// the bank mean (charge conserving for equal capacitances). Returns the
/// dissipated energy 0.5*C*sum((v_j - mean)^2); zero iff already uniform.
double equalize_router_capacitors(VoltageState& state, int router_id);

}  // namespace ppdn
