#include "ppdn/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ppdn/errors.hpp"

namespace ppdn {
namespace {

std::string node_label(int id) { return "node " + std::to_string(id); }

void validate_node(const Node& node) {
  detail::require(node.id > 0, errc::invalid_topology,
                  node_label(node.id) + ": ids must be positive");
  switch (node.kind) {
    case NodeKind::source:
      detail::require(std::isfinite(node.source_voltage) && node.source_voltage > 0.0,
                      errc::invalid_topology,
                      node_label(node.id) + ": source voltage must be > 0");
      break;
    case NodeKind::load:
      detail::require(std::isfinite(node.load_resistance) && node.load_resistance > 0.0,
                      errc::invalid_topology,
                      node_label(node.id) + ": load resistance must be > 0");
      break;
    case NodeKind::router:
      detail::require(node.capacitor_count >= 2, errc::invalid_topology,
                      node_label(node.id) + ": routers need at least 2 capacitors");
      detail::require(std::isfinite(node.capacitance) && node.capacitance > 0.0,
                      errc::invalid_topology,
                      node_label(node.id) + ": router capacitance must be > 0");
      break;
  }
}

}  // namespace

Network Network::from_parts(std::vector<Node> nodes, std::vector<Edge> edges) {
  Network net;
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    validate_node(nodes[i]);
    detail::require(i == 0 || nodes[i - 1].id != nodes[i].id,
                    errc::invalid_topology,
                    node_label(nodes[i].id) + ": duplicate node id");
  }
  net.nodes_ = std::move(nodes);
  net.adjacency_.resize(net.nodes_.size());

  std::set<std::pair<int, int>> seen;
  for (Edge e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    const std::string label =
        "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    detail::require(e.a != e.b, errc::invalid_topology, label + ": self-loop");
    const int ia = net.index_of(e.a);
    const int ib = net.index_of(e.b);
    detail::require(ia >= 0 && ib >= 0, errc::invalid_topology,
                    label + ": endpoint does not exist");
    detail::require(seen.insert({e.a, e.b}).second, errc::invalid_topology,
                    label + ": duplicate edge");
    detail::require(std::isfinite(e.resistance) && e.resistance > 0.0,
                    errc::invalid_topology, label + ": resistance must be > 0");
    const Node& na = net.nodes_[static_cast<std::size_t>(ia)];
    const Node& nb = net.nodes_[static_cast<std::size_t>(ib)];
    if (na.kind == NodeKind::router && nb.kind == NodeKind::router) {
      detail::require(na.capacitance == nb.capacitance, errc::invalid_topology,
                      label + ": router capacitances must match");
    }
    net.edges_.push_back(e);
    net.adjacency_[static_cast<std::size_t>(ia)].push_back(e.b);
    net.adjacency_[static_cast<std::size_t>(ib)].push_back(e.a);
  }
  std::sort(net.edges_.begin(), net.edges_.end(),
            [](const Edge& x, const Edge& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  for (auto& list : net.adjacency_) std::sort(list.begin(), list.end());
  return net;
}

Network Network::lattice(int rows, int cols, std::span<const SourceTap> sources,
                         std::span<const LoadTap> loads, double edge_resistance,
                         double router_capacitance, int capacitors_per_router) {
  detail::require(rows >= 1 && cols >= 1, errc::invalid_topology,
                  "lattice needs rows >= 1 and cols >= 1");
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  const int router_count = rows * cols;
  for (int id = 1; id <= router_count; ++id) {
    nodes.push_back(Node{.id = id,
                         .kind = NodeKind::router,
                         .capacitor_count = capacitors_per_router,
                         .capacitance = router_capacitance});
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int id = r * cols + c + 1;
      if (c + 1 < cols) edges.push_back(Edge{id, id + 1, edge_resistance});
      if (r + 1 < rows) edges.push_back(Edge{id, id + cols, edge_resistance});
    }
  }
  int next_id = router_count + 1;
  for (const SourceTap& tap : sources) {
    detail::require(tap.router >= 1 && tap.router <= router_count,
                    errc::invalid_topology,
                    "source tap references router " + std::to_string(tap.router) +
                        " outside the lattice");
    nodes.push_back(
        Node{.id = next_id, .kind = NodeKind::source, .source_voltage = tap.voltage});
    edges.push_back(Edge{tap.router, next_id, edge_resistance});
    ++next_id;
  }
  for (const LoadTap& tap : loads) {
    detail::require(tap.router >= 1 && tap.router <= router_count,
                    errc::invalid_topology,
                    "load tap references router " + std::to_string(tap.router) +
                        " outside the lattice");
    nodes.push_back(
        Node{.id = next_id, .kind = NodeKind::load, .load_resistance = tap.resistance});
    edges.push_back(Edge{tap.router, next_id, edge_resistance});
    ++next_id;
  }
  return from_parts(std::move(nodes), std::move(edges));
}

int Network::index_of(int id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const Node& node, int value) { return node.id < value; });
  if (it == nodes_.end() || it->id != id) return -1;
  return static_cast<int>(it - nodes_.begin());
}

bool Network::has_node(int id) const { return index_of(id) >= 0; }

const Node& Network::node(int id) const {
  const int idx = index_of(id);
  detail::require(idx >= 0, errc::invalid_parameter,
                  node_label(id) + " does not exist");
  return nodes_[static_cast<std::size_t>(idx)];
}

bool Network::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b, 0.0},
                            [](const Edge& x, const Edge& y) {
                              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                            });
}

const Edge& Network::edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b, 0.0},
                             [](const Edge& x, const Edge& y) {
                               return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                             });
  detail::require(it != edges_.end() && it->a == a && it->b == b,
                  errc::invalid_parameter,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") does not exist");
  return *it;
}

const std::vector<int>& Network::neighbors(int id) const {
  const int idx = index_of(id);
  detail::require(idx >= 0, errc::invalid_parameter,
                  node_label(id) + " does not exist");
  return adjacency_[static_cast<std::size_t>(idx)];
}

std::vector<int> Network::node_ids() const {
  std::vector<int> ids;
  ids.reserve(nodes_.size());
  for (const Node& node : nodes_) ids.push_back(node.id);
  return ids;
}

std::vector<int> Network::sources() const {
  std::vector<int> ids;
  for (const Node& node : nodes_) {
    if (node.kind == NodeKind::source) ids.push_back(node.id);
  }
  return ids;
}

int Network::count(NodeKind kind) const {
  int n = 0;
  for (const Node& node : nodes_) {
    if (node.kind == kind) ++n;
  }
  return n;
}

VoltageState VoltageState::uniform(const Network& net, double router_volts) {
  detail::require(std::isfinite(router_volts) && router_volts >= 0.0,
                  errc::invalid_parameter, "router voltage must be >= 0");
  VoltageState state;
  for (const Node& node : net.nodes()) {
    Row row;
    row.node_id = node.id;
    row.kind = node.kind;
    switch (node.kind) {
      case NodeKind::source: row.fixed = node.source_voltage; break;
      case NodeKind::load: row.fixed = 0.0; break;
      case NodeKind::router:
        row.capacitance = node.capacitance;
        row.caps.assign(static_cast<std::size_t>(node.capacitor_count),
                        router_volts);
        break;
    }
    state.rows_.push_back(std::move(row));
  }
  return state;
}

VoltageState VoltageState::from_rows(
    const Network& net, const std::map<int, std::vector<double>>& rows) {
  VoltageState state = uniform(net, 0.0);
  std::size_t used = 0;
  for (Row& row : state.rows_) {
    if (row.kind != NodeKind::router) continue;
    auto it = rows.find(row.node_id);
    detail::require(it != rows.end(), errc::invalid_parameter,
                    node_label(row.node_id) + ": missing initial voltages");
    detail::require(it->second.size() == row.caps.size(), errc::invalid_parameter,
                    node_label(row.node_id) + ": expected " +
                        std::to_string(row.caps.size()) + " capacitor voltages");
    for (double v : it->second) {
      detail::require(std::isfinite(v) && v >= 0.0, errc::invalid_parameter,
                      node_label(row.node_id) + ": voltages must be >= 0");
    }
    row.caps = it->second;
    ++used;
  }
  detail::require(used == rows.size(), errc::invalid_parameter,
                  "initial voltages reference non-router nodes");
  return state;
}

const VoltageState::Row& VoltageState::row(int id) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), id,
                             [](const Row& r, int v) { return r.node_id < v; });
  detail::require(it != rows_.end() && it->node_id == id, errc::invalid_parameter,
                  node_label(id) + " does not exist");
  return *it;
}

VoltageState::Row& VoltageState::row(int id) {
  return const_cast<Row&>(static_cast<const VoltageState*>(this)->row(id));
}

double VoltageState::get(int node_id, int cap_index) const {
  const Row& r = row(node_id);
  detail::require(cap_index >= 1, errc::invalid_parameter,
                  "capacitor indices start at 1");
  if (r.kind != NodeKind::router) return r.fixed;  // fill convention
  detail::require(cap_index <= static_cast<int>(r.caps.size()),
                  errc::invalid_parameter,
                  node_label(node_id) + ": capacitor index out of range");
  return r.caps[static_cast<std::size_t>(cap_index - 1)];
}

void VoltageState::set(int node_id, int cap_index, double volts) {
  Row& r = row(node_id);
  detail::require(r.kind == NodeKind::router, errc::invalid_parameter,
                  node_label(node_id) + ": only router rows are writable");
  detail::require(cap_index >= 1 && cap_index <= static_cast<int>(r.caps.size()),
                  errc::invalid_parameter,
                  node_label(node_id) + ": capacitor index out of range");
  detail::require(std::isfinite(volts), errc::invalid_parameter,
                  "voltage must be finite");
  r.caps[static_cast<std::size_t>(cap_index - 1)] = volts;
}

NodeKind VoltageState::kind(int node_id) const { return row(node_id).kind; }

int VoltageState::capacitor_count(int node_id) const {
  return static_cast<int>(row(node_id).caps.size());
}

std::vector<int> VoltageState::node_ids() const {
  std::vector<int> ids;
  ids.reserve(rows_.size());
  for (const Row& r : rows_) ids.push_back(r.node_id);
  return ids;
}

double equalize_router_capacitors(VoltageState& state, int router_id) {
  auto& row = state.row(router_id);
  detail::require(row.kind == NodeKind::router, errc::invalid_parameter,
                  node_label(router_id) + " is not a router");
  const auto [lo, hi] = std::minmax_element(row.caps.begin(), row.caps.end());
  if (*lo == *hi) return 0.0;
  double sum = 0.0;
  for (double v : row.caps) sum += v;
  const double mean = sum / static_cast<double>(row.caps.size());
  double spread = 0.0;
  for (double v : row.caps) spread += (v - mean) * (v - mean);
  std::fill(row.caps.begin(), row.caps.end(), mean);
  return 0.5 * row.capacitance * spread;
}

}  // namespace ppdn
