#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lad {

using Node = int;
using Port = int;
using Color = int;

constexpr Port kNoPort = -1;

// One directed half of an undirected edge: the neighbor reached through a
// port, plus the port number of the same edge at that neighbor.
struct HalfEdge {
    Node to = -1;
    Port rev = kNoPort;

    bool operator==(const HalfEdge&) const = default;
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisconnectedGraph : GraphError {
    using GraphError::GraphError;
};
struct DuplicateEdge : GraphError {
    using GraphError::GraphError;
};
struct SelfLoop : GraphError {
    using GraphError::GraphError;
};
struct BadColorIndex : GraphError {
    using GraphError::GraphError;
};
struct BadParams : GraphError {
    using GraphError::GraphError;
};
struct ParseError : GraphError {
    using GraphError::GraphError;
};

// Anonymous colored graph with per-node port numbering. Ports at a node of
// degree d are exactly 0..d-1; adjacency[v][p].rev names the port of the same
// edge at the far end. Immutable after construction.
class PortLabeledGraph {
  public:
    PortLabeledGraph() = default;
    PortLabeledGraph(int n, std::vector<Color> colors,
                     std::vector<std::vector<HalfEdge>> adjacency);

    // Builds from simple undirected edges; ports are assigned at each
    // endpoint in the order the edges are listed.
    static PortLabeledGraph from_edge_list(int n, const std::vector<std::pair<Node, Node>>& edges,
                                           std::vector<Color> colors);

    int node_count() const { return n_; }
    int edge_count() const { return m_; }
    int color_count() const { return t_; }
    int degree(Node v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    Color color(Node v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }
    const HalfEdge& out(Node v, Port p) const { return adj_[v][p]; }
    const std::vector<HalfEdge>& incident(Node v) const { return adj_[v]; }

    bool operator==(const PortLabeledGraph& other) const = default;

  private:
    int n_ = 0;
    int m_ = 0;
    int t_ = 0;
    std::vector<Color> colors_;
    std::vector<std::vector<HalfEdge>> adj_;
};

struct RobotSpec {
    int id = 0;
    Color color = 1;
};

enum class GraphKind { path, ring, tree, random_connected, lower_bound };

GraphKind graph_kind_from_string(const std::string& s);
std::string to_string(GraphKind k);

struct GenParams {
    int n = 0;
    int k = 0;           // lower_bound group size
    int extra_edges = 0; // random_connected: edges beyond the spanning tree
    int palette = 1;     // number of colors used by seeded coloring
    std::uint64_t seed = 0;
};

// Deterministic for fixed (kind, params): identical output across processes.
PortLabeledGraph generate(GraphKind kind, const GenParams& params);

struct ValidationIssue {
    std::string what;
    Node node = -1;
    Port port = kNoPort;
};

// Empty result iff every structural invariant holds. Violations are reported,
// never thrown.
std::vector<ValidationIssue> validate(const PortLabeledGraph& g);

// True iff every color class has at least as many nodes as robots.
bool feasible(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots);

// Text format: header "n m t", then "color v c" per node, then
// "edge u pu v pv" per edge. LF line endings.
std::string serialize(const PortLabeledGraph& g);
PortLabeledGraph parse_graph(const std::string& text);

// Theorem-grade edge count of the lower_bound family.
inline long expected_lower_bound_edges(int n, int k) {
    long groups = n / k;
    return groups * (static_cast<long>(k) * (k - 1) / 2 - 2) + 2 * (groups - 1);
}

} // namespace lad
