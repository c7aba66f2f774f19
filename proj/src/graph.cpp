#include "lad/graph.hpp"

#include "lad/rng.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lad {

PortLabeledGraph::PortLabeledGraph(int n, std::vector<Color> colors,
                                   std::vector<std::vector<HalfEdge>> adjacency)
    : n_(n), colors_(std::move(colors)), adj_(std::move(adjacency)) {
    long half = 0;
    for (const auto& a : adj_) half += static_cast<long>(a.size());
    m_ = static_cast<int>(half / 2);
    t_ = 0;
    for (Color c : colors_) t_ = std::max(t_, c);
}

int PortLabeledGraph::max_degree() const {
    int d = 0;
    for (Node v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

namespace {

void check_connected(int n, const std::vector<std::vector<HalfEdge>>& adj) {
    if (n == 0) throw BadParams("graph must have at least one node");
    std::vector<char> seen(n, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Node v = stack.back();
        stack.pop_back();
        for (const auto& he : adj[v]) {
            if (!seen[he.to]) {
                seen[he.to] = 1;
                ++reached;
                stack.push_back(he.to);
            }
        }
    }
    if (reached != n) throw DisconnectedGraph("graph is not connected");
}

} // namespace

PortLabeledGraph PortLabeledGraph::from_edge_list(int n,
                                                  const std::vector<std::pair<Node, Node>>& edges,
                                                  std::vector<Color> colors) {
    if (static_cast<int>(colors.size()) != n)
        throw BadColorIndex("colors must list one color per node");
    for (int i = 0; i < n; ++i) {
        if (colors[i] < 1 || colors[i] > n)
            throw BadColorIndex("color out of range at node " + std::to_string(i));
    }
    std::vector<std::vector<HalfEdge>> adj(n);
    std::set<std::pair<Node, Node>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadParams("edge endpoint out of range");
        if (u == v) throw SelfLoop("self-loop at node " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ")");
        Port pu = static_cast<Port>(adj[u].size());
        Port pv = static_cast<Port>(adj[v].size());
        adj[u].push_back({v, pv});
        adj[v].push_back({u, pu});
    }
    check_connected(n, adj);
    return PortLabeledGraph(n, std::move(colors), std::move(adj));
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "path") return GraphKind::path;
    if (s == "ring") return GraphKind::ring;
    if (s == "tree") return GraphKind::tree;
    if (s == "random_connected") return GraphKind::random_connected;
    if (s == "lower_bound") return GraphKind::lower_bound;
    throw BadParams("unknown graph kind: " + s);
}

std::string to_string(GraphKind k) {
    switch (k) {
    case GraphKind::path: return "path";
    case GraphKind::ring: return "ring";
    case GraphKind::tree: return "tree";
    case GraphKind::random_connected: return "random_connected";
    case GraphKind::lower_bound: return "lower_bound";
    }
    return "?";
}

namespace {

std::vector<Color> seeded_colors(int n, int palette, Rng& rng) {
    std::vector<Color> colors(n, 1);
    if (palette > 1) {
        for (int i = 0; i < n; ++i) colors[i] = 1 + static_cast<Color>(rng.below(palette));
    }
    return colors;
}

PortLabeledGraph gen_lower_bound(const GenParams& p) {
    // Blocks of k nodes, each a k-clique minus two fixed edges, chained by two
    // bridges per consecutive pair; all nodes blue except the last, red.
    if (p.k < 5) throw BadParams("lower_bound needs k >= 5");
    if (p.n <= 0 || p.n % p.k != 0) throw BadParams("lower_bound needs n divisible by k");
    int groups = p.n / p.k;
    std::vector<std::pair<Node, Node>> edges;
    auto node = [&](int grp, int idx1) { return grp * p.k + idx1 - 1; }; // idx1 in 1..k
    for (int g = 0; g < groups; ++g) {
        for (int a = 1; a <= p.k; ++a) {
            for (int b = a + 1; b <= p.k; ++b) {
                if (a == 1 && b == p.k) continue;
                if (a == 2 && b == p.k - 1) continue;
                edges.emplace_back(node(g, a), node(g, b));
            }
        }
        if (g + 1 < groups) {
            edges.emplace_back(node(g, p.k), node(g + 1, 1));
            edges.emplace_back(node(g, p.k - 1), node(g + 1, 2));
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Color> colors(p.n, 1);
    colors[p.n - 1] = 2;
    return PortLabeledGraph::from_edge_list(p.n, edges, std::move(colors));
}

} // namespace

PortLabeledGraph generate(GraphKind kind, const GenParams& p) {
    if (kind == GraphKind::lower_bound) return gen_lower_bound(p);
    if (p.n <= 0) throw BadParams("n must be positive");
    Rng rng(p.seed * 0x1000193ULL + static_cast<std::uint64_t>(kind) + 1);
    std::vector<std::pair<Node, Node>> edges;
    switch (kind) {
    case GraphKind::path:
        for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
        break;
    case GraphKind::ring:
        if (p.n < 3) throw BadParams("ring needs n >= 3");
        for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(p.n - 1, 0);
        break;
    case GraphKind::tree:
        // random attachment, so depth and branching vary with the seed
        for (int i = 1; i < p.n; ++i) edges.emplace_back(rng.range(0, i - 1), i);
        break;
    case GraphKind::random_connected: {
        for (int i = 1; i < p.n; ++i) edges.emplace_back(rng.range(0, i - 1), i);
        std::set<std::pair<Node, Node>> have;
        for (auto& [u, v] : edges) have.insert(std::minmax(u, v));
        long max_extra = static_cast<long>(p.n) * (p.n - 1) / 2 - (p.n - 1);
        int want = static_cast<int>(std::min<long>(p.extra_edges, max_extra));
        int guard = 0;
        while (want > 0 && guard < 100000) {
            Node u = rng.range(0, p.n - 1);
            Node v = rng.range(0, p.n - 1);
            if (u == v) {
                ++guard;
                continue;
            }
            auto key = std::minmax(u, v);
            if (have.insert(key).second) {
                edges.emplace_back(key.first, key.second);
                --want;
            } else {
                ++guard;
            }
        }
        std::sort(edges.begin(), edges.end());
        break;
    }
    default: break;
    }
    auto colors = seeded_colors(p.n, p.palette, rng);
    return PortLabeledGraph::from_edge_list(p.n, edges, std::move(colors));
}

std::vector<ValidationIssue> validate(const PortLabeledGraph& g) {
    std::vector<ValidationIssue> issues;
    int n = g.node_count();
    for (Node v = 0; v < n; ++v) {
        if (g.color(v) < 1 || g.color(v) > n)
            issues.push_back({"BadColorIndex", v, kNoPort});
        std::set<Node> nbrs;
        for (Port p = 0; p < g.degree(v); ++p) {
            const HalfEdge& he = g.out(v, p);
            if (he.to < 0 || he.to >= n) {
                issues.push_back({"BadNeighbor", v, p});
                continue;
            }
            if (he.to == v) issues.push_back({"SelfLoop", v, p});
            if (!nbrs.insert(he.to).second) issues.push_back({"ParallelEdge", v, p});
            if (he.rev < 0 || he.rev >= g.degree(he.to) || g.out(he.to, he.rev).to != v ||
                g.out(he.to, he.rev).rev != p) {
                issues.push_back({"PortAsymmetry", v, p});
            }
        }
    }
    // connectivity via plain reachability
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<Node> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Node v = stack.back();
            stack.pop_back();
            for (const auto& he : g.incident(v)) {
                if (he.to >= 0 && he.to < n && !seen[he.to]) {
                    seen[he.to] = 1;
                    ++reached;
                    stack.push_back(he.to);
                }
            }
        }
        if (reached != n) issues.push_back({"Disconnected", -1, kNoPort});
    }
    return issues;
}

bool feasible(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots) {
    if (static_cast<int>(robots.size()) > g.node_count())
        throw BadParams("TooManyRobots: k exceeds n");
    std::map<Color, int> have;
    for (Node v = 0; v < g.node_count(); ++v) ++have[g.color(v)];
    std::map<Color, int> want;
    for (const auto& r : robots) ++want[r.color];
    for (const auto& [c, cnt] : want) {
        auto it = have.find(c);
        if (it == have.end() || it->second < cnt) return false;
    }
    return true;
}

std::string serialize(const PortLabeledGraph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
    for (Node v = 0; v < g.node_count(); ++v) out << "color " << v << ' ' << g.color(v) << '\n';
    for (Node v = 0; v < g.node_count(); ++v) {
        for (Port p = 0; p < g.degree(v); ++p) {
            const HalfEdge& he = g.out(v, p);
            if (v < he.to) out << "edge " << v << ' ' << p << ' ' << he.to << ' ' << he.rev << '\n';
        }
    }
    return out.str();
}

PortLabeledGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0, t = 0;
    if (!(in >> n >> m >> t)) throw ParseError("bad header");
    std::vector<Color> colors(n, 0);
    std::vector<std::vector<HalfEdge>> adj(n);
    std::string tag;
    int edges_seen = 0;
    while (in >> tag) {
        if (tag == "color") {
            Node v;
            Color c;
            if (!(in >> v >> c) || v < 0 || v >= n) throw ParseError("bad color record");
            colors[v] = c;
        } else if (tag == "edge") {
            Node u, v;
            Port pu, pv;
            if (!(in >> u >> pu >> v >> pv)) throw ParseError("bad edge record");
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range");
            auto put = [&](Node a, Port pa, Node b, Port pb) {
                if (pa < 0) throw ParseError("negative port");
                if (static_cast<int>(adj[a].size()) <= pa) adj[a].resize(pa + 1);
                if (adj[a][pa].to != -1) throw ParseError("port reused");
                adj[a][pa] = {b, pb};
            };
            put(u, pu, v, pv);
            put(v, pv, u, pu);
            ++edges_seen;
        } else {
            throw ParseError("unknown record tag: " + tag);
        }
    }
    if (edges_seen != m) throw ParseError("edge count mismatch");
    for (Node v = 0; v < n; ++v) {
        if (colors[v] == 0) throw ParseError("missing color for node " + std::to_string(v));
        for (Port p = 0; p < static_cast<int>(adj[v].size()); ++p) {
            if (adj[v][p].to == -1) throw ParseError("port gap at node " + std::to_string(v));
            const HalfEdge& he = adj[v][p];
            if (adj[he.to][he.rev].to != v) throw ParseError("port symmetry broken");
        }
    }
    check_connected(n, adj);
    return PortLabeledGraph(n, std::move(colors), std::move(adj));
}

} // namespace lad
