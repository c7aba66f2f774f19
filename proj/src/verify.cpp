#include "lad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lad {

LadVerdict check_lad(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
                     const std::map<int, Node>& placement) {
    LadVerdict verdict;
    std::map<Node, int> occupant;
    for (const auto& r : robots) {
        auto it = placement.find(r.id);
        if (it == placement.end()) {
            verdict.violations.push_back({"unplaced robot", r.id, -1});
            continue;
        }
        Node v = it->second;
        if (v < 0 || v >= g.node_count()) {
            verdict.violations.push_back({"off-graph placement", r.id, v});
            continue;
        }
        auto [pos, fresh] = occupant.emplace(v, r.id);
        if (!fresh) {
            verdict.violations.push_back(
                {"collision with robot " + std::to_string(pos->second), r.id, v});
        }
        if (g.color(v) != r.color) {
            verdict.violations.push_back({"color mismatch: robot color " +
                                              std::to_string(r.color) + " on node color " +
                                              std::to_string(g.color(v)),
                                          r.id, v});
        }
    }
    verdict.solved = verdict.violations.empty();
    return verdict;
}

namespace {

bool witness_search(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots, size_t i,
                    std::set<Node>& used, std::map<int, Node>& out) {
    if (i == robots.size()) return true;
    for (Node v = 0; v < g.node_count(); ++v) {
        if (used.count(v) || g.color(v) != robots[i].color) continue;
        used.insert(v);
        out[robots[i].id] = v;
        if (witness_search(g, robots, i + 1, used, out)) return true;
        used.erase(v);
        out.erase(robots[i].id);
    }
    return false;
}

} // namespace

std::optional<std::map<int, Node>> oracle_assignment(const PortLabeledGraph& g,
                                                     const std::vector<RobotSpec>& robots) {
    if (robots.size() > static_cast<size_t>(g.node_count())) return std::nullopt;
    if (g.node_count() <= 12) {
        std::set<Node> used;
        std::map<int, Node> out;
        if (witness_search(g, robots, 0, used, out)) return out;
        return std::nullopt;
    }
    // counting suffices: same-color nodes are interchangeable
    if (!feasible(g, robots)) return std::nullopt;
    std::map<Color, std::vector<Node>> pool;
    for (Node v = 0; v < g.node_count(); ++v) pool[g.color(v)].push_back(v);
    std::map<int, Node> out;
    for (const auto& r : robots) {
        auto& nodes = pool[r.color];
        out[r.id] = nodes.back();
        nodes.pop_back();
    }
    return out;
}

BoundKind bound_kind_from_string(const std::string& s) {
    if (s == "tpr") return BoundKind::tpr;
    if (s == "rooted_kn") return BoundKind::rooted_kn;
    if (s == "rooted_known") return BoundKind::rooted_known;
    if (s == "rooted_unknown") return BoundKind::rooted_unknown;
    if (s == "general") return BoundKind::general;
    if (s == "dispersed_kn") return BoundKind::dispersed_kn;
    throw BadParams("unknown bound kind: " + s);
}

std::string to_string(BoundKind k) {
    switch (k) {
    case BoundKind::tpr: return "tpr";
    case BoundKind::rooted_kn: return "rooted_kn";
    case BoundKind::rooted_known: return "rooted_known";
    case BoundKind::rooted_unknown: return "rooted_unknown";
    case BoundKind::general: return "general";
    case BoundKind::dispersed_kn: return "dispersed_kn";
    }
    return "?";
}

namespace {

double guarded_log2(double x) { return std::log2(std::max(x, 2.0)); }
double ceil_div(long a, long b) { return static_cast<double>((a + b - 1) / std::max(b, 1L)); }

} // namespace

double round_bound_formula(BoundKind kind, const BoundParams& p) {
    double nk = std::max(1.0, ceil_div(p.n, p.k));
    double m = std::max<double>(1, p.m);
    switch (kind) {
    case BoundKind::tpr: return std::max<double>(1, p.n);
    case BoundKind::rooted_kn: return m;
    case BoundKind::rooted_known: return nk * m;
    case BoundKind::rooted_unknown:
        return std::log2(static_cast<double>(p.n) / std::max(1.0, static_cast<double>(p.k)) +
                         1.0) *
               nk * m;
    case BoundKind::general: return nk * m;
    case BoundKind::dispersed_kn: return guarded_log2(static_cast<double>(p.k)) + nk * m;
    }
    return 1;
}

double memory_bound_formula(BoundKind kind, const BoundParams& p) {
    double logkd = guarded_log2(static_cast<double>(p.k + p.max_degree));
    double nk = std::max(1.0, ceil_div(p.n, p.k));
    switch (kind) {
    case BoundKind::tpr: return logkd;
    case BoundKind::rooted_kn: return logkd; // child bitmask excess documented separately
    case BoundKind::rooted_known:
    case BoundKind::rooted_unknown:
    case BoundKind::general:
    case BoundKind::dispersed_kn: return nk * logkd;
    }
    return 1;
}

BoundCheck check_bound(const RoundStats& stats, BoundKind kind, const BoundParams& p,
                       double budget) {
    BoundCheck out;
    out.round_formula = round_bound_formula(kind, p);
    out.memory_formula = memory_bound_formula(kind, p);
    out.round_ratio = static_cast<double>(stats.rounds) / out.round_formula;
    out.memory_ratio = static_cast<double>(stats.peak_bits) / out.memory_formula;
    out.pass = out.round_ratio <= budget && out.memory_ratio <= budget;
    return out;
}

} // namespace lad
