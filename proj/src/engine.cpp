#include "lad/engine.hpp"

#include <algorithm>
#include <sstream>

namespace lad {

std::string to_string(EventKind k) {
    switch (k) {
    case EventKind::moved: return "moved";
    case EventKind::settled: return "settled";
    case EventKind::state_change: return "state_change";
    case EventKind::merged: return "merged";
    case EventKind::detected_done: return "detected_done";
    case EventKind::error: return "error";
    }
    return "?";
}

std::string to_string(RunStatus s) {
    switch (s) {
    case RunStatus::solved: return "solved";
    case RunStatus::unsolved: return "unsolved";
    case RunStatus::round_limit: return "round_limit";
    case RunStatus::infeasible: return "infeasible";
    case RunStatus::policy_violation: return "policy_violation";
    }
    return "?";
}

std::string format_trace_line(const TraceEvent& e) {
    std::ostringstream out;
    out << e.round << ' ' << e.robot << ' ' << e.node << ' ' << to_string(e.kind);
    if (!e.detail.empty()) out << ' ' << e.detail;
    return out.str();
}

bool LocalView::collocated(int robot_id) const {
    return std::binary_search(peers_.begin(), peers_.end(), robot_id);
}

const void* LocalView::peer(int robot_id) const {
    if (!collocated(robot_id)) {
        engine_->flag_violation("robot " + std::to_string(self_) + " read non-collocated robot " +
                                std::to_string(robot_id));
        return nullptr;
    }
    return engine_->policy_->shared(robot_id);
}

void LocalView::emit(EventKind kind, std::string detail) const {
    engine_->trace_->push_back({round_, self_, node_, kind, std::move(detail)});
}

void Engine::flag_violation(const std::string& what) {
    violation_ = true;
    if (violation_what_.empty()) violation_what_ = what;
}

RunResult Engine::run(Policy& policy, const PortLabeledGraph& g,
                      const std::map<int, Node>& initial, const std::vector<RobotSpec>& robots,
                      long round_limit) {
    RunResult result;
    if (round_limit <= 0) throw BadParams("round_limit must be positive");
    for (const auto& [id, node] : initial) {
        if (node < 0 || node >= g.node_count())
            throw BadParams("initial placement off the graph for robot " + std::to_string(id));
    }
    if (initial.size() != robots.size()) throw BadParams("placement must cover every robot");
    if (!feasible(g, robots)) {
        result.stats.status = RunStatus::infeasible;
        result.stats.error = "InfeasibleInstance: some color class lacks nodes";
        return result;
    }

    g_ = &g;
    policy_ = &policy;
    trace_ = &result.trace;
    positions_ = initial;
    violation_ = false;
    violation_what_.clear();

    policy.init(g, robots, initial);
    for (const auto& r : robots) {
        result.stats.peak_bits_per_robot[r.id] =
            std::max(result.stats.peak_bits_per_robot[r.id], policy.memory_bits(r.id));
    }

    for (round_ = 1; round_ <= round_limit; ++round_) {
        // Communicate: freeze shared state and collocation before any Compute.
        policy.snapshot();
        std::map<Node, std::vector<int>> at_node;
        for (const auto& [id, node] : positions_) at_node[node].push_back(id);

        std::map<int, Decision> decisions;
        for (const auto& [id, node] : positions_) {
            LocalView view;
            view.engine_ = this;
            view.self_ = id;
            view.node_ = node;
            view.color_ = g.color(node);
            view.degree_ = g.degree(node);
            view.round_ = round_;
            view.peers_ = at_node[node]; // ascending: map iteration inserted in id order
            current_robot_ = id;
            current_node_ = node;
            Decision d = policy.step(id, view);
            if (d.move && (d.port < 0 || d.port >= g.degree(node))) {
                violation_ = true;
                violation_what_ = "robot " + std::to_string(id) + " exited via invalid port " +
                                  std::to_string(d.port) + " at node " + std::to_string(node);
            }
            decisions[id] = d;
            if (violation_) break;
        }
        if (violation_) {
            result.trace.push_back({round_, current_robot_, current_node_, EventKind::error,
                                    "PolicyViolation: " + violation_what_});
            result.stats.status = RunStatus::policy_violation;
            result.stats.error = violation_what_;
            result.stats.rounds = round_;
            result.final_config = {round_, positions_};
            return result;
        }

        // Move: all at once.
        for (const auto& [id, d] : decisions) {
            if (!d.move) continue;
            Node from = positions_[id];
            Node to = g.out(from, d.port).to;
            positions_[id] = to;
            result.trace.push_back(
                {round_, id, to, EventKind::moved, "port=" + std::to_string(d.port) +
                                                       " from=" + std::to_string(from)});
        }

        result.stats.phase_rounds[policy.phase()] += 1;
        for (auto& [id, peak] : result.stats.peak_bits_per_robot)
            peak = std::max(peak, policy.memory_bits(id));

        if (policy.finished()) {
            result.stats.rounds = round_;
            result.stats.status = RunStatus::unsolved; // verifier upgrades to solved
            result.final_config = {round_, positions_};
            for (const auto& [id, peak] : result.stats.peak_bits_per_robot)
                result.stats.peak_bits = std::max(result.stats.peak_bits, peak);
            return result;
        }
    }

    result.stats.status = RunStatus::round_limit;
    result.stats.error = "RoundLimitExceeded after " + std::to_string(round_limit) + " rounds";
    result.stats.rounds = round_limit;
    result.final_config = {round_limit, positions_};
    for (const auto& [id, peak] : result.stats.peak_bits_per_robot)
        result.stats.peak_bits = std::max(result.stats.peak_bits, peak);
    return result;
}

std::string serialize_trace(const std::vector<TraceEvent>& trace) {
    std::string out;
    for (const auto& e : trace) {
        out += format_trace_line(e);
        out += '\n';
    }
    return out;
}

std::uint64_t trace_hash(const std::vector<TraceEvent>& trace) {
    // FNV-1a over the serialized text
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : serialize_trace(trace)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace lad
