#pragma once

#include "lad/graph.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lad {

enum class EventKind { moved, settled, state_change, merged, detected_done, error };

std::string to_string(EventKind k);

struct TraceEvent {
    long round = 0;
    int robot = 0;
    Node node = -1;
    EventKind kind = EventKind::moved;
    std::string detail;
};

std::string format_trace_line(const TraceEvent& e);

enum class RunStatus { solved, unsolved, round_limit, infeasible, policy_violation };

std::string to_string(RunStatus s);

struct RoundStats {
    RunStatus status = RunStatus::unsolved;
    long rounds = 0;
    long peak_bits = 0;                      // max over robots
    std::map<int, long> peak_bits_per_robot; // robot id -> bits
    std::map<std::string, long> phase_rounds;
    bool solved = false;
    std::string error;
};

struct Configuration {
    long round = 0;
    std::map<int, Node> placement;
};

struct RunResult {
    Configuration final_config;
    std::vector<TraceEvent> trace;
    RoundStats stats;
};

struct Decision {
    bool move = false;
    Port port = kNoPort;

    static Decision stay() { return {false, kNoPort}; }
    static Decision exit(Port p) { return {true, p}; }
};

class Engine;

// Everything a robot may legally observe in one Communicate phase: its own
// node's color/degree, the current round, and the collocated robots. Any peer
// lookup outside the collocated set trips the violation flag.
class LocalView {
  public:
    Node node() const { return node_; }
    Color node_color() const { return color_; }
    int degree() const { return degree_; }
    long round() const { return round_; }

    const std::vector<int>& collocated_ids() const { return peers_; } // ascending
    bool collocated(int robot_id) const;

    // Policy-defined shared state of a collocated robot; flags a violation
    // and returns nullptr when the robot is elsewhere.
    const void* peer(int robot_id) const;

    void emit(EventKind kind, std::string detail) const;

  private:
    friend class Engine;
    Engine* engine_ = nullptr;
    int self_ = 0;
    Node node_ = -1;
    Color color_ = 0;
    int degree_ = 0;
    long round_ = 0;
    std::vector<int> peers_;
};

class Policy {
  public:
    virtual ~Policy() = default;

    virtual std::string name() const = 0;

    virtual void init(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
                      const std::map<int, Node>& initial) = 0;

    // Copy the state peers may read this round; called once per round before
    // any step so Compute never observes same-round writes.
    virtual void snapshot() = 0;

    virtual Decision step(int robot_id, const LocalView& view) = 0;

    // Shared state as of the last snapshot().
    virtual const void* shared(int robot_id) const = 0;

    virtual bool finished() const = 0;

    virtual long memory_bits(int robot_id) const = 0;

    // Label for per-phase round accounting.
    virtual std::string phase() const { return "run"; }

    // Default per-policy round limit scale; run() multiplies the instance
    // bound formula elsewhere, this is only a fallback.
    virtual long default_round_limit(const PortLabeledGraph& g) const {
        return 64L * g.node_count() * std::max(1, g.edge_count());
    }
};

class Engine {
  public:
    RunResult run(Policy& policy, const PortLabeledGraph& g, const std::map<int, Node>& initial,
                  const std::vector<RobotSpec>& robots, long round_limit);

  private:
    friend class LocalView;
    void flag_violation(const std::string& what);

    const PortLabeledGraph* g_ = nullptr;
    Policy* policy_ = nullptr;
    std::vector<TraceEvent>* trace_ = nullptr;
    long round_ = 0;
    int current_robot_ = 0;
    Node current_node_ = -1;
    bool violation_ = false;
    std::string violation_what_;
    std::map<int, Node> positions_;
};

std::string serialize_trace(const std::vector<TraceEvent>& trace);
std::uint64_t trace_hash(const std::vector<TraceEvent>& trace);

} // namespace lad
