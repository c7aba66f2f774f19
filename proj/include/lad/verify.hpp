#pragma once

#include "lad/engine.hpp"
#include "lad/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lad {

struct LadViolation {
    std::string what;
    int robot = 0;
    Node node = -1;
};

struct LadVerdict {
    bool solved = false;
    std::vector<LadViolation> violations;
};

// Solved iff the placement is injective and every robot sits on a node of its
// own color.
LadVerdict check_lad(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
                     const std::map<int, Node>& placement);

// Exhaustive witness search for small instances; per-color counting beyond.
// Returns a placement when one exists.
std::optional<std::map<int, Node>> oracle_assignment(const PortLabeledGraph& g,
                                                     const std::vector<RobotSpec>& robots);

enum class BoundKind { tpr, rooted_kn, rooted_known, rooted_unknown, general, dispersed_kn };

BoundKind bound_kind_from_string(const std::string& s);
std::string to_string(BoundKind k);

struct BoundParams {
    long n = 0;
    long k = 0;
    long m = 0;
    long max_degree = 0;
};

struct BoundCheck {
    bool pass = false;
    double round_ratio = 0;  // rounds / time formula
    double memory_ratio = 0; // peak bits / memory formula
    double round_formula = 0;
    double memory_formula = 0;
};

// Formula denominators use ceil(n/k) and log2 with max(.,1) guards.
double round_bound_formula(BoundKind kind, const BoundParams& p);
double memory_bound_formula(BoundKind kind, const BoundParams& p);

BoundCheck check_bound(const RoundStats& stats, BoundKind kind, const BoundParams& p,
                       double budget);

} // namespace lad
