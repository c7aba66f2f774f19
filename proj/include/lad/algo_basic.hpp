#pragma once

#include "lad/engine.hpp"

#include <map>

namespace lad {

// Single-state DFS for trees, paths, and rings, any initial configuration,
// k <= n. At a free color-matching node the minimum-id explorer settles;
// everyone else exits via (pent+1) mod degree.
class TreePathRingPolicy : public Policy {
  public:
    struct Shared {
        bool settled = false;
        Color color = 0;
        int id = 0;
    };

    std::string name() const override { return "tpr"; }
    void init(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
              const std::map<int, Node>& initial) override;
    void snapshot() override;
    Decision step(int robot_id, const LocalView& view) override;
    const void* shared(int robot_id) const override;
    bool finished() const override;
    long memory_bits(int robot_id) const override;
    long default_round_limit(const PortLabeledGraph& g) const override {
        return 64L * std::max(1, g.node_count());
    }

  private:
    struct Memory {
        bool settled = false;
        Port pent = kNoPort;
        Color color = 0;
        int id = 0;
    };
    const PortLabeledGraph* g_ = nullptr;
    std::map<int, Memory> mem_;
    std::map<int, Shared> shadow_;
    long id_width_ = 0, color_width_ = 0, port_width_ = 0;
};

// Collective DFS with forward/backtrack phases for rooted k = n on arbitrary
// graphs. Settled robots keep parent and child ports of their node.
class RootedFullPolicy : public Policy {
  public:
    struct Shared {
        bool settled = false;
        bool backtrack = false;
        Color color = 0;
        int id = 0;
        Port pent = kNoPort;
        Port parent = kNoPort; // meaningful when settled
    };

    std::string name() const override { return "rooted_full"; }
    void init(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
              const std::map<int, Node>& initial) override;
    void snapshot() override;
    Decision step(int robot_id, const LocalView& view) override;
    const void* shared(int robot_id) const override;
    bool finished() const override;
    long memory_bits(int robot_id) const override;
    long default_round_limit(const PortLabeledGraph& g) const override {
        return 64L * std::max(1, g.edge_count());
    }


  private:
    struct Memory {
        bool settled = false;
        bool backtrack = false;
        Port pent = kNoPort;
        Port parent = kNoPort;            // settled only
        std::vector<bool> child;          // settled only, bitmask over ports
        Color color = 0;
        int id = 0;
    };
    const PortLabeledGraph* g_ = nullptr;
    std::map<int, Memory> mem_;
    std::map<int, Shared> shadow_;
    long id_width_ = 0, color_width_ = 0, port_width_ = 0;
};

} // namespace lad
