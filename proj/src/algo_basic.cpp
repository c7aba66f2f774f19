#include "lad/algo_basic.hpp"

#include "lad/bits.hpp"

namespace lad {

void TreePathRingPolicy::init(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
                              const std::map<int, Node>&) {
    g_ = &g;
    mem_.clear();
    shadow_.clear();
    int max_id = 1;
    for (const auto& r : robots) {
        mem_[r.id] = Memory{false, kNoPort, r.color, r.id};
        max_id = std::max(max_id, r.id);
    }
    id_width_ = bits_for_values(max_id);
    color_width_ = bits_for_values(g.color_count());
    port_width_ = port_bits(g.max_degree());
}

void TreePathRingPolicy::snapshot() {
    for (const auto& [id, m] : mem_) shadow_[id] = Shared{m.settled, m.color, m.id};
}

const void* TreePathRingPolicy::shared(int robot_id) const { return &shadow_.at(robot_id); }

Decision TreePathRingPolicy::step(int robot_id, const LocalView& view) {
    Memory& me = mem_[robot_id];
    if (me.settled) return Decision::stay();

    bool occupied = false;
    int min_match = -1;
    for (int id : view.collocated_ids()) {
        const auto* peer = static_cast<const Shared*>(view.peer(id));
        if (peer->settled) occupied = true;
        if (!peer->settled && peer->color == view.node_color())
            min_match = (min_match < 0) ? id : std::min(min_match, id);
    }
    if (!occupied && me.color == view.node_color() && min_match == robot_id) {
        me.settled = true;
        view.emit(EventKind::settled, "color=" + std::to_string(me.color));
        return Decision::stay();
    }
    Port p = static_cast<Port>((me.pent + 1) % view.degree());
    me.pent = g_->out(view.node(), p).rev;
    return Decision::exit(p);
}

bool TreePathRingPolicy::finished() const {
    for (const auto& [id, m] : mem_)
        if (!m.settled) return false;
    return true;
}

long TreePathRingPolicy::memory_bits(int) const {
    // state tag, color, entry port, own id
    return 1 + color_width_ + port_width_ + id_width_;
}

void RootedFullPolicy::init(const PortLabeledGraph& g, const std::vector<RobotSpec>& robots,
                            const std::map<int, Node>&) {
    g_ = &g;
    mem_.clear();
    shadow_.clear();
    int max_id = 1;
    for (const auto& r : robots) {
        mem_[r.id] = Memory{};
        mem_[r.id].color = r.color;
        mem_[r.id].id = r.id;
        max_id = std::max(max_id, r.id);
    }
    id_width_ = bits_for_values(max_id);
    color_width_ = bits_for_values(g.color_count());
    port_width_ = port_bits(g.max_degree());
}

void RootedFullPolicy::snapshot() {
    for (const auto& [id, m] : mem_)
        shadow_[id] = Shared{m.settled, m.backtrack, m.color, m.id, m.pent, m.parent};
}

const void* RootedFullPolicy::shared(int robot_id) const { return &shadow_.at(robot_id); }

Decision RootedFullPolicy::step(int robot_id, const LocalView& view) {
    Memory& me = mem_[robot_id];
    Node v = view.node();
    int deg = view.degree();

    auto depart = [&](Port p, bool backtrack) {
        me.backtrack = backtrack;
        me.pent = g_->out(v, p).rev;
        return Decision::exit(p);
    };

    // Settled robots never move; they keep child ports current by mirroring
    // the cohort's exit computation from the same snapshot.
    const Shared* resident = nullptr;
    for (int id : view.collocated_ids()) {
        const auto* peer = static_cast<const Shared*>(view.peer(id));
        if (peer->settled) resident = peer;
    }

    if (me.settled) {
        // Mirror the cohort's exit computation from the snapshot: a backtrack
        // arrival continuing through a non-parent port opens a child edge.
        for (int id : view.collocated_ids()) {
            if (id == robot_id) continue;
            const auto* peer = static_cast<const Shared*>(view.peer(id));
            if (peer->settled) continue;
            if (peer->backtrack) {
                Port q = static_cast<Port>((peer->pent + 1) % deg);
                if (q != me.parent) me.child[q] = true;
            }
            break; // explorers at one node share pent and phase
        }
        return Decision::stay();
    }

    if (!me.backtrack) {
        if (resident == nullptr) {
            // fresh node: minimum-id matching explorer settles
            int min_match = -1;
            for (int id : view.collocated_ids()) {
                const auto* peer = static_cast<const Shared*>(view.peer(id));
                if (!peer->settled && peer->color == view.node_color())
                    min_match = (min_match < 0) ? id : std::min(min_match, id);
            }
            if (min_match == robot_id) {
                me.settled = true;
                me.parent = me.pent;
                me.child.assign(deg, false);
                // peers leaving this same round open the first child edge
                if (view.collocated_ids().size() > 1 && deg > 1) {
                    Port q = static_cast<Port>((me.pent + 1) % deg);
                    me.child[q] = true;
                }
                view.emit(EventKind::settled, "parent=" + std::to_string(me.parent));
                return Decision::stay();
            }
            Port q = static_cast<Port>((me.pent + 1) % deg);
            return depart(q, q == me.pent);
        }
        // forward into a visited node: bounce back the way we came
        return depart(me.pent, true);
    }

    // backtrack arrival: continue the port sweep, flipping forward when the
    // next port is not the parent edge of v
    Port q = static_cast<Port>((me.pent + 1) % deg);
    bool forward = (q != resident->parent);
    return depart(q, !forward);
}

bool RootedFullPolicy::finished() const {
    for (const auto& [id, m] : mem_)
        if (!m.settled) return false;
    return true;
}

long RootedFullPolicy::memory_bits(int robot_id) const {
    const Memory& m = mem_.at(robot_id);
    BitMeter meter;
    meter.add_flag(); // state
    meter.add_flag(); // phase
    meter.add_bits(color_width_);
    meter.add_bits(id_width_);
    meter.add_bits(port_width_); // pent
    if (m.settled) {
        meter.add_bits(port_width_);                         // parent
        meter.add_bits(static_cast<long>(m.child.size()));   // child bitmask, full width
    }
    return meter.total();
}

} // namespace lad
