#pragma once

#include <map>
#include <string>
#include <vector>

#include "ripsnet/deploy.hpp"

namespace ripsnet {

/**
 * Broadcast and memory accounting for one protocol run. The unit is the
 * memory word: one node id or one scalar. A broadcast of k words costs k
 * regardless of neighbor count (one transmission reaches all neighbors).
 */
struct RoundTrace {
    std::string protocol;
    int rounds = 0;
    std::map<NodeId, long> words_broadcast;
    std::map<NodeId, long> peak_table_words;

    void count_broadcast(NodeId from, long words) {
        words_broadcast[from] += words;
    }
    void note_table_size(NodeId at, long words) {
        auto& peak = peak_table_words[at];
        peak = std::max(peak, words);
    }
    long total_words() const {
        long t = 0;
        for (const auto& [v, w] : words_broadcast) t += w;
        return t;
    }
    void merge_from(const RoundTrace& other) {
        rounds += other.rounds;
        for (const auto& [v, w] : other.words_broadcast)
            words_broadcast[v] += w;
        for (const auto& [v, w] : other.peak_table_words)
            note_table_size(v, w);
    }
    long peak_words() const {
        long p = 0;
        for (const auto& [v, w] : peak_table_words) p = std::max(p, w);
        return p;
    }
};

/**
 * Synchronous lock-step message fabric over the subgraph induced on a
 * partition. Every message queued in round t is delivered to all of the
 * sender's neighbors at round t+1; inboxes list messages sorted by sender
 * id, so runs are deterministic.
 */
template <class Msg>
class SyncNet {
  public:
    SyncNet(const CommGraph& g, std::vector<NodeId> nodes)
        : g_(g), nodes_(std::move(nodes)), in_(g.n, 0) {
        if (nodes_.empty())
            for (NodeId v = 0; v < g.n; ++v) nodes_.push_back(v);
        for (NodeId v : nodes_) in_.at(v) = 1;
        outbox_.resize(g.n);
        inbox_.resize(g.n);
    }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    bool contains(NodeId v) const { return v >= 0 && v < g_.n && in_[v]; }
    int round() const { return round_; }

    /// Queue a broadcast for delivery next round.
    void send(NodeId from, Msg m) { outbox_[from].push_back(std::move(m)); }

    /**
     * Deliver everything queued last round and advance the clock. Returns
     * false once the fabric is silent, which ends the protocol.
     */
    bool deliver() {
        bool any = false;
        for (NodeId v : nodes_) inbox_[v].clear();
        for (NodeId from : nodes_) {  // ascending: inboxes sorted by sender
            if (outbox_[from].empty()) continue;
            any = true;
            for (NodeId to : g_.adj[from]) {
                if (!in_[to]) continue;
                for (const Msg& m : outbox_[from]) inbox_[to].emplace_back(from, m);
            }
            outbox_[from].clear();
        }
        if (any) ++round_;
        return any;
    }

    const std::vector<std::pair<NodeId, Msg>>& inbox(NodeId v) const {
        return inbox_[v];
    }

  private:
    const CommGraph& g_;
    std::vector<NodeId> nodes_;
    std::vector<char> in_;
    std::vector<std::vector<Msg>> outbox_;
    std::vector<std::vector<std::pair<NodeId, Msg>>> inbox_;
    int round_ = 0;
};

}  // namespace ripsnet
