#pragma once

#include <string>
#include <vector>

namespace dualrail {

/// Undirected weighted coupling between two sites. Site labels are 1-based
/// throughout the public interface, matching the topology file format.
struct Edge {
    int i = 0;
    int j = 0;
    double weight = 0.0;

    bool operator==(const Edge&) const = default;
};

/// Weighted coupling topology with designated sender and receiver sites.
/// Immutable after construction; edges are canonicalized (i < j, sorted)
/// so equal graphs compare and serialize identically.
class CouplingGraph {
public:
    CouplingGraph(int node_count, std::vector<Edge> edges, int sender, int receiver);

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int sender() const { return sender_; }
    int receiver() const { return receiver_; }

    /// True when sites a and b (1-based) lie in one connected component.
    bool connected(int a, int b) const;
    bool sender_receiver_connected() const;

    /// True for a path graph labeled consecutively 1-2-...-N.
    bool is_chain() const { return is_chain_; }

    double min_weight() const;

    std::string serialize() const;
    static CouplingGraph deserialize(const std::string& text);
    void save(const std::string& path) const;
    static CouplingGraph load(const std::string& path);

    bool operator==(const CouplingGraph& other) const;

private:
    int node_count_;
    std::vector<Edge> edges_;
    int sender_;
    int receiver_;
    std::vector<int> component_;  // 0-based component label per site
    bool is_chain_ = false;
};

/// Path graph 1-2-...-N with uniform hopping, sender 1, receiver N.
CouplingGraph build_chain(int node_count, double hop);

/// Validated arbitrary topology.
CouplingGraph build_graph(int node_count, std::vector<Edge> edges, int sender, int receiver);

/// Reference hopping rate for schedule defaults: the smallest edge weight
/// (1 for an edgeless graph).
double reference_hop(const CouplingGraph& graph);

}  // namespace dualrail
