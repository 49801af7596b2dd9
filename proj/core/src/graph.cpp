#include "dualrail/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail {

namespace {

std::string site_pair(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

CouplingGraph::CouplingGraph(int node_count, std::vector<Edge> edges, int sender, int receiver)
    : node_count_(node_count), edges_(std::move(edges)), sender_(sender), receiver_(receiver) {
    if (node_count_ < 1) {
        throw InvalidTopologyError("node count must be at least 1, got " +
                                   std::to_string(node_count_));
    }
    if (sender_ < 1 || sender_ > node_count_ || receiver_ < 1 || receiver_ > node_count_) {
        throw InvalidTopologyError("sender/receiver out of range " +
                                   site_pair(sender_, receiver_));
    }
    if (node_count_ > 1 && sender_ == receiver_) {
        throw InvalidTopologyError("sender and receiver must differ when N > 1");
    }

    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.i < 1 || e.i > node_count_ || e.j < 1 || e.j > node_count_) {
            throw InvalidTopologyError("edge endpoint out of range " + site_pair(e.i, e.j));
        }
        if (e.i == e.j) {
            throw InvalidTopologyError("self-loop at site " + std::to_string(e.i));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw InvalidTopologyError("edge weight must be positive on " + site_pair(e.i, e.j));
        }
        if (e.i > e.j) std::swap(e.i, e.j);
        if (!seen.insert({e.i, e.j}).second) {
            throw InvalidTopologyError("duplicate edge " + site_pair(e.i, e.j));
        }
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });

    // Connected components by repeated relabeling (graphs here are small).
    component_.resize(node_count_);
    for (int k = 0; k < node_count_; ++k) component_[k] = k;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : edges_) {
            const int a = component_[e.i - 1];
            const int b = component_[e.j - 1];
            if (a != b) {
                const int lo = std::min(a, b);
                const int hi = std::max(a, b);
                for (auto& c : component_) {
                    if (c == hi) c = lo;
                }
                changed = true;
            }
        }
    }

    is_chain_ = static_cast<int>(edges_.size()) == node_count_ - 1;
    if (is_chain_) {
        for (int k = 0; k < node_count_ - 1; ++k) {
            if (edges_[k].i != k + 1 || edges_[k].j != k + 2) {
                is_chain_ = false;
                break;
            }
        }
    }
}

bool CouplingGraph::connected(int a, int b) const {
    if (a < 1 || a > node_count_ || b < 1 || b > node_count_) {
        throw InvalidTopologyError("site out of range " + site_pair(a, b));
    }
    return component_[a - 1] == component_[b - 1];
}

bool CouplingGraph::sender_receiver_connected() const {
    return connected(sender_, receiver_);
}

double CouplingGraph::min_weight() const {
    double w = 0.0;
    for (const auto& e : edges_) {
        w = (w == 0.0) ? e.weight : std::min(w, e.weight);
    }
    return w;
}

bool CouplingGraph::operator==(const CouplingGraph& other) const {
    return node_count_ == other.node_count_ && sender_ == other.sender_ &&
           receiver_ == other.receiver_ && edges_ == other.edges_;
}

std::string CouplingGraph::serialize() const {
    std::ostringstream out;
    out << "N = " << node_count_ << "\n";
    out << "sender = " << sender_ << "\n";
    out << "receiver = " << receiver_ << "\n";
    for (const auto& e : edges_) {
        out << "edge = " << e.i << " " << e.j << " " << format_g17(e.weight) << "\n";
    }
    return out.str();
}

CouplingGraph CouplingGraph::deserialize(const std::string& text) {
    int n = -1;
    int sender = -1;
    int receiver = -1;
    std::vector<Edge> edges;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string eq;
        if (!(ls >> eq) || eq != "=") {
            throw InvalidTopologyError("topology line " + std::to_string(line_no) +
                                       ": expected 'key = value'");
        }
        if (key == "N") {
            ls >> n;
        } else if (key == "sender") {
            ls >> sender;
        } else if (key == "receiver") {
            ls >> receiver;
        } else if (key == "edge") {
            Edge e;
            std::string w;
            if (!(ls >> e.i >> e.j >> w)) {
                throw InvalidTopologyError("topology line " + std::to_string(line_no) +
                                           ": edge needs 'i j weight'");
            }
            e.weight = parse_double(w);
            edges.push_back(e);
        } else {
            throw InvalidTopologyError("unknown topology key '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw InvalidTopologyError("trailing tokens on topology line " +
                                       std::to_string(line_no));
        }
    }
    if (n < 1 || sender < 1 || receiver < 1) {
        throw InvalidTopologyError("topology must set N, sender and receiver");
    }
    return CouplingGraph(n, std::move(edges), sender, receiver);
}

void CouplingGraph::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << serialize();
}

CouplingGraph CouplingGraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open topology file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

CouplingGraph build_chain(int node_count, double hop) {
    if (node_count < 1) {
        throw InvalidParameterError("chain length must be at least 1");
    }
    if (!(hop > 0.0) || !std::isfinite(hop)) {
        throw InvalidParameterError("chain hopping must be positive");
    }
    std::vector<Edge> edges;
    edges.reserve(node_count - 1);
    for (int k = 1; k < node_count; ++k) {
        edges.push_back({k, k + 1, hop});
    }
    return CouplingGraph(node_count, std::move(edges), 1, node_count);
}

CouplingGraph build_graph(int node_count, std::vector<Edge> edges, int sender, int receiver) {
    return CouplingGraph(node_count, std::move(edges), sender, receiver);
}

double reference_hop(const CouplingGraph& graph) {
    const double w = graph.min_weight();
    return w > 0.0 ? w : 1.0;
}

}  // namespace dualrail
