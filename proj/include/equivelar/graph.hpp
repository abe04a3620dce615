#ifndef EQUIVELAR_GRAPH_HPP
#define EQUIVELAR_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace equivelar {

/// Finite simple undirected graph with explicitly listed nodes.
///
/// Nodes are arbitrary integer ids (kept sorted); edges are stored as sorted
/// pairs (a < b) without repetition.
class Graph {
public:
    using Node = std::uint32_t;
    using Edge = std::pair<Node, Node>;

    Graph() = default;

    Graph(std::vector<Node> nodes, std::vector<Edge> edges)
        : nodes_(std::move(nodes)), edges_(std::move(edges))
    {
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        for (auto& e : edges_) {
            if (e.first > e.second) std::swap(e.first, e.second);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(Node a, Node b) const
    {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
    }

    /// Position of a node in nodes(), or node_count() when absent.
    std::size_t index_of(Node n) const
    {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
        if (it == nodes_.end() || *it != n) return nodes_.size();
        return static_cast<std::size_t>(it - nodes_.begin());
    }

    /// Adjacency lists indexed by node position.
    std::vector<std::vector<std::size_t>> adjacency() const
    {
        std::vector<std::vector<std::size_t>> adj(nodes_.size());
        for (const auto& [a, b] : edges_) {
            const auto ia = index_of(a);
            const auto ib = index_of(b);
            adj[ia].push_back(ib);
            adj[ib].push_back(ia);
        }
        return adj;
    }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> deg(nodes_.size(), 0);
        for (const auto& [a, b] : edges_) {
            ++deg[index_of(a)];
            ++deg[index_of(b)];
        }
        return deg;
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

/// Connected in the usual sense. The empty graph is not connected.
inline bool is_connected(const Graph& g)
{
    if (g.node_count() == 0) return false;
    const auto adj = g.adjacency();
    std::vector<char> seen(g.node_count(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto cur = stack.back();
        stack.pop_back();
        for (auto nb : adj[cur]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                ++reached;
                stack.push_back(nb);
            }
        }
    }
    return reached == g.node_count();
}

/// True iff the graph is a single cycle: connected, every node of degree 2.
inline bool is_single_cycle(const Graph& g)
{
    if (g.node_count() < 3) return false;
    for (auto d : g.degrees()) {
        if (d != 2) return false;
    }
    return is_connected(g);
}

} // namespace equivelar

#endif // EQUIVELAR_GRAPH_HPP
