#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace keygraph {

/// Undirected simple graph on nodes 0..n-1, stored as CSR with sorted
/// per-node adjacency. Immutable after construction (see GraphBuilder),
/// so values are safe to share across concurrent readers.
class Graph {
public:
    using Node = std::uint32_t;

    Graph() = default;

    std::uint32_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return adj_.size() / 2; }

    std::size_t degree(Node v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Neighbors of v in ascending order.
    std::span<const Node> neighbors(Node v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(Node u, Node v) const;

    /// Visits every edge once as (u, v) with u < v.
    template <typename Visitor>
    void for_each_edge(Visitor&& visit) const {
        for (Node u = 0; u < n_; ++u) {
            for (Node v : neighbors(u)) {
                if (v > u) visit(u, v);
            }
        }
    }

private:
    friend class GraphBuilder;

    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> offsets_ = {0};
    std::vector<Node> adj_;
};

/// Accumulates edges, then finalizes into an immutable Graph.
/// Rejects self-loops and out-of-range endpoints; duplicate insertions
/// of the same unordered pair collapse to one edge.
class GraphBuilder {
public:
    explicit GraphBuilder(std::uint32_t node_count) : n_(node_count) {}

    GraphBuilder& add_edge(Graph::Node u, Graph::Node v);

    std::uint32_t node_count() const noexcept { return n_; }

    Graph build() &&;

private:
    std::uint32_t n_;
    std::vector<std::uint64_t> packed_;  // (min << 32) | max
};

/// Set of node indices, kept sorted and duplicate-free.
class NodeSet {
public:
    using Node = Graph::Node;

    NodeSet() = default;
    NodeSet(std::initializer_list<Node> nodes) : NodeSet(std::vector<Node>(nodes)) {}
    explicit NodeSet(std::vector<Node> nodes);

    bool contains(Node v) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Node>& members() const noexcept { return members_; }

private:
    std::vector<Node> members_;
};

/// Edge intersection of two graphs on the same node set.
Graph graph_intersection(const Graph& a, const Graph& b);

}  // namespace keygraph
