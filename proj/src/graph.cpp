#include "keygraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace keygraph {

bool Graph::has_edge(Node u, Node v) const {
    if (u == v) return false;
    // Search the smaller adjacency list.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

GraphBuilder& GraphBuilder::add_edge(Graph::Node u, Graph::Node v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("graph edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph self-loops are not allowed");
    if (u > v) std::swap(u, v);
    packed_.push_back((static_cast<std::uint64_t>(u) << 32) | v);
    return *this;
}

Graph GraphBuilder::build() && {
    std::sort(packed_.begin(), packed_.end());
    packed_.erase(std::unique(packed_.begin(), packed_.end()), packed_.end());

    Graph g;
    g.n_ = n_;
    g.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::uint64_t e : packed_) {
        ++g.offsets_[(e >> 32) + 1];
        ++g.offsets_[(e & 0xffffffffULL) + 1];
    }
    for (std::uint32_t v = 0; v < n_; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adj_.resize(packed_.size() * 2);
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::uint64_t e : packed_) {
        const auto u = static_cast<Graph::Node>(e >> 32);
        const auto v = static_cast<Graph::Node>(e & 0xffffffffULL);
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Sorted insertion order of packed edges keeps each list sorted for the
    // forward direction only; repair the reverse direction.
    for (std::uint32_t v = 0; v < n_; ++v) {
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    }
    packed_.clear();
    return g;
}

NodeSet::NodeSet(std::vector<Node> nodes) : members_(std::move(nodes)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(Node v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph graph_intersection(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count())
        throw std::invalid_argument("graph_intersection: node counts differ");
    GraphBuilder builder(a.node_count());
    const Graph& small = a.edge_count() <= b.edge_count() ? a : b;
    const Graph& large = a.edge_count() <= b.edge_count() ? b : a;
    small.for_each_edge([&](Graph::Node u, Graph::Node v) {
        if (large.has_edge(u, v)) builder.add_edge(u, v);
    });
    return std::move(builder).build();
}

}  // namespace keygraph
