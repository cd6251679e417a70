#include "keygraph/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "keygraph/errors.hpp"

namespace keygraph {
namespace {

using Node = Graph::Node;

void require_nonempty(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("graph must have at least one node");
}

/// BFS over the subgraph induced by !removed[v]; returns number of
/// reachable nodes from `start`.
std::size_t reachable_count(const Graph& g, Node start, const std::vector<char>& removed,
                            std::vector<Node>& queue) {
    std::vector<char> seen(g.node_count(), 0);
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    std::size_t visited = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Node u = queue[head];
        ++visited;
        for (Node w : g.neighbors(u)) {
            if (!seen[w] && !removed[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return visited;
}

bool induced_subgraph_connected(const Graph& g, const std::vector<char>& removed,
                                std::size_t remaining) {
    if (remaining == 0) throw std::invalid_argument("no nodes remain");
    Node start = 0;
    while (removed[start]) ++start;
    std::vector<Node> queue;
    queue.reserve(remaining);
    return reachable_count(g, start, removed, queue) == remaining;
}

bool is_complete(const Graph& g) {
    const std::uint64_t n = g.node_count();
    return g.edge_count() == n * (n - 1) / 2;
}

/// Iterative articulation-point detection (Hopcroft-Tarjan lowlinks).
/// Assumes g is connected with n >= 3.
bool has_articulation_point(const Graph& g) {
    const std::uint32_t n = g.node_count();
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
    struct Frame {
        Node v;
        Node parent;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;
    std::uint32_t timer = 0;
    std::size_t root_children = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, 0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next_edge < nbrs.size()) {
            const Node w = nbrs[f.next_edge++];
            if (disc[w] == kUnvisited) {
                if (f.v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0});
            } else if (w != f.parent) {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            const Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& up = stack.back();
                low[up.v] = std::min(low[up.v], low[done.v]);
                if (up.v != 0 && low[done.v] >= disc[up.v]) return true;
            }
        }
    }
    return root_children > 1;
}

/// Unit-capacity Dinic on the node-split graph: in(v) = 2v, out(v) = 2v+1,
/// internal arc in->out of capacity 1 and, per undirected edge {a,b}, arcs
/// a_out->b_in and b_out->a_in of capacity 1. Max flow from u_out to v_in
/// equals the number of internally disjoint u-v paths (Menger).
class DisjointPathFlow {
public:
    explicit DisjointPathFlow(const Graph& g) {
        const std::uint32_t n = g.node_count();
        const std::size_t arc_pairs = n + 2 * g.edge_count();
        head_.reserve(arc_pairs * 2);
        next_.reserve(arc_pairs * 2);
        cap_.reserve(arc_pairs * 2);
        first_.assign(2 * static_cast<std::size_t>(n), kNone);
        for (Node v = 0; v < n; ++v) add_arc(in(v), out(v));
        g.for_each_edge([&](Node a, Node b) {
            add_arc(out(a), in(b));
            add_arc(out(b), in(a));
        });
        level_.resize(first_.size());
        iter_.resize(first_.size());
    }

    static std::uint32_t in(Node v) { return 2 * v; }
    static std::uint32_t out(Node v) { return 2 * v + 1; }

    /// Max flow from out(s) to in(t), stopping early once `limit` is
    /// reached. Residual capacities are restored before each call.
    std::size_t max_flow(Node s, Node t, std::size_t limit) {
        if (limit == 0) return 0;
        for (std::size_t a = 0; a < cap_.size(); a += 2) {
            cap_[a] = 1;
            cap_[a + 1] = 0;
        }
        const std::uint32_t source = out(s), sink = in(t);
        std::size_t flow = 0;
        while (flow < limit && build_levels(source, sink)) {
            std::copy(first_.begin(), first_.end(), iter_.begin());
            while (flow < limit && augment(source, sink)) ++flow;
        }
        return flow;
    }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    void add_arc(std::uint32_t from, std::uint32_t to) {
        head_.push_back(to);
        cap_.push_back(1);
        next_.push_back(first_[from]);
        first_[from] = static_cast<std::uint32_t>(head_.size() - 1);
        head_.push_back(from);
        cap_.push_back(0);
        next_.push_back(first_[to]);
        first_[to] = static_cast<std::uint32_t>(head_.size() - 1);
    }

    bool build_levels(std::uint32_t source, std::uint32_t sink) {
        std::fill(level_.begin(), level_.end(), kNone);
        bfs_queue_.clear();
        bfs_queue_.push_back(source);
        level_[source] = 0;
        for (std::size_t h = 0; h < bfs_queue_.size(); ++h) {
            const std::uint32_t v = bfs_queue_[h];
            if (v == sink) return true;
            for (std::uint32_t a = first_[v]; a != kNone; a = next_[a]) {
                if (cap_[a] && level_[head_[a]] == kNone) {
                    level_[head_[a]] = level_[v] + 1;
                    bfs_queue_.push_back(head_[a]);
                }
            }
        }
        return level_[sink] != kNone;
    }

    // One unit of blocking flow via iterative DFS along level arcs.
    bool augment(std::uint32_t source, std::uint32_t sink) {
        path_.clear();
        std::uint32_t v = source;
        while (true) {
            if (v == sink) {
                for (std::uint32_t a : path_) {
                    cap_[a] = 0;
                    cap_[a ^ 1] = 1;
                }
                return true;
            }
            std::uint32_t& a = iter_[v];
            while (a != kNone && !(cap_[a] && level_[head_[a]] == level_[v] + 1)) a = next_[a];
            if (a == kNone) {
                level_[v] = kNone;  // dead end, prune
                if (path_.empty()) return false;
                v = tail_of(path_.back());
                path_.pop_back();
            } else {
                path_.push_back(a);
                v = head_[a];
            }
        }
    }

    std::uint32_t tail_of(std::uint32_t arc) const { return head_[arc ^ 1]; }

    std::vector<std::uint32_t> first_, next_, head_;
    std::vector<std::uint8_t> cap_;
    std::vector<std::uint32_t> level_, iter_, bfs_queue_, path_;
};

/// Minimum local connectivity over the pair set prescribed by the fixed
/// minimum-degree node v: v against every non-neighbor, plus every
/// non-adjacent pair of neighbors of v. Any cut of size < n-1 is found by
/// one of these computations. Stops as soon as a value < `stop_below`
/// is certain.
std::size_t min_cut_via_flows(const Graph& g, std::size_t upper_bound, std::size_t stop_below) {
    const std::uint32_t n = g.node_count();
    Node pivot = 0;
    for (Node v = 1; v < n; ++v) {
        if (g.degree(v) < g.degree(pivot)) pivot = v;
    }
    DisjointPathFlow flow(g);
    std::size_t best = upper_bound;
    for (Node u = 0; u < n && best >= stop_below; ++u) {
        if (u != pivot && !g.has_edge(pivot, u)) {
            best = std::min(best, flow.max_flow(pivot, u, best));
        }
    }
    auto nbrs = g.neighbors(pivot);
    for (std::size_t i = 0; i < nbrs.size() && best >= stop_below; ++i) {
        for (std::size_t j = i + 1; j < nbrs.size() && best >= stop_below; ++j) {
            if (!g.has_edge(nbrs[i], nbrs[j])) {
                best = std::min(best, flow.max_flow(nbrs[i], nbrs[j], best));
            }
        }
    }
    return best;
}

}  // namespace

std::size_t min_degree(const Graph& g) {
    require_nonempty(g);
    std::size_t best = g.degree(0);
    for (Node v = 1; v < g.node_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) {
    require_nonempty(g);
    std::vector<char> removed(g.node_count(), 0);
    return induced_subgraph_connected(g, removed, g.node_count());
}

std::size_t vertex_connectivity(const Graph& g) {
    require_nonempty(g);
    const std::uint32_t n = g.node_count();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    return min_cut_via_flows(g, min_degree(g), 1);
}

bool is_k_connected(const Graph& g, std::size_t k) {
    require_nonempty(g);
    if (k == 0) throw std::invalid_argument("k must be positive");
    const std::uint32_t n = g.node_count();
    if (min_degree(g) < k) return false;
    if (k == 1) return is_connected(g);
    if (static_cast<std::size_t>(n) <= k) return false;  // kappa <= n-1 < k
    if (!is_connected(g)) return false;
    if (k == 2) return !has_articulation_point(g);
    if (is_complete(g)) return true;  // n - 1 >= k given n > k
    return min_cut_via_flows(g, min_degree(g), k) >= k;
}

std::size_t count_disjoint_paths(const Graph& g, Node u, Node v) {
    require_nonempty(g);
    if (u == v) throw std::invalid_argument("count_disjoint_paths: endpoints must differ");
    if (u >= g.node_count() || v >= g.node_count())
        throw std::invalid_argument("count_disjoint_paths: node out of range");
    DisjointPathFlow flow(g);
    return flow.max_flow(u, v, g.node_count());
}

bool survives_removal(const Graph& g, const NodeSet& removed) {
    require_nonempty(g);
    for (Node v : removed.members()) {
        if (v >= g.node_count()) throw std::invalid_argument("survives_removal: node out of range");
    }
    const std::size_t remaining = g.node_count() - removed.size();
    if (remaining == 0) throw std::invalid_argument("survives_removal: cannot remove every node");
    std::vector<char> mask(g.node_count(), 0);
    for (Node v : removed.members()) mask[v] = 1;
    return induced_subgraph_connected(g, mask, remaining);
}

std::size_t brute_force_vertex_connectivity(const Graph& g) {
    require_nonempty(g);
    const std::uint32_t n = g.node_count();
    if (n > kBruteForceNodeBudget)
        throw BudgetExceededError("brute_force_vertex_connectivity", n, kBruteForceNodeBudget);

    // Smallest deletion set that disconnects the rest, by subset size.
    // No subset of size <= n-2 works => complete graph, kappa = n-1.
    std::vector<char> mask(n, 0);
    for (std::uint32_t size = 0; size + 2 <= n; ++size) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            if (static_cast<std::uint32_t>(__builtin_popcount(bits)) != size) continue;
            for (std::uint32_t v = 0; v < n; ++v) mask[v] = (bits >> v) & 1u;
            if (!induced_subgraph_connected(g, mask, n - size)) return size;
        }
    }
    return n - 1;
}

}  // namespace keygraph
