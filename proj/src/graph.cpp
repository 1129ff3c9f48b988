#include "treespec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "treespec/error.hpp"
#include "treespec/rng.hpp"

namespace treespec {

Graph Graph::from_edge_list(int order, const std::vector<std::pair<int, int>>& pairs) {
    if (order < 1) throw Error(ErrorKind::InvalidOrder, "graph order must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw Error(ErrorKind::VertexOutOfRange, "edge endpoint outside [0, order)");
        if (a == b) throw Error(ErrorKind::LoopEdge, "loop edges are not allowed");
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorKind::DuplicateEdge, "duplicate edge in input");
    return Graph(order, std::move(edges));
}

Graph Graph::edgeless(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidOrder, "order must be non-negative");
    return Graph(order, {});
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<std::vector<int>> Graph::incidence_lists() const {
    std::vector<std::vector<int>> lists(static_cast<size_t>(order_));
    for (int j = 0; j < edge_count(); ++j) {
        lists[static_cast<size_t>(edges_[static_cast<size_t>(j)].u)].push_back(j);
        lists[static_cast<size_t>(edges_[static_cast<size_t>(j)].v)].push_back(j);
    }
    return lists;
}

Orientation default_orientation(const Graph& g) {
    return Orientation{std::vector<bool>(static_cast<size_t>(g.edge_count()), true)};
}

Orientation random_orientation(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<bool> forward(static_cast<size_t>(g.edge_count()));
    for (size_t i = 0; i < forward.size(); ++i) forward[i] = rng.below(2) == 1;
    return Orientation{std::move(forward)};
}

Graph line_graph(const Graph& g) {
    const int e = g.edge_count();
    if (e == 0) return Graph::edgeless(0);
    std::vector<std::pair<int, int>> pairs;
    // Two distinct edges of a simple graph share at most one endpoint, so
    // collecting incident pairs per vertex yields each line-graph edge once.
    for (const auto& incident : g.incidence_lists()) {
        for (size_t a = 0; a < incident.size(); ++a)
            for (size_t b = a + 1; b < incident.size(); ++b)
                pairs.emplace_back(incident[a], incident[b]);
    }
    return Graph::from_edge_list(e, pairs);
}

IntMatrix incidence_unoriented(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorKind::EmptyEdgeSet, "incidence matrix needs edges");
    IntMatrix x(g.order(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        x.at(g.edge(j).u, j) = 1;
        x.at(g.edge(j).v, j) = 1;
    }
    return x;
}

IntMatrix incidence_oriented(const Graph& g, const Orientation& o) {
    if (g.edge_count() == 0) throw Error(ErrorKind::EmptyEdgeSet, "incidence matrix needs edges");
    if (static_cast<int>(o.forward.size()) != g.edge_count())
        throw Error(ErrorKind::OrientationLengthMismatch, "one flag per edge required");
    IntMatrix d(g.order(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edge(j);
        int tail = o.forward[static_cast<size_t>(j)] ? e.u : e.v;
        int head = o.forward[static_cast<size_t>(j)] ? e.v : e.u;
        d.at(tail, j) = 1;
        d.at(head, j) = -1;
    }
    return d;
}

IntMatrix adjacency(const Graph& g) {
    IntMatrix a(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        a.at(e.u, e.v) = 1;
        a.at(e.v, e.u) = 1;
    }
    return a;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix l(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        l.at(e.u, e.v) = -1;
        l.at(e.v, e.u) = -1;
        l.at(e.u, e.u) += 1;
        l.at(e.v, e.v) += 1;
    }
    return l;
}

IntMatrix signless_laplacian(const Graph& g) {
    IntMatrix q(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        q.at(e.u, e.v) = 1;
        q.at(e.v, e.u) = 1;
        q.at(e.u, e.u) += 1;
        q.at(e.v, e.v) += 1;
    }
    return q;
}

Graph complete_graph(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

Graph cycle(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidOrder, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

Graph path(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "path needs n >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "tree needs n >= 1");
    if (n == 1) return Graph::from_edge_list(1, {});
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    for (int& x : pruefer) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int v : pruefer) ++deg[static_cast<size_t>(v)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);

    std::vector<std::pair<int, int>> pairs;
    for (int v : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        pairs.emplace_back(leaf, v);
        if (--deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    pairs.emplace_back(a, b);
    return Graph::from_edge_list(n, pairs);
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "random_connected needs n >= 1");
    if (edge_prob <= 0.0 || edge_prob > 1.0)
        throw Error(ErrorKind::InvalidArgument, "edge_prob must be in (0, 1]");
    Rng rng(seed);
    constexpr int kMaxAttempts = 1000000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(edge_prob)) pairs.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, pairs);
        if (is_connected(g)) return g;
    }
    throw Error(ErrorKind::InvalidArgument, "edge_prob too small to reach a connected draw");
}

Graph random_unicyclic(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::InvalidOrder, "unicyclic graph needs n >= 3");
    Graph tree = random_tree(n, seed);
    std::vector<std::pair<int, int>> non_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.adjacent(i, j)) non_edges.emplace_back(i, j);
    Rng rng(derive_seed(seed, 0x756e69));
    auto extra = non_edges[rng.below(non_edges.size())];
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : tree.edges()) pairs.emplace_back(e.u, e.v);
    pairs.push_back(extra);
    return Graph::from_edge_list(n, pairs);
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> id(static_cast<size_t>(g.order()), -1);
    auto adj = g.incidence_lists();
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (id[static_cast<size_t>(s)] != -1) continue;
        std::queue<int> frontier;
        frontier.push(s);
        id[static_cast<size_t>(s)] = next;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int j : adj[static_cast<size_t>(v)]) {
                int w = g.edge(j).u == v ? g.edge(j).v : g.edge(j).u;
                if (id[static_cast<size_t>(w)] == -1) {
                    id[static_cast<size_t>(w)] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    return id;
}

}  // namespace

bool is_connected(const Graph& g) {
    auto id = component_ids(g);
    return std::all_of(id.begin(), id.end(), [](int c) { return c == 0; });
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    auto adj = g.incidence_lists();
    for (int s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int j : adj[static_cast<size_t>(v)]) {
                int w = g.edge(j).u == v ? g.edge(j).v : g.edge(j).u;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    frontier.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto id = component_ids(g);
    if (id.empty()) return {};
    int count = *std::max_element(id.begin(), id.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<size_t>(count));
    for (int v = 0; v < g.order(); ++v) out[static_cast<size_t>(id[static_cast<size_t>(v)])].push_back(v);
    return out;
}

int bipartite_component_count(const Graph& g) {
    auto comps = components(g);
    auto adj = g.incidence_lists();
    int count = 0;
    for (const auto& comp : comps) {
        // 2-color just this component
        std::vector<int> color(static_cast<size_t>(g.order()), -1);
        bool ok = true;
        color[static_cast<size_t>(comp[0])] = 0;
        std::queue<int> frontier;
        frontier.push(comp[0]);
        while (!frontier.empty() && ok) {
            int v = frontier.front();
            frontier.pop();
            for (int j : adj[static_cast<size_t>(v)]) {
                int w = g.edge(j).u == v ? g.edge(j).v : g.edge(j).u;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    frontier.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

int cycle_length_of_unicyclic(const Graph& g) {
    if (g.edge_count() != g.order() || !is_connected(g))
        throw Error(ErrorKind::NotUnicyclic, "requires a connected graph with e = n");
    // Strip leaves repeatedly; what survives is the unique cycle.
    std::vector<int> deg(static_cast<size_t>(g.order()));
    for (const Edge& e : g.edges()) {
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
    }
    std::vector<bool> removed(static_cast<size_t>(g.order()), false);
    auto adj = g.incidence_lists();
    std::queue<int> leaves;
    for (int v = 0; v < g.order(); ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        removed[static_cast<size_t>(v)] = true;
        for (int j : adj[static_cast<size_t>(v)]) {
            int w = g.edge(j).u == v ? g.edge(j).v : g.edge(j).u;
            if (removed[static_cast<size_t>(w)]) continue;
            if (--deg[static_cast<size_t>(w)] == 1) leaves.push(w);
        }
    }
    return static_cast<int>(std::count(removed.begin(), removed.end(), false));
}

}  // namespace treespec
