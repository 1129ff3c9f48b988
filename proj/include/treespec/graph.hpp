#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "treespec/int_matrix.hpp"

namespace treespec {

struct Edge {
    int u;  // u < v always
    int v;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected labeled graph. Vertices are 0..order-1; edges are kept
// sorted lexicographically and the position in that order is the edge index
// used everywhere (incidence columns, line-graph vertices).
class Graph {
public:
    static Graph from_edge_list(int order, const std::vector<std::pair<int, int>>& pairs);

    // Edge-free graph; order 0 is allowed here (the line graph of an
    // edgeless graph has no vertices).
    static Graph edgeless(int order);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;

    // Edges incident to each vertex, by edge index.
    std::vector<std::vector<int>> incidence_lists() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {}
    int order_ = 0;
    std::vector<Edge> edges_;
};

// Per-edge direction flags, aligned with Graph edge indices. true on edge
// (u,v) with u < v means the edge is oriented u -> v.
struct Orientation {
    std::vector<bool> forward;
};

Orientation default_orientation(const Graph& g);                 // all edges low -> high
Orientation random_orientation(const Graph& g, std::uint64_t seed);

// --- standard constructions -------------------------------------------------

Graph line_graph(const Graph& g);

IntMatrix incidence_unoriented(const Graph& g);                  // X, n x e, entries 0/1
IntMatrix incidence_oriented(const Graph& g, const Orientation& o);  // D, n x e, entries 0/±1
IntMatrix adjacency(const Graph& g);
IntMatrix laplacian(const Graph& g);           // L = degree diagonal - adjacency
IntMatrix signless_laplacian(const Graph& g);  // Q = degree diagonal + adjacency

// --- generators --------------------------------------------------------------

Graph complete_graph(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);
Graph random_tree(int n, std::uint64_t seed);  // uniform over labeled trees (Pruefer draw)
Graph random_connected(int n, double edge_prob, std::uint64_t seed);
Graph random_unicyclic(int n, std::uint64_t seed);  // n >= 3; random tree plus one non-edge

// --- structure queries --------------------------------------------------------

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
int bipartite_component_count(const Graph& g);

// Length of the unique cycle of a connected graph with e = n.
int cycle_length_of_unicyclic(const Graph& g);

}  // namespace treespec
