#pragma once

#include <optional>
#include <vector>

#include "treespec/bigint.hpp"
#include "treespec/graph.hpp"

namespace treespec {

// Brute-force enumeration oracles. Everything here is exponential in e(g)
// on purpose: these are independent checks for the exact-linalg results,
// not production algorithms. Inputs are capped at kMaxOracleEdges.
inline constexpr int kMaxOracleEdges = 24;

enum class ComponentKind { Tree, OddUnicyclic };

struct TUComponent {
    std::vector<int> vertices;  // sorted
    int edge_count;
    ComponentKind kind;
};

// A TU-subgraph: every component of the induced edge subgraph is a tree or
// a unicyclic graph with odd cycle. Isolated vertices are not components.
struct TUSubgraph {
    std::vector<int> edge_subset;         // sorted edge indices
    std::vector<TUComponent> components;  // sorted by smallest vertex
    std::vector<int> vertex_support;      // V_0, sorted

    int odd_unicyclic_count() const;
    bool contains_vertex(int v) const;
};

// nullopt when some component has an even cycle or more than one cycle.
std::optional<TUSubgraph> classify_subgraph(const Graph& g, const std::vector<int>& edge_subset);

// W(H) = 4^c * prod over tree components of (1 + e(T)); empty subgraph -> 1.
BigInt weight_W(const TUSubgraph& h);

// Restricted weight relative to v1: an odd-unicyclic component containing v1
// contributes 0, otherwise 4; a tree containing v1 contributes 1, otherwise
// 1 + e(T).
BigInt weight_W1(const TUSubgraph& h, int v1);

// Signed coefficient tables, 1-indexed by edge count j: table[j] already
// carries the (-1)^j sign, i.e. it equals the coefficient of x^{n-j}.
struct CoefficientTable {
    std::vector<BigInt> values;  // values[0] unused; size = max j + 1
    const BigInt& at(int j) const { return values[static_cast<size_t>(j)]; }
    int max_index() const { return static_cast<int>(values.size()) - 1; }
};

// l_j = (-1)^j sum of W over acyclic edge subsets with j edges, j = 1..n-1.
CoefficientTable laplacian_coeffs_bruteforce(const Graph& g);

// p_j = (-1)^j sum of W over TU edge subsets with j edges, j = 1..n.
CoefficientTable signless_coeffs_bruteforce(const Graph& g);

struct ReducedCoefficients {
    CoefficientTable laplacian;  // l'_j, j = 1..n-1
    CoefficientTable signless;   // p'_j, j = 1..n-1
};

// Restricted-weight analogues relative to v1; they match char_poly of L and
// Q with row/column v1 deleted.
ReducedCoefficients reduced_coeffs_bruteforce(const Graph& g, int v1);

// Number of edge subsets of size n-1 that are spanning trees.
BigInt spanning_tree_count_bruteforce(const Graph& g);

struct TreeCountFactored {
    BigInt tau;
    int t;      // tau = 2^t * s
    BigInt s;   // odd
};

TreeCountFactored factor_tree_count(const BigInt& tau);

}  // namespace treespec
