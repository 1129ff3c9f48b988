#include "treespec/oracle.hpp"

#include <algorithm>
#include <map>

#include "treespec/error.hpp"

namespace treespec {

int TUSubgraph::odd_unicyclic_count() const {
    int c = 0;
    for (const auto& comp : components)
        if (comp.kind == ComponentKind::OddUnicyclic) ++c;
    return c;
}

bool TUSubgraph::contains_vertex(int v) const {
    return std::binary_search(vertex_support.begin(), vertex_support.end(), v);
}

std::optional<TUSubgraph> classify_subgraph(const Graph& g, const std::vector<int>& edge_subset) {
    for (int j : edge_subset)
        if (j < 0 || j >= g.edge_count())
            throw Error(ErrorKind::IndexOutOfRange, "edge index out of range");

    TUSubgraph out;
    out.edge_subset = edge_subset;
    std::sort(out.edge_subset.begin(), out.edge_subset.end());
    out.edge_subset.erase(std::unique(out.edge_subset.begin(), out.edge_subset.end()),
                          out.edge_subset.end());

    // components of <S> via DFS over the chosen edges only
    std::map<int, std::vector<int>> incident;  // vertex -> chosen edge indices
    for (int j : out.edge_subset) {
        incident[g.edge(j).u].push_back(j);
        incident[g.edge(j).v].push_back(j);
    }
    for (const auto& [v, _] : incident) out.vertex_support.push_back(v);

    std::map<int, bool> seen;
    for (const auto& [start, _] : incident) {
        if (seen[start]) continue;
        std::vector<int> stack{start};
        seen[start] = true;
        std::vector<int> verts;
        std::vector<int> comp_edges;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int j : incident[v]) {
                comp_edges.push_back(j);
                int w = g.edge(j).u == v ? g.edge(j).v : g.edge(j).u;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp_edges.begin(), comp_edges.end());
        comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()), comp_edges.end());
        std::sort(verts.begin(), verts.end());

        const int vc = static_cast<int>(verts.size());
        const int ec = static_cast<int>(comp_edges.size());
        TUComponent comp{std::move(verts), ec, ComponentKind::Tree};
        if (ec == vc - 1) {
            comp.kind = ComponentKind::Tree;
        } else if (ec == vc) {
            // exactly one cycle; it must be odd, i.e. the component is not bipartite
            std::vector<std::pair<int, int>> pairs;
            std::map<int, int> relabel;
            for (int v : comp.vertices) relabel[v] = static_cast<int>(relabel.size());
            for (int j : comp_edges) pairs.emplace_back(relabel[g.edge(j).u], relabel[g.edge(j).v]);
            Graph sub = Graph::from_edge_list(vc, pairs);
            if (is_bipartite(sub)) return std::nullopt;  // even cycle
            comp.kind = ComponentKind::OddUnicyclic;
        } else {
            return std::nullopt;  // more than one cycle in a component
        }
        out.components.push_back(std::move(comp));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const TUComponent& a, const TUComponent& b) { return a.vertices[0] < b.vertices[0]; });
    return out;
}

BigInt weight_W(const TUSubgraph& h) {
    BigInt w = 1;
    for (const auto& comp : h.components) {
        if (comp.kind == ComponentKind::OddUnicyclic)
            w *= 4;
        else
            w *= 1 + comp.edge_count;
    }
    return w;
}

BigInt weight_W1(const TUSubgraph& h, int v1) {
    BigInt w = 1;
    for (const auto& comp : h.components) {
        bool has_v1 = std::binary_search(comp.vertices.begin(), comp.vertices.end(), v1);
        if (comp.kind == ComponentKind::OddUnicyclic) {
            if (has_v1) return 0;
            w *= 4;
        } else if (!has_v1) {
            w *= 1 + comp.edge_count;
        }
    }
    return w;
}

namespace {

// Union-find with bipartition parity and per-set subgraph statistics,
// supporting exact undo for the DFS enumeration. No path compression.
class RollbackDsu {
public:
    explicit RollbackDsu(int n)
        : parent_(static_cast<size_t>(n)),
          parity_(static_cast<size_t>(n), 0),
          size_(static_cast<size_t>(n), 1),
          edges_(static_cast<size_t>(n), 0),
          has_cycle_(static_cast<size_t>(n), false) {
        for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
    }

    // root and parity of the path to the root
    std::pair<int, int> find(int v) const {
        int p = 0;
        while (parent_[static_cast<size_t>(v)] != v) {
            p ^= parity_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(v)];
        }
        return {v, p};
    }

    int set_size(int root) const { return size_[static_cast<size_t>(root)]; }
    int set_edges(int root) const { return edges_[static_cast<size_t>(root)]; }
    bool set_has_cycle(int root) const { return has_cycle_[static_cast<size_t>(root)]; }

    struct Undo {
        int kind;  // 0 = union, 1 = internal edge
        int child, root;
    };

    // Join the sets of u and v (different roots). Returns the undo record.
    Undo unite(int ru, int pu, int rv, int pv) {
        if (size_[static_cast<size_t>(ru)] < size_[static_cast<size_t>(rv)]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        parent_[static_cast<size_t>(rv)] = ru;
        parity_[static_cast<size_t>(rv)] = pu ^ pv ^ 1;
        size_[static_cast<size_t>(ru)] += size_[static_cast<size_t>(rv)];
        edges_[static_cast<size_t>(ru)] += edges_[static_cast<size_t>(rv)] + 1;
        has_cycle_[static_cast<size_t>(ru)] =
            has_cycle_[static_cast<size_t>(ru)] || has_cycle_[static_cast<size_t>(rv)];
        return {0, rv, ru};
    }

    Undo add_internal_edge(int root) {
        ++edges_[static_cast<size_t>(root)];
        has_cycle_[static_cast<size_t>(root)] = true;
        return {1, -1, root};
    }

    // Cycle flags are restored by the caller from saved values.
    void undo(const Undo& u, int child_size, int child_edges) {
        if (u.kind == 0) {
            parent_[static_cast<size_t>(u.child)] = u.child;
            parity_[static_cast<size_t>(u.child)] = 0;
            size_[static_cast<size_t>(u.root)] -= child_size;
            edges_[static_cast<size_t>(u.root)] -= child_edges + 1;
        } else {
            --edges_[static_cast<size_t>(u.root)];
        }
    }

    void set_cycle_flag(int root, bool value) { has_cycle_[static_cast<size_t>(root)] = value; }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
    std::vector<int> size_;
    std::vector<int> edges_;
    std::vector<bool> has_cycle_;
};

struct Tables {
    std::vector<BigInt> lap, signless, lap1, signless1;
    std::vector<BigInt> forest_counts;
};

// DFS over edge subsets in index order, maintaining the component structure
// incrementally. Only subsets whose components are trees or odd-unicyclic
// survive (tu_mode); forests only otherwise. Illegal prefixes cannot become
// legal again, so pruning is exact.
class Enumerator {
public:
    Enumerator(const Graph& g, int v1, bool tu_mode)
        : g_(g), v1_(v1), tu_mode_(tu_mode), dsu_(g.order()) {
        const size_t slots = static_cast<size_t>(g.edge_count()) + 1;
        tables_.lap.assign(slots, 0);
        tables_.signless.assign(slots, 0);
        tables_.lap1.assign(slots, 0);
        tables_.signless1.assign(slots, 0);
        tables_.forest_counts.assign(slots, 0);
    }

    Tables run() {
        recurse(0, 0, 0, 1, 1, 0);
        return std::move(tables_);
    }

private:
    // state carried through the DFS:
    //   cycles: number of odd-unicyclic components
    //   prod_w: product over tree components of (1 + edges)
    //   prod_w1: same under the restricted weight, zero factors counted apart
    //   w1_zeros: number of components contributing restricted weight 0
    void recurse(int edge_index, int chosen, int cycles, BigInt prod_w, BigInt prod_w1,
                 int w1_zeros) {
        if (edge_index == g_.edge_count()) return;

        // skip branch
        recurse(edge_index + 1, chosen, cycles, prod_w, prod_w1, w1_zeros);

        // take branch, if the edge keeps every component a tree or odd cycle
        const Edge& e = g_.edge(edge_index);
        auto [ru, pu] = dsu_.find(e.u);
        auto [rv, pv] = dsu_.find(e.v);

        if (ru == rv) {
            if (!tu_mode_) return;
            if (dsu_.set_has_cycle(ru)) return;   // second cycle in a component
            if (pu != pv) return;                 // even cycle
            bool had_cycle = dsu_.set_has_cycle(ru);
            int old_edges = dsu_.set_edges(ru);
            BigInt new_w = prod_w / (1 + old_edges) * 4;
            bool comp_has_v1 = contains_v1(ru);
            BigInt new_w1 = prod_w1;
            int new_zeros = w1_zeros;
            // the component was a tree; as a tree its restricted factor was
            // 1 (contains v1) or 1+edges, now it becomes 0 or 4
            if (comp_has_v1) {
                ++new_zeros;  // W1 factor 1 -> 0
            } else {
                new_w1 = new_w1 / (1 + old_edges) * 4;
            }
            auto undo = dsu_.add_internal_edge(ru);
            visit(chosen + 1, cycles + 1, new_w, new_w1, new_zeros);
            recurse(edge_index + 1, chosen + 1, cycles + 1, new_w, new_w1, new_zeros);
            dsu_.undo(undo, 0, 0);
            dsu_.set_cycle_flag(ru, had_cycle);
        } else {
            bool cyc_u = dsu_.set_has_cycle(ru), cyc_v = dsu_.set_has_cycle(rv);
            if (cyc_u && cyc_v) return;  // joining two unicyclic components
            int su = dsu_.set_size(ru), sv = dsu_.set_size(rv);
            int eu = dsu_.set_edges(ru), ev = dsu_.set_edges(rv);
            bool v1_u = contains_v1(ru), v1_v = contains_v1(rv);

            // remove both old factors, multiply the merged one
            BigInt new_w = prod_w;
            new_w = drop_w_factor(new_w, cyc_u, eu, su);
            new_w = drop_w_factor(new_w, cyc_v, ev, sv);
            BigInt new_w1 = prod_w1;
            int new_zeros = w1_zeros;
            drop_w1_factor(new_w1, new_zeros, cyc_u, eu, su, v1_u);
            drop_w1_factor(new_w1, new_zeros, cyc_v, ev, sv, v1_v);

            bool merged_cycle = cyc_u || cyc_v;
            int merged_edges = eu + ev + 1;
            bool merged_v1 = v1_u || v1_v;
            int new_cycles = cycles;
            if (merged_cycle) {
                new_w *= 4;
                if (merged_v1)
                    ++new_zeros;
                else
                    new_w1 *= 4;
            } else {
                new_w *= 1 + merged_edges;
                if (!merged_v1) new_w1 *= 1 + merged_edges;
            }

            auto undo = dsu_.unite(ru, pu, rv, pv);
            int child = undo.child;
            bool child_cycle = child == ru ? cyc_u : cyc_v;
            int child_size = child == ru ? su : sv;
            int child_edges = child == ru ? eu : ev;
            bool parent_cycle = child == ru ? cyc_v : cyc_u;

            visit(chosen + 1, new_cycles, new_w, new_w1, new_zeros);
            recurse(edge_index + 1, chosen + 1, new_cycles, new_w, new_w1, new_zeros);

            dsu_.undo(undo, child_size, child_edges);
            dsu_.set_cycle_flag(undo.root, parent_cycle);
            dsu_.set_cycle_flag(child, child_cycle);
        }
    }

    static BigInt drop_w_factor(BigInt w, bool cyc, int edges, int size) {
        (void)size;
        if (cyc) return w / 4;
        if (edges == 0) return w;  // singleton vertex, factor 1
        return w / (1 + edges);
    }

    static void drop_w1_factor(BigInt& w1, int& zeros, bool cyc, int edges, int size, bool has_v1) {
        (void)size;
        if (edges == 0) return;  // not a component yet
        if (cyc) {
            if (has_v1)
                --zeros;
            else
                w1 /= 4;
        } else {
            if (!has_v1) w1 /= 1 + edges;
        }
    }

    // Raw set membership; the edges == 0 guards elsewhere keep isolated v1
    // from contributing a factor.
    bool contains_v1(int root) const {
        if (v1_ < 0) return false;
        return dsu_.find(v1_).first == root;
    }

    void visit(int chosen, int cycles, const BigInt& w, const BigInt& w1, int w1_zeros) {
        const size_t j = static_cast<size_t>(chosen);
        tables_.signless[j] += w;
        if (w1_zeros == 0) tables_.signless1[j] += w1;
        if (cycles == 0) {
            tables_.lap[j] += w;
            if (w1_zeros == 0) tables_.lap1[j] += w1;
            tables_.forest_counts[j] += 1;
        }
    }

    const Graph& g_;
    int v1_;
    bool tu_mode_;
    RollbackDsu dsu_;
    Tables tables_;
};

Tables enumerate(const Graph& g, int v1, bool tu_mode) {
    if (g.edge_count() > kMaxOracleEdges)
        throw Error(ErrorKind::TooLarge, "brute-force enumeration capped at 24 edges");
    return Enumerator(g, v1, tu_mode).run();
}

CoefficientTable signed_table(const std::vector<BigInt>& sums, int max_j) {
    CoefficientTable out;
    out.values.assign(static_cast<size_t>(max_j) + 1, 0);
    for (int j = 1; j <= max_j && j < static_cast<int>(sums.size()); ++j)
        out.values[static_cast<size_t>(j)] = (j % 2 == 0) ? sums[static_cast<size_t>(j)]
                                                          : BigInt(-sums[static_cast<size_t>(j)]);
    return out;
}

}  // namespace

CoefficientTable laplacian_coeffs_bruteforce(const Graph& g) {
    Tables t = enumerate(g, -1, /*tu_mode=*/false);
    return signed_table(t.lap, std::max(0, g.order() - 1));
}

CoefficientTable signless_coeffs_bruteforce(const Graph& g) {
    Tables t = enumerate(g, -1, /*tu_mode=*/true);
    return signed_table(t.signless, g.order());
}

ReducedCoefficients reduced_coeffs_bruteforce(const Graph& g, int v1) {
    if (v1 < 0 || v1 >= g.order())
        throw Error(ErrorKind::IndexOutOfRange, "v1 out of range");
    Tables t = enumerate(g, v1, /*tu_mode=*/true);
    return {signed_table(t.lap1, std::max(0, g.order() - 1)),
            signed_table(t.signless1, std::max(0, g.order() - 1))};
}

BigInt spanning_tree_count_bruteforce(const Graph& g) {
    Tables t = enumerate(g, -1, /*tu_mode=*/false);
    if (g.order() == 1) return 1;  // the empty tree spans K1
    if (g.order() - 1 >= static_cast<int>(t.forest_counts.size())) return 0;
    return t.forest_counts[static_cast<size_t>(g.order() - 1)];
}

TreeCountFactored factor_tree_count(const BigInt& tau) {
    if (tau == 0) throw Error(ErrorKind::ZeroTrees, "no spanning trees (disconnected graph)");
    if (tau < 0) throw Error(ErrorKind::InvalidArgument, "spanning tree count cannot be negative");
    TreeCountFactored out{tau, 0, tau};
    while (is_even(out.s)) {
        out.s >>= 1;
        ++out.t;
    }
    return out;
}

}  // namespace treespec
