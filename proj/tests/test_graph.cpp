#include <doctest.h>

#include "test_util.hpp"
#include "treespec/error.hpp"
#include "treespec/graph.hpp"
#include "treespec/graph6.hpp"
#include "treespec/linalg.hpp"
#include "treespec/runner.hpp"

using namespace treespec;
using test_util::p3;
using test_util::star;
using test_util::triangle;

TEST_CASE("from_edge_list builds canonical graphs") {
    Graph c3 = Graph::from_edge_list(3, {{1, 2}, {0, 2}, {0, 1}});
    CHECK(c3.order() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.edges()[0] == Edge{0, 1});
    CHECK(c3.edges()[1] == Edge{0, 2});
    CHECK(c3.edges()[2] == Edge{1, 2});

    Graph path3 = Graph::from_edge_list(3, {{1, 0}, {1, 2}});
    CHECK(path3.edge_count() == 2);
    CHECK(path3.adjacent(0, 1));
    CHECK_FALSE(path3.adjacent(0, 2));
}

TEST_CASE("from_edge_list rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), Error);
    try {
        Graph::from_edge_list(2, {{0, 0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopEdge);
    }
    try {
        Graph::from_edge_list(3, {{0, 1}, {1, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateEdge);
    }
    try {
        Graph::from_edge_list(3, {{0, 3}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexOutOfRange);
    }
    try {
        Graph::from_edge_list(0, {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOrder);
    }
}

TEST_CASE("graph6 decodes hand-checked strings") {
    Graph c3 = parse_graph6("Bw");
    CHECK(c3.order() == 3);
    CHECK(c3.edge_count() == 3);

    Graph empty3 = parse_graph6("B?");
    CHECK(empty3.order() == 3);
    CHECK(empty3.edge_count() == 0);

    CHECK(to_graph6(triangle()) == "Bw");
}

TEST_CASE("graph6 rejects malformed input") {
    for (const char* bad : {"", "B", "Bww", "~??", "B\x01"}) {
        CHECK_THROWS_AS(parse_graph6(bad), Error);
    }
    try {
        parse_graph6("~~~");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderTooLarge);
    }
    CHECK_THROWS_AS(to_graph6(complete_graph(63)), Error);
}

TEST_CASE("graph6 round trip is the identity") {
    CHECK(parse_graph6(to_graph6(p3())) == p3());
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected(2 + seed % 9, 0.4, seed);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    // disconnected graphs round trip too
    Graph g = test_util::two_k2();
    CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("line graph of small graphs") {
    Graph lp3 = line_graph(p3());
    CHECK(lp3.order() == 2);
    CHECK(lp3.edge_count() == 1);

    Graph lc3 = line_graph(triangle());
    CHECK(lc3.order() == 3);
    CHECK(lc3.edge_count() == 3);  // triangle again

    Graph lstar = line_graph(star(3));
    CHECK(lstar.order() == 3);
    CHECK(lstar.edge_count() == 3);

    CHECK(line_graph(Graph::from_edge_list(2, {})).order() == 0);
}

TEST_CASE("incidence matrices match the definitions") {
    IntMatrix x = incidence_unoriented(p3());
    CHECK(x == IntMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}}));

    Orientation o{{true, true}};
    IntMatrix d = incidence_oriented(p3(), o);
    CHECK(d == IntMatrix::from_rows({{1, 0}, {-1, 1}, {0, -1}}));

    IntMatrix xs = incidence_unoriented(star(3));
    for (int j = 0; j < 3; ++j) CHECK(xs.at(0, j) == 1);

    CHECK_THROWS_AS(incidence_unoriented(Graph::from_edge_list(2, {})), Error);
    CHECK_THROWS_AS(incidence_oriented(p3(), Orientation{{true}}), Error);
}

TEST_CASE("incidence column sums") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_connected(3 + seed % 7, 0.5, seed);
        IntMatrix x = incidence_unoriented(g);
        IntMatrix d = incidence_oriented(g, random_orientation(g, seed * 31));
        for (int j = 0; j < g.edge_count(); ++j) {
            BigInt sx = 0, sd = 0;
            for (int i = 0; i < g.order(); ++i) {
                sx += x.at(i, j);
                sd += d.at(i, j);
            }
            CHECK(sx == 2);
            CHECK(sd == 0);
        }
    }
}

TEST_CASE("laplacian and signless laplacian") {
    CHECK(laplacian(p3()) == IntMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
    CHECK(signless_laplacian(triangle()) ==
          IntMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));

    Orientation o = default_orientation(triangle());
    IntMatrix d = incidence_oriented(triangle(), o);
    CHECK(d * d.transpose() == laplacian(triangle()));

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        IntMatrix l = laplacian(random_connected(6, 0.5, seed));
        for (int i = 0; i < l.rows(); ++i) {
            BigInt row_sum = 0;
            for (int j = 0; j < l.cols(); ++j) row_sum += l.at(i, j);
            CHECK(row_sum == 0);
        }
        CHECK(l.symmetric());
    }
}

TEST_CASE("L = D D^T for every orientation, Q = X X^T") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_connected(3 + seed % 8, 0.45, seed * 7);
        IntMatrix x = incidence_unoriented(g);
        CHECK(x * x.transpose() == signless_laplacian(g));
        for (std::uint64_t s2 = 0; s2 < 3; ++s2) {
            IntMatrix d = incidence_oriented(g, random_orientation(g, seed * 100 + s2));
            CHECK(d * d.transpose() == laplacian(g));
        }
    }
}

TEST_CASE("shift identity on the line graph") {
    Graph c3 = triangle();
    IntMatrix x = incidence_unoriented(c3);
    IntMatrix lhs = adjacency(line_graph(c3));
    for (int i = 0; i < 3; ++i) lhs.at(i, i) += 2;
    CHECK(lhs == x.transpose() * x);
}

TEST_CASE("generators satisfy their invariants") {
    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph t = random_tree(8, 42);
    CHECK(t.edge_count() == 7);
    CHECK(is_connected(t));

    Graph u = random_unicyclic(6, 7);
    CHECK(u.edge_count() == 6);
    CHECK(is_connected(u));

    Graph r = random_connected(9, 0.3, 5);
    CHECK(is_connected(r));

    // determinism
    CHECK(random_tree(10, 99) == random_tree(10, 99));
    CHECK(random_unicyclic(10, 99) == random_unicyclic(10, 99));
    CHECK(random_connected(8, 0.4, 99) == random_connected(8, 0.4, 99));

    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(random_unicyclic(2, 1), Error);
    CHECK_THROWS_AS(complete_graph(0), Error);
}

TEST_CASE("random trees are uniform enough to hit several shapes") {
    // 16 labeled trees on 4 vertices; with 200 seeds we should see many
    bool saw_path = false, saw_star = false;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph t = random_tree(4, seed);
        int max_deg = 0;
        for (int v = 0; v < 4; ++v) max_deg = std::max(max_deg, t.degree(v));
        if (max_deg == 2) saw_path = true;
        if (max_deg == 3) saw_star = true;
    }
    CHECK(saw_path);
    CHECK(saw_star);
}

TEST_CASE("structure queries") {
    CHECK(is_bipartite(cycle(4)));
    CHECK_FALSE(is_bipartite(triangle()));
    CHECK(components(test_util::two_k2()).size() == 2);
    CHECK(is_connected(p3()));
    CHECK_FALSE(is_connected(test_util::two_k2()));

    // C4 plus a pendant vertex
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
    CHECK(cycle_length_of_unicyclic(g) == 4);
    CHECK_THROWS_AS(cycle_length_of_unicyclic(p3()), Error);
    CHECK(cycle_length_of_unicyclic(cycle(7)) == 7);
}

TEST_CASE("nullity of L counts components, nullity of Q bipartite components") {
    auto nullity = [](const IntMatrix& m) {
        return integer_eigenvalues(char_poly(m)).nullity();
    };
    CHECK(nullity(laplacian(test_util::two_k2())) == 2);
    CHECK(nullity(signless_laplacian(test_util::two_k2())) == 2);
    CHECK(nullity(laplacian(triangle())) == 1);
    CHECK(nullity(signless_laplacian(triangle())) == 0);

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        // union of a random graph and an isolated vertex, sometimes disconnected
        Graph base = random_connected(4 + seed % 4, 0.5, seed);
        std::vector<std::pair<int, int>> pairs;
        for (const Edge& e : base.edges()) pairs.emplace_back(e.u, e.v);
        Graph g = Graph::from_edge_list(base.order() + 1, pairs);
        CHECK(nullity(laplacian(g)) == static_cast<int>(components(g).size()));
        CHECK(nullity(signless_laplacian(g)) == bipartite_component_count(g));
    }
}

TEST_CASE("fixture corpus loads and counts match") {
    auto graphs = load_corpus_file(test_util::fixture_path("connected_n_le_6.g6"));
    CHECK(graphs.size() == 143);
    int by_order[7] = {0};
    for (const Graph& g : graphs) {
        CHECK(is_connected(g));
        ++by_order[g.order()];
    }
    CHECK(by_order[1] == 1);
    CHECK(by_order[2] == 1);
    CHECK(by_order[3] == 2);
    CHECK(by_order[4] == 6);
    CHECK(by_order[5] == 21);
    CHECK(by_order[6] == 112);
}
