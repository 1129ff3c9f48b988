#include <doctest.h>

#include "test_util.hpp"
#include "treespec/checkers.hpp"
#include "treespec/error.hpp"
#include "treespec/graph6.hpp"

using namespace treespec;
using test_util::p3;
using test_util::triangle;
using test_util::two_k2;

TEST_CASE("shift identity checker") {
    CHECK(check_eq1_shift(triangle()).status == Status::HOLDS);
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        CHECK(check_eq1_shift(random_connected(8, 0.4, seed)).status == Status::HOLDS);
    CHECK(check_eq1_shift(Graph::from_edge_list(3, {})).status == Status::NOT_APPLICABLE);
    CHECK(check_eq1_shift(two_k2()).status == Status::HOLDS);  // identity needs no connectivity
}

TEST_CASE("oriented incidence lemma on chosen pairs") {
    Graph c3 = triangle();
    Orientation o = default_orientation(c3);
    // edges of C3: 0=(0,1), 1=(0,2), 2=(1,2)
    Verdict v = check_lemma_invertD(c3, o, {0, 1}, {0, 2});  // R={0,1}, S={e01,e12}
    CHECK(v.status == Status::HOLDS);
    BigInt d{v.witness["det"].get<std::string>()};
    CHECK((d == 1 || d == -1));

    // all 3 edges: a cycle, det must vanish
    v = check_lemma_invertD(c3, o, {0, 1, 2}, {0, 1, 2});
    CHECK(v.status == Status::HOLDS);
    CHECK(v.witness["det"].get<std::string>() == "0");
    CHECK(v.witness["conditions_hold"].get<bool>() == false);

    // R not inside the support
    v = check_lemma_invertD(p3(), default_orientation(p3()), {2}, {0});
    CHECK(v.status == Status::HOLDS);
    CHECK(v.witness["det"].get<std::string>() == "0");

    CHECK_THROWS_AS(check_lemma_invertD(c3, o, {0}, {0, 1}), Error);
}

TEST_CASE("unoriented incidence lemma on chosen pairs") {
    Graph c3 = triangle();
    Verdict v = check_lemma_invertX(c3, {0, 1, 2}, {0, 1, 2});
    CHECK(v.status == Status::HOLDS);
    BigInt d{v.witness["det"].get<std::string>()};
    CHECK((d == 2 || d == -2));

    Graph c4 = cycle(4);
    v = check_lemma_invertX(c4, {0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK(v.status == Status::HOLDS);
    CHECK(v.witness["det"].get<std::string>() == "0");  // even cycle

    v = check_lemma_invertX(p3(), {0, 1}, {0, 1});
    CHECK(v.status == Status::HOLDS);
    BigInt d2{v.witness["det"].get<std::string>()};
    CHECK((d2 == 1 || d2 == -1));
}

TEST_CASE("incidence lemmas, exhaustive and sampled corpus modes") {
    for (const Graph& g : {triangle(), p3(), cycle(4), complete_graph(4), test_util::star(3)}) {
        CHECK(check_lemma_invertD_corpus(g).status == Status::HOLDS);
        CHECK(check_lemma_invertX_corpus(g).status == Status::HOLDS);
    }
    CheckOptions opts;
    opts.pair_seed = 77;
    opts.pair_samples = 300;
    Graph big = random_connected(9, 0.5, 3);  // > 6 edges: sampled mode
    Verdict v = check_lemma_invertD_corpus(big, opts);
    CHECK(v.status == Status::HOLDS);
    CHECK(v.witness["mode"] == "sampled");
    CHECK(check_lemma_invertX_corpus(big, opts).status == Status::HOLDS);
}

TEST_CASE("coefficient theorem checker") {
    Verdict v = check_coef_theorem(triangle());
    CHECK(v.status == Status::HOLDS);
    CHECK(check_coef_theorem(p3()).status == Status::HOLDS);
    CHECK(check_coef_theorem(two_k2()).status == Status::HOLDS);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Verdict tv = check_coef_theorem(random_tree(7, seed));
        CHECK(tv.status == Status::HOLDS);
    }
    CHECK(check_coef_theorem(complete_graph(8)).status == Status::NOT_APPLICABLE);
}

TEST_CASE("principal submatrix lemma checker") {
    for (const Graph& g : {triangle(), cycle(4), complete_graph(5), p3()})
        CHECK(check_lemma_princ(g).status == Status::HOLDS);
}

TEST_CASE("binary rank checker") {
    CHECK(check_doob(p3()).status == Status::HOLDS);          // n=3, rank 2
    CHECK(check_doob(complete_graph(4)).status == Status::HOLDS);  // n=4, rank 2
    CHECK(check_doob(cycle(5)).status == Status::HOLDS);      // n=5, rank 4
    Verdict v = check_doob(cycle(5));
    CHECK(v.witness["rank2"] == 4);
    CHECK(check_doob(two_k2()).status == Status::NOT_APPLICABLE);
}

TEST_CASE("t+1 bound for Q") {
    Verdict k6 = check_tplus1_Q(complete_graph(6));
    CHECK(k6.status == Status::HOLDS);
    CHECK(k6.tight);
    CHECK(k6.witness["tau"] == "1296");
    CHECK(k6.witness["t"] == 4);
    CHECK(k6.witness["max_even"]["lambda"] == "4");
    CHECK(k6.witness["max_even"]["multiplicity"] == 5);

    Verdict c3 = check_tplus1_Q(triangle());
    CHECK(c3.status == Status::HOLDS);
    CHECK(c3.witness["t"] == 0);

    Verdict c4 = check_tplus1_Q(cycle(4));
    CHECK(c4.status == Status::HOLDS);
    CHECK(c4.witness["t"] == 2);
    CHECK(c4.witness["max_even"]["lambda"] == "2");
    CHECK(c4.witness["max_even"]["multiplicity"] == 2);

    CHECK(check_tplus1_Q(two_k2()).status == Status::NOT_APPLICABLE);
}

TEST_CASE("line-graph eigenvalue bounds") {
    // K4: A(L(K4)) is the octahedron, even eigenvalues 4 (once) and 0 (x3)
    Verdict k4 = check_min_bound(complete_graph(4));
    CHECK(k4.status == Status::HOLDS);
    CHECK(k4.witness["bound"] == 4);  // min{5, 4}
    CHECK(k4.witness["max_even_line"]["lambda"] == "0");
    CHECK(k4.witness["max_even_line"]["multiplicity"] == 3);
    CHECK_FALSE(k4.tight);
    CHECK(check_tplus1_line(complete_graph(4)).status == Status::HOLDS);

    // P3: line graph K2 has spectrum {1, -1}: vacuous
    Verdict p = check_tplus1_line(p3());
    CHECK(p.status == Status::HOLDS);
    CHECK_FALSE(p.witness.contains("max_even_line"));

    // C4: line graph C4, eigenvalue 0 with multiplicity 2 = min{3, 2}
    Verdict c4 = check_min_bound(cycle(4));
    CHECK(c4.status == Status::HOLDS);
    CHECK(c4.tight);
    CHECK(c4.witness["bound"] == 2);
}

TEST_CASE("odd order, tau not divisible by 4") {
    Verdict c3 = check_nodd(triangle());
    CHECK(c3.status == Status::HOLDS);
    Verdict c5 = check_nodd(cycle(5));
    CHECK(c5.status == Status::HOLDS);
    CHECK(check_nodd(cycle(4)).status == Status::NOT_APPLICABLE);  // even order
    CHECK(check_nodd(complete_graph(5)).status == Status::HOLDS);  // tau = 125, odd
    CHECK(check_nodd(complete_graph(6)).status == Status::NOT_APPLICABLE);  // even order
    // K7: tau = 7^5 odd, order odd: applicable, Q(K7) has eigenvalue 12 simple
    CHECK(check_nodd(complete_graph(7)).status == Status::HOLDS);
}

TEST_CASE("multiplicity two forces divisibility by four") {
    CHECK(check_mult2(cycle(4)).status == Status::HOLDS);
    Verdict c4 = check_mult2(cycle(4));
    CHECK(c4.witness.contains("trigger"));
    CHECK(check_mult2(triangle()).status == Status::HOLDS);  // vacuous
    CHECK_FALSE(check_mult2(triangle()).witness.contains("trigger"));
    Verdict k6 = check_mult2(complete_graph(6));
    CHECK(k6.status == Status::HOLDS);
    CHECK(k6.witness["trigger"]["multiplicity"] == 5);
}

TEST_CASE("unicyclic corollary checker") {
    Verdict c4 = check_unicyclic_corollary(cycle(4));
    CHECK(c4.status == Status::HOLDS);
    CHECK(c4.witness["line_nullity"] == 2);
    CHECK(c4.witness["cycle_length"] == 4);

    Verdict c3 = check_unicyclic_corollary(triangle());
    CHECK(c3.status == Status::HOLDS);
    CHECK(c3.witness["line_nullity"] == 0);

    Verdict c6 = check_unicyclic_corollary(cycle(6));
    CHECK(c6.status == Status::HOLDS);
    CHECK(c6.witness["line_nullity"] == 0);

    CHECK(check_unicyclic_corollary(p3()).status == Status::NOT_APPLICABLE);
}

TEST_CASE("generalized laplacian checker") {
    CHECK(check_general_laplacian(triangle()).status == Status::HOLDS);
    CHECK(check_general_laplacian(cycle(4)).status == Status::HOLDS);
    CHECK(check_general_laplacian(complete_graph(6)).status == Status::HOLDS);
    CHECK(check_general_laplacian(two_k2()).status == Status::NOT_APPLICABLE);
}

TEST_CASE("smith form vs tau") {
    Verdict c3 = check_snf_tau(triangle());
    CHECK(c3.status == Status::HOLDS);
    CHECK(c3.witness["product"] == "3");
    Verdict k4 = check_snf_tau(complete_graph(4));
    CHECK(k4.status == Status::HOLDS);
    CHECK(k4.witness["product"] == "16");
    Verdict p = check_snf_tau(p3());
    CHECK(p.status == Status::HOLDS);
    CHECK(p.witness["product"] == "1");
}

TEST_CASE("matrix tree checker") {
    CHECK(check_matrix_tree(complete_graph(4)).witness["tau"] == "16");
    CHECK(check_matrix_tree(complete_graph(4)).status == Status::HOLDS);
    CHECK(check_matrix_tree(triangle()).status == Status::HOLDS);
    CHECK(check_matrix_tree(p3()).status == Status::HOLDS);
    CHECK(check_matrix_tree(two_k2()).status == Status::NOT_APPLICABLE);
    CHECK(check_matrix_tree(Graph::from_edge_list(1, {})).status == Status::HOLDS);
}

TEST_CASE("spectra equivalence between Q and the line graph") {
    // nonzero integer eigenvalues of Q equal integer eigenvalues + 2 of
    // A(L(G)), skipping -2, with matching multiplicities
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = seed % 2 == 0 ? random_connected(6, 0.5, seed) : random_tree(7, seed);
        IntegerSpectrum q = integer_eigenvalues(char_poly(signless_laplacian(g)));
        IntegerSpectrum la = integer_eigenvalues(char_poly(adjacency(line_graph(g))));
        for (const auto& e : q.entries) {
            if (e.eigenvalue == 0) continue;
            CHECK(la.multiplicity_of(e.eigenvalue - 2) == e.multiplicity);
        }
        for (const auto& e : la.entries) {
            if (e.eigenvalue == -2) continue;
            CHECK(q.multiplicity_of(e.eigenvalue + 2) == e.multiplicity);
        }
    }
}

TEST_CASE("bipartite graphs: L and Q have identical integer spectra") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_tree(8, seed * 3);
        IntegerSpectrum l = integer_eigenvalues(char_poly(laplacian(g)));
        IntegerSpectrum q = integer_eigenvalues(char_poly(signless_laplacian(g)));
        CHECK(l == q);
    }
    Graph c6 = cycle(6);
    CHECK(integer_eigenvalues(char_poly(laplacian(c6))) ==
          integer_eigenvalues(char_poly(signless_laplacian(c6))));
}

TEST_CASE("checkers are deterministic and verdicts carry the graph6 id") {
    Graph g = random_connected(7, 0.5, 12345);
    CheckOptions opts;
    opts.pair_seed = 9;
    for (Claim claim : all_claims()) {
        Verdict a = run_check(claim, g, opts);
        Verdict b = run_check(claim, g, opts);
        CHECK(a.status == b.status);
        CHECK(a.witness == b.witness);
        CHECK(a.graph6 == to_graph6(g));
        CHECK(parse_graph6(a.graph6) == g);
    }
}

TEST_CASE("memoized and unmemoized checkers agree") {
    CharPolyMemo memo;
    CheckOptions with_memo;
    with_memo.memo = &memo;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = random_connected(6, 0.5, seed * 311);
        for (Claim claim : {Claim::THM_TPLUS1_Q, Claim::THM_NODD, Claim::THM_MULT2,
                            Claim::THM_GENERAL_L, Claim::MATRIX_TREE}) {
            Verdict a = run_check(claim, g, with_memo);
            Verdict b = run_check(claim, g, {});
            CHECK(a.status == b.status);
            CHECK(a.witness == b.witness);
        }
    }
}

TEST_CASE("claim names round trip") {
    for (Claim c : all_claims()) {
        auto parsed = claim_from_string(to_string(c));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == c);
    }
    CHECK_FALSE(claim_from_string("NOT_A_CLAIM").has_value());
}
