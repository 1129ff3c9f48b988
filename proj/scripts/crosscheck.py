#!/usr/bin/env python3
"""Independent cross-check of the toolkit against sympy/networkx.

Not part of the test suite; a development aid that re-derives the analyze
report's numbers with unrelated implementations.
"""

import itertools
import json
import subprocess
import sys

import networkx as nx
import sympy
from sympy.matrices.normalforms import smith_normal_form

CLI = "./build/treespec"


def analyze(g6):
    out = subprocess.run([CLI, "analyze", g6], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def integer_spectrum(mat):
    """Integer roots with multiplicity of det(xI - mat), by plain trial roots."""
    coeffs = [int(c) for c in mat.charpoly().all_coeffs()]  # descending powers

    def value(cs, v):
        acc = 0
        for c in cs:
            acc = acc * v + c
        return acc

    def divide(cs, v):  # synthetic division by (x - v), exact
        out = [cs[0]]
        for c in cs[1:]:
            out.append(c + out[-1] * v)
        assert out[-1] == 0
        return out[:-1]

    n = mat.rows
    bound = n * (max(abs(x) for x in sympy.flatten(mat)) if n else 0) + 1
    found = []
    for cand in range(-bound, bound + 1):
        mult = 0
        while len(coeffs) > 1 and value(coeffs, cand) == 0:
            coeffs = divide(coeffs, cand)
            mult += 1
        if mult:
            found.append((cand, mult))
    return sorted(found)


def check_graph(G):
    g6 = nx.to_graph6_bytes(G, header=False).decode().strip()
    rep = analyze(g6)
    n = G.number_of_nodes()

    assert rep["order"] == n, g6
    assert rep["size"] == G.number_of_edges(), g6
    assert rep["connected"] == nx.is_connected(G), g6
    assert rep["bipartite"] == nx.is_bipartite(G), g6

    nodes = sorted(G.nodes())
    A = sympy.Matrix(n, n, lambda i, j: 1 if G.has_edge(nodes[i], nodes[j]) else 0)
    Dg = sympy.diag(*[G.degree(v) for v in nodes])
    L = Dg - A
    Q = Dg + A

    # tau via the matrix-tree theorem in sympy
    if nx.is_connected(G):
        tau = int(L.minor_submatrix(0, 0).det()) if n > 1 else 1
        assert rep["tau"] == str(tau), (g6, rep["tau"], tau)
        t = 0
        s = tau
        while s % 2 == 0:
            s //= 2
            t += 1
        if tau > 0:
            assert rep["tau_t"] == t and rep["tau_s"] == str(s), g6

        # Smith invariant factors of L (sympy gives the diagonal)
        snf = smith_normal_form(L)
        inv = sorted(abs(int(snf[i, i])) for i in range(n) if snf[i, i] != 0)
        got = sorted(int(x) for x in rep["smith_invariants_L"])
        assert inv == got, (g6, inv, got)

    # integer spectra of A, L, Q
    for key, M in [("spectrum_A", A), ("spectrum_L", L), ("spectrum_Q", Q)]:
        expected = integer_spectrum(M)
        got = sorted((int(e["value"]), e["multiplicity"]) for e in rep[key]["integer_eigenvalues"])
        assert expected == got, (g6, key, expected, got)

    # line graph adjacency spectrum and GF(2) rank
    if G.number_of_edges() >= 1:
        LG = nx.line_graph(G)
        lg_nodes = sorted(LG.nodes())
        m = len(lg_nodes)
        LA = sympy.Matrix(m, m, lambda i, j: 1 if LG.has_edge(lg_nodes[i], lg_nodes[j]) else 0)
        expected = integer_spectrum(LA)
        got = sorted((int(e["value"]), e["multiplicity"])
                     for e in rep["spectrum_line_A"]["integer_eigenvalues"])
        assert expected == got, (g6, "line spectrum", expected, got)

        # rank over GF(2), elementary elimination
        rows = [[int(LA[i, j]) % 2 for j in range(m)] for i in range(m)]
        rank = 0
        for col in range(m):
            piv = next((r for r in range(rank, m) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(m):
                if r != rank and rows[r][col]:
                    rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        assert rep["rank2_line_A"] == rank, (g6, rep["rank2_line_A"], rank)

    for v in rep["verdicts"]:
        assert v["status"] != "VIOLATED", (g6, v)

    # brute-force coefficient check against a from-scratch enumeration
    if G.number_of_edges() <= 10:
        check_coefficients(G, nodes, L, Q)


def tu_weight(G, edges):
    H = nx.Graph(list(edges))
    c = 0
    w = 1
    for comp in nx.connected_components(H):
        sub = H.subgraph(comp)
        ne, nv = sub.number_of_edges(), sub.number_of_nodes()
        if ne == nv - 1:
            w *= 1 + ne
        elif ne == nv and not nx.is_bipartite(sub):
            c += 1
        else:
            return None
    return 4**c * w


def check_coefficients(G, nodes, L, Q):
    n = len(nodes)
    x = sympy.symbols("x")
    pl = L.charpoly(x).as_expr().expand()
    pq = Q.charpoly(x).as_expr().expand()
    ell = [0] * (n + 1)
    p = [0] * (n + 1)
    for r in range(1, n + 1):
        for subset in itertools.combinations(G.edges(), r):
            w = tu_weight(G, subset)
            if w is None:
                continue
            H = nx.Graph(list(subset))
            acyclic = H.number_of_edges() == H.number_of_nodes() - len(
                list(nx.connected_components(H)))
            p[r] += w
            if acyclic:
                ell[r] += w
    for j in range(1, n):
        assert (-1) ** j * ell[j] == pl.coeff(x, n - j), (j, ell[j], pl)
    for j in range(1, n + 1):
        assert (-1) ** j * p[j] == pq.coeff(x, n - j), (j, p[j], pq)


def main():
    import random

    random.seed(31337)
    graphs = [nx.cycle_graph(3), nx.cycle_graph(4), nx.cycle_graph(6), nx.path_graph(4),
              nx.complete_graph(4), nx.complete_graph(6), nx.star_graph(3),
              nx.complete_bipartite_graph(2, 3), nx.petersen_graph()]
    for i in range(40):
        n = random.randint(2, 9)
        G = nx.gnp_random_graph(n, 0.5, seed=1000 + i)
        G.remove_nodes_from(list(nx.isolates(G)))
        if G.number_of_nodes() < 2:
            continue
        G = nx.convert_node_labels_to_integers(G)
        graphs.append(G)
    # a couple of disconnected ones
    graphs.append(nx.disjoint_union(nx.cycle_graph(3), nx.path_graph(3)))
    graphs.append(nx.disjoint_union(nx.complete_graph(2), nx.complete_graph(2)))

    for k, G in enumerate(graphs):
        check_graph(G)
        print(f"[{k + 1}/{len(graphs)}] ok: n={G.number_of_nodes()} e={G.number_of_edges()}")
    print("all cross-checks passed")


if __name__ == "__main__":
    sys.exit(main())
