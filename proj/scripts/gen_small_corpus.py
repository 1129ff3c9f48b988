#!/usr/bin/env python3
"""Regenerate the small-graph fixture files under tests/fixtures/.

Enumerates all connected graphs up to isomorphism for n <= 6 (and all trees
on 7 vertices) by brute-force canonicalization: the canonical form of a graph
is the minimum, over all vertex permutations, of its upper-triangle adjacency
bitmask. Output is one graph6 string per line.
"""

import itertools
import os
import sys

import numpy as np

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
EXPECTED_TREES_7 = 11


def pair_index(n):
    """Map (i, j) with i < j to a bit position, lexicographic order."""
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    return idx


def perm_tables(n):
    """For every permutation p of [n], the bit-position relabeling it induces."""
    idx = pair_index(n)
    m = len(idx)
    tables = []
    for p in itertools.permutations(range(n)):
        t = np.empty(m, dtype=np.int64)
        for (i, j), k in idx.items():
            a, b = p[i], p[j]
            t[k] = idx[(min(a, b), max(a, b))]
        tables.append(t)
    return np.array(tables)


def is_connected_mask(n, mask, idx_pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (i, j) in enumerate(idx_pairs):
        if mask >> k & 1:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(v) for v in range(n)}) == 1


def canonical_masks(n, masks):
    """Minimum over all permutations of the permuted bitmask, vectorized."""
    m = n * (n - 1) // 2
    bits = ((masks[:, None] >> np.arange(m)[None, :]) & 1).astype(np.int64)
    powers = (1 << np.arange(m)).astype(np.int64)
    best = None
    for table in perm_tables(n):
        permuted = np.zeros_like(bits)
        permuted[:, table] = bits
        vals = permuted @ powers
        best = vals if best is None else np.minimum(best, vals)
    return set(best.tolist())


def to_graph6(n, mask, idx):
    assert 1 <= n <= 62
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(mask >> idx[(i, j)] & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = v << 1 | b
        out.append(chr(v + 63))
    return "".join(out)


def connected_graphs(n):
    idx = pair_index(n)
    idx_pairs = [p for p, _ in sorted(idx.items(), key=lambda kv: kv[1])]
    m = len(idx)
    masks = np.array(
        [x for x in range(1 << m) if is_connected_mask(n, x, idx_pairs)],
        dtype=np.int64,
    )
    canon = canonical_masks(n, masks) if n > 1 else {0}
    return sorted(canon), idx


def labeled_trees(n):
    """All labeled trees on n vertices via Pruefer decoding, as bitmasks."""
    idx = pair_index(n)
    masks = []
    for seq in itertools.product(range(n), repeat=n - 2):
        deg = [1] * n
        for v in seq:
            deg[v] += 1
        leaves = sorted(v for v in range(n) if deg[v] == 1)
        d = deg[:]
        mask = 0
        avail = leaves[:]
        for v in seq:
            leaf = avail.pop(0)
            a, b = min(leaf, v), max(leaf, v)
            mask |= 1 << idx[(a, b)]
            d[v] -= 1
            if d[v] == 1:
                import bisect

                bisect.insort(avail, v)
        a, b = sorted(avail[:2])
        mask |= 1 << idx[(a, b)]
        masks.append(mask)
    return np.unique(np.array(masks, dtype=np.int64)), idx


def edge_count(mask):
    return bin(mask).count("1")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    all_lines = []
    e_le_6_lines = []
    for n in range(1, 7):
        canon, idx = connected_graphs(n)
        assert len(canon) == EXPECTED_CONNECTED[n], (n, len(canon))
        for mask in canon:
            g6 = to_graph6(n, mask, idx)
            all_lines.append(g6)
            if edge_count(mask) <= 6:
                e_le_6_lines.append(g6)
        print(f"n={n}: {len(canon)} connected graphs")

    trees, idx7 = labeled_trees(7)
    canon7 = canonical_masks(7, trees)
    assert len(canon7) == EXPECTED_TREES_7, len(canon7)
    print(f"n=7: {len(canon7)} trees")
    for mask in sorted(canon7):
        e_le_6_lines.append(to_graph6(7, mask, idx7))

    with open(os.path.join(OUT_DIR, "connected_n_le_6.g6"), "w") as f:
        f.write("# all connected graphs with 1 <= n <= 6, one per isomorphism class\n")
        f.write("\n".join(all_lines) + "\n")
    with open(os.path.join(OUT_DIR, "connected_e_le_6.g6"), "w") as f:
        f.write("# all connected graphs with at most 6 edges (n <= 7), one per isomorphism class\n")
        f.write("\n".join(e_le_6_lines) + "\n")

    print(f"total connected n<=6: {len(all_lines)}")
    print(f"total connected e<=6: {len(e_le_6_lines)}")

    try:
        import networkx as nx
    except ImportError:
        return
    for line in all_lines + e_le_6_lines:
        g = nx.from_graph6_bytes(line.encode())
        assert nx.is_connected(g), line
    print("networkx cross-check passed")


if __name__ == "__main__":
    sys.exit(main())
