"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's window enumerator:
they test every vertex subset for connectivity and classify by canonical
code, so agreement with the engine is meaningful evidence.
"""

from __future__ import annotations

import itertools

import pytest

from treelab.catalog import enumerate_trees
from treelab.generators import prufer_to_tree
from treelab.trees import Tree, adjacency, canonical_code, make_tree


def subset_is_connected(adj, subset) -> bool:
    members = set(subset)
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in members and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(members)


def induced_subtree(t: Tree, subset) -> Tree:
    pos = {v: i for i, v in enumerate(subset)}
    edges = tuple(
        (pos[a], pos[b]) for a, b in t.edges if a in pos and b in pos
    )
    return make_tree(len(subset), edges)


def naive_window_census(t: Tree, k: int) -> dict[bytes, int]:
    """Count connected k-subsets by brute force over all C(n,k) subsets."""
    adj = adjacency(t)
    out: dict[bytes, int] = {}
    for subset in itertools.combinations(range(t.n), k):
        if subset_is_connected(adj, subset):
            code = canonical_code(induced_subtree(t, subset))
            out[code] = out.get(code, 0) + 1
    return out


def naive_copy_count(pattern: Tree, host: Tree) -> int:
    want = canonical_code(pattern)
    return naive_window_census(host, pattern.n).get(want, 0)


def prufer_class_count(n: int) -> int:
    """Number of tree shapes on n vertices by decoding every sequence."""
    if n <= 2:
        return 1
    codes = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        codes.add(canonical_code(prufer_to_tree(seq, n)))
    return len(codes)


def hosts_up_to(n: int) -> list[Tree]:
    """One representative of every tree shape with at most n vertices."""
    out: list[Tree] = []
    for m in range(1, n + 1):
        out.extend(enumerate_trees(m).entries)
    return out


@pytest.fixture(scope="session")
def small_hosts() -> list[Tree]:
    return hosts_up_to(9)
