"""Catalogs of k-vertex trees up to isomorphism.

Trees are generated by leaf extension: every class on n vertices arises by
attaching one new leaf to some class on n-1 vertices (remove any leaf to see
this), so extending every catalog entry at every vertex and deduplicating by
canonical code is exhaustive.  The published order puts the path first and
the star second (for k <= 3 the two coincide and the star index aliases the
path); all remaining entries follow in ascending canonical-code order, which
makes catalog positions stable across runs and platforms.

The default size cap keeps accidental k^k-ish workloads out of scripts; pass
a larger ``max_k`` explicitly to go beyond it.  The brute-force cross-check
for catalog sizes lives in the test suite and in
``scripts/count_trees_bruteforce.py``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .config import DEFAULT_MAX_K
from .generators import make_path, make_star
from .trees import Tree, canonical_code, make_tree


@dataclass(frozen=True)
class TreeCatalog:
    """All k-vertex trees up to isomorphism, in published order.

    ``entries[i]`` is the representative at 0-based position i and
    ``codes[i]`` its canonical code.  ``index_of`` maps a code to its
    1-based position, the numbering used in reports and profile coordinate
    talk; subtract 1 to index ``entries``.  ``path_index`` and
    ``star_index`` are plain 0-based list indices: path at 0 always, star
    at 1 for k >= 4 and 0 for the degenerate small sizes where path and
    star coincide.
    """

    k: int
    entries: tuple[Tree, ...]
    codes: tuple[bytes, ...]
    index_of: dict[bytes, int] = field(repr=False)
    path_index: int = 0
    star_index: int = 0

    @property
    def count(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=None)
def _classes(n: int) -> dict[bytes, Tree]:
    """Canonical code -> representative for every n-vertex class."""
    if n == 1:
        t = make_tree(1, [])
        return {canonical_code(t): t}
    out: dict[bytes, Tree] = {}
    for _, parent in sorted(_classes(n - 1).items()):
        for v in range(n - 1):
            t = Tree(n, parent.edges + ((v, n - 1),))
            code = canonical_code(t)
            if code not in out:
                out[code] = t
    return out


@lru_cache(maxsize=None)
def _catalog(k: int) -> TreeCatalog:
    classes = _classes(k)
    path_code = canonical_code(make_path(k))
    star_code = canonical_code(make_star(k))
    head = [path_code]
    if star_code != path_code:
        head.append(star_code)
    tail = sorted(c for c in classes if c not in head)
    codes = tuple(head + tail)
    entries = tuple(classes[c] for c in codes)
    index_of = {c: i + 1 for i, c in enumerate(codes)}
    return TreeCatalog(
        k=k,
        entries=entries,
        codes=codes,
        index_of=index_of,
        path_index=0,
        star_index=index_of[star_code] - 1,
    )


def enumerate_trees(k: int, max_k: int = DEFAULT_MAX_K) -> TreeCatalog:
    """Catalog of all k-vertex trees in published order.

    Raises ValueError beyond the size cap; raise the cap explicitly for
    bigger catalogs (generation cost grows with the class counts).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > max_k:
        raise ValueError(f"k = {k} exceeds the catalog cap {max_k}; pass a larger max_k to allow it")
    return _catalog(k)


def catalog_count(k: int, max_k: int = DEFAULT_MAX_K) -> int:
    """Number of k-vertex trees up to isomorphism."""
    return enumerate_trees(k, max_k).count


@lru_cache(maxsize=None)
def _bounded_classes(n: int, dmax: int) -> dict[bytes, Tree]:
    """Degree-bounded classes; closed under leaf removal, so the same
    extension argument applies with attachment restricted to vertices of
    degree < dmax."""
    if n == 1:
        t = make_tree(1, [])
        return {canonical_code(t): t}
    out: dict[bytes, Tree] = {}
    for _, parent in sorted(_bounded_classes(n - 1, dmax).items()):
        deg = [0] * (n - 1)
        for u, v in parent.edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(n - 1):
            if deg[v] >= dmax:
                continue
            t = Tree(n, parent.edges + ((v, n - 1),))
            code = canonical_code(t)
            if code not in out:
                out[code] = t
    return out


def enumerate_trees_bounded_degree(n: int, dmax: int = 3, max_n: int = 16) -> tuple[Tree, ...]:
    """All n-vertex trees with maximum degree <= dmax, ascending code order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the cap {max_n}; pass a larger max_n to allow it")
    classes = _bounded_classes(n, dmax)
    return tuple(classes[c] for c in sorted(classes))
