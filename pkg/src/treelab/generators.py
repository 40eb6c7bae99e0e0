"""Constructors for the tree families the toolkit studies.

Deterministic builders (paths, stars, millipedes), the leaf-to-leaf gluing
operator and its iterated and convex-combination forms, and seeded random
samplers.  All constructors emit labels in a fixed documented scheme so that
two calls with equal arguments return identical Tree values, not merely
isomorphic ones.
"""

from __future__ import annotations

import heapq
import random
from fractions import Fraction

from .config import DEFAULT_VERTEX_CAP
from .trees import Tree, degrees, leaves, lowest_leaf, make_tree


class VertexCapError(ValueError):
    """Raised when a requested construction would exceed the vertex budget."""


def make_path(n: int) -> Tree:
    """Path on vertices 0..n-1 in label order."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got n={n}")
    return make_tree(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Tree:
    """Star with center 0 and leaves 1..n-1."""
    if n < 1:
        raise ValueError(f"star needs at least one vertex, got n={n}")
    return make_tree(n, [(0, i) for i in range(1, n)])


def make_millipede(d: int, length: int) -> Tree:
    """Caterpillar whose every internal vertex has degree d + 2.

    Spine vertices 0..length-1 form a path; spine vertex i carries the d
    legs length + i*d .. length + i*d + d - 1; two further leaves close the
    spine ends so the end vertices also reach degree d + 2.  Total size is
    length*(d+1) + 2.  d=0 gives a path, d=1 the binary caterpillar.
    """
    if d < 0:
        raise ValueError(f"leg count per spine vertex must be >= 0, got d={d}")
    if length < 1:
        raise ValueError(f"spine length must be >= 1, got length={length}")
    edges: list[tuple[int, int]] = [(i, i + 1) for i in range(length - 1)]
    for i in range(length):
        for j in range(d):
            edges.append((i, length + i * d + j))
    end_a = length + length * d
    end_b = end_a + 1
    edges.append((0, end_a))
    edges.append((length - 1, end_b))
    return make_tree(length * (d + 1) + 2, edges)


def _require_leaf(t: Tree, v: int, label: str) -> None:
    deg = degrees(t)
    if not (0 <= v < t.n):
        raise ValueError(f"{label}={v} is not a vertex of a tree on {t.n} vertices")
    if deg[v] > 1:
        raise ValueError(f"{label}={v} has degree {deg[v]}, not a leaf")


def glue(t: Tree, s: Tree, k: int, leaf_t: int, leaf_s: int) -> Tree:
    """Join two trees through a fresh path of k-1 connector vertices.

    The result keeps t's labels, shifts s's labels by t.n, and appends the
    connectors as t.n+s.n .. t.n+s.n+k-2 in path order from the t side.
    The connector path has k edges, so any window of k consecutive vertices
    straddling the join touches at most one vertex of t and one of s.
    """
    if k < 2:
        raise ValueError(f"window size must be >= 2, got k={k}")
    _require_leaf(t, leaf_t, "leaf_t")
    _require_leaf(s, leaf_s, "leaf_s")
    base_s = t.n
    base_c = t.n + s.n
    edges = list(t.edges)
    edges.extend((u + base_s, v + base_s) for u, v in s.edges)
    prev = leaf_t
    for i in range(k - 1):
        edges.append((prev, base_c + i))
        prev = base_c + i
    edges.append((prev, base_s + leaf_s))
    return make_tree(base_c + k - 1, edges)


def glue_size(n_t: int, n_s: int, k: int) -> int:
    return n_t + n_s + k - 1


def glue_power_size(n_t: int, k: int, power: int) -> int:
    return power * n_t + (power - 1) * (k - 1)


def glue_power(t: Tree, k: int, power: int, vertex_cap: int | None = None) -> Tree:
    """Iterate gluing power-1 times, always joining at the lowest leaves.

    Equivalent, label for label, to folding glue() over copies of t with
    the lowest-labelled leaf chosen on both sides at every step; built in
    one pass with a degree array and a lazy-deletion heap instead of
    re-scanning the accumulated tree.
    """
    if power < 1:
        raise ValueError(f"power must be >= 1, got {power}")
    if k < 2:
        raise ValueError(f"window size must be >= 2, got k={k}")
    if vertex_cap is not None:
        projected = glue_power_size(t.n, k, power)
        if projected > vertex_cap:
            raise VertexCapError(
                f"gluing {power} copies would use {projected} vertices, cap is {vertex_cap}"
            )
    if power == 1:
        return t
    t_deg = degrees(t)
    t_leaves = leaves(t)
    anchor = lowest_leaf(t)
    deg = list(t_deg)
    edges = list(t.edges)
    heap = list(t_leaves)
    for _ in range(power - 1):
        while True:
            x = heapq.heappop(heap)
            if deg[x] <= 1:
                break
        base_s = len(deg)
        edges.extend((u + base_s, v + base_s) for u, v in t.edges)
        deg.extend(t_deg)
        base_c = base_s + t.n
        y = base_s + anchor
        prev = x
        for i in range(k - 1):
            edges.append((prev, base_c + i))
            prev = base_c + i
        edges.append((prev, y))
        deg[x] += 1
        deg[y] += 1
        deg.extend([2] * (k - 1))
        if deg[x] <= 1:
            heapq.heappush(heap, x)
        if deg[y] <= 1:
            heapq.heappush(heap, y)
        for v in t_leaves:
            if v != anchor:
                heapq.heappush(heap, base_s + v)
    return make_tree(len(deg), edges)


def _window_total(t: Tree, k: int) -> int:
    # Local import: counting pulls in catalog, which needs the builders above.
    from .counting import count_connected_subsets

    return count_connected_subsets(t, k)


def _glued_pair_rate(t: Tree, k: int) -> int:
    """Windows contributed per copy of t inside a long chain of copies.

    Each interior copy in a chain brings its own windows plus the windows
    that straddle one connector path; both are read off the two-copy glue:
    rate = total(t glued to t) - total(t).
    """
    anchor = lowest_leaf(t)
    doubled = glue(t, t, k, anchor, anchor)
    return _window_total(doubled, k) - _window_total(t, k)


def convex_glue_multiplicities(
    t: Tree,
    s: Tree,
    k: int,
    alpha: int,
    beta: int,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    nominal: bool = False,
) -> tuple[int, int]:
    """Copy counts (m_t, m_s) used by convex_glue.

    Nominal mode balances bare window totals: m_t : m_s =
    alpha*Z(s) : (beta-alpha)*Z(t), reduced.  Default mode balances the
    per-copy rates inside a chain (window total plus one connector's
    straddling windows), which is what actually governs the mixture as the
    construction grows, then scales the pair as far as the vertex budget
    allows while preserving the ratio.
    """
    if k < 2:
        raise ValueError(f"window size must be >= 2, got k={k}")
    if not (0 < alpha < beta):
        raise ValueError(f"weights must satisfy 0 < alpha < beta, got alpha={alpha} beta={beta}")
    if nominal:
        rate_t = _window_total(t, k)
        rate_s = _window_total(s, k)
    else:
        rate_t = _glued_pair_rate(t, k)
        rate_s = _glued_pair_rate(s, k)
    if rate_t <= 0 or rate_s <= 0:
        raise ValueError(
            f"both sides must contain at least one window of {k} vertices "
            f"(got rates {rate_t} and {rate_s})"
        )
    ratio = Fraction(alpha * rate_s, (beta - alpha) * rate_t)

    def size(m_t: int, m_s: int) -> int:
        return glue_size(glue_power_size(t.n, k, m_t), glue_power_size(s.n, k, m_s), k)

    if nominal:
        m_t0, m_s0 = ratio.numerator, ratio.denominator
        if size(m_t0, m_s0) > vertex_cap:
            raise VertexCapError(
                f"balanced pair ({m_t0}, {m_s0}) needs {size(m_t0, m_s0)} vertices, "
                f"cap is {vertex_cap}"
            )
        return m_t0, m_s0
    # Largest pair under the cap with m_t/m_s as close to the ratio as
    # integers allow.  Parametrize by the smaller multiplier and round the
    # larger one, so the rounding error is relative to the big count.
    if ratio >= 1:
        def pair(m: int) -> tuple[int, int]:
            return max(1, round(ratio * m)), m
    else:
        def pair(m: int) -> tuple[int, int]:
            return m, max(1, round(m / ratio))
    if size(*pair(1)) > vertex_cap:
        raise VertexCapError(
            f"smallest balanced pair {pair(1)} needs {size(*pair(1))} vertices, "
            f"cap is {vertex_cap}"
        )
    lo, hi = 1, 2
    while size(*pair(hi)) <= vertex_cap:
        lo, hi = hi, hi * 2
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if size(*pair(mid)) <= vertex_cap:
            lo = mid
        else:
            hi = mid
    return pair(lo)


def convex_glue(
    t: Tree,
    s: Tree,
    k: int,
    alpha: int,
    beta: int,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    nominal: bool = False,
) -> Tree:
    """Chain copies of t and s so their windows mix in ratio alpha : beta - alpha.

    Builds glue_power(t, m_t) joined to glue_power(s, m_s) through one more
    connector path, with (m_t, m_s) from convex_glue_multiplicities.  The
    profile of the result approaches the prescribed convex combination of
    the two input profiles as the vertex budget grows.
    """
    m_t, m_s = convex_glue_multiplicities(
        t, s, k, alpha, beta, vertex_cap=vertex_cap, nominal=nominal
    )
    left = glue_power(t, k, m_t)
    right = glue_power(s, k, m_s)
    return glue(left, right, k, lowest_leaf(left), lowest_leaf(right))


def prufer_to_tree(sequence: list[int] | tuple[int, ...], n: int) -> Tree:
    """Decode a length n-2 sequence over 0..n-1 into the tree it encodes."""
    if n < 2:
        raise ValueError(f"decoding needs n >= 2, got n={n}")
    if len(sequence) != n - 2:
        raise ValueError(f"sequence length must be n-2={n - 2}, got {len(sequence)}")
    remaining = [0] * n
    for x in sequence:
        if not (0 <= x < n):
            raise ValueError(f"sequence entry {x} outside 0..{n - 1}")
        remaining[x] += 1
    edges: list[tuple[int, int]] = []
    heap = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(heap)
    for x in sequence:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(heap, x)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((a, b))
    return make_tree(n, edges)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labelled tree on n vertices, deterministic in seed."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if n == 1:
        return make_tree(1, [])
    if n == 2:
        return make_tree(2, [(0, 1)])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_to_tree(sequence, n)


def random_tree_bounded_degree(n: int, dmax: int, rng: random.Random) -> Tree:
    """Random tree grown by attachment, keeping every degree <= dmax.

    Not uniform over bounded-degree trees; intended as a cheap source of
    varied test instances.  Pass random.Random(seed) for reproducibility.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if dmax < 2 and n > 2:
        raise ValueError(f"dmax={dmax} cannot accommodate {n} vertices")
    edges: list[tuple[int, int]] = []
    deg = [0] * n
    eligible = [0]
    for v in range(1, n):
        i = rng.randrange(len(eligible))
        u = eligible[i]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
        if deg[u] >= dmax:
            eligible[i] = eligible[-1]
            eligible.pop()
        if deg[v] < dmax:
            eligible.append(v)
    return make_tree(n, edges)
