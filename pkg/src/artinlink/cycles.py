"""Embedded loops in links: girth, minimum-angle cycles, enumeration.

Links built by this package are bipartite (every edge joins adjacent
levels) and simple, so embedded loops have even length >= 4.  The girth
search therefore first scans for 4-loops via common neighbours and only
then falls back to the general per-edge algorithm: remove an edge,
take a shortest path between its ends, and close it up.

Angles are exact Fractions in units of pi; the weighted search scales
them to integers, so no comparison ever happens in floating point.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .complex_link import LinkGraph, LinkVertex

LOOP_ENUMERATION_GUARD = 8


class UnassignedAnglesError(ValueError):
    """The link has edges without angles."""


class LimitExceededError(ValueError):
    """Requested loop length is beyond the desk-scale guard."""


@dataclass(frozen=True)
class EmbeddedLoop:
    """A simple cycle in a link, stored in canonical rotation.

    ``vertices`` lists each vertex once; consecutive vertices (and the
    last/first pair) are joined by ``edge_indices`` into the owning
    link.  The canonical form is the least vertex tuple over all
    rotations and both directions, so equal loops compare equal.
    """

    vertices: tuple[LinkVertex, ...]
    edge_indices: tuple[int, ...]
    angle_sum: Fraction | None = None  # units of pi

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def middle_edge_count(self, link: LinkGraph) -> int:
        return sum(1 for i in self.edge_indices if link.edges[i].kind == "middle")

    def __str__(self) -> str:
        names = [v.bar_name for v in self.vertices]
        return " - ".join(names + [names[0]])


def _canonical_cycle(vertices: list[LinkVertex]) -> tuple[LinkVertex, ...]:
    n = len(vertices)
    best = None
    for seq in (vertices, vertices[::-1]):
        doubled = seq + seq
        for i in range(n):
            cand = tuple(doubled[i : i + n])
            if best is None or cand < best:
                best = cand
    return best


def make_loop(link: LinkGraph, vertices: list[LinkVertex]) -> EmbeddedLoop:
    """Canonicalize and validate a vertex cycle against ``link``."""
    if len(vertices) != len(set(vertices)):
        raise ValueError("loop vertices must be pairwise distinct")
    if len(vertices) < 3:
        raise ValueError("a loop needs at least 3 vertices")
    canon = _canonical_cycle(list(vertices))
    idxs = []
    for i, v in enumerate(canon):
        w = canon[(i + 1) % len(canon)]
        if not link.has_edge(v, w):
            raise ValueError(f"loop step {v} - {w} is not a link edge")
        idxs.append(link.edge_index(v, w))
    angles = [link.edges[i].angle for i in idxs]
    total = sum(angles, Fraction(0)) if all(a is not None for a in angles) else None
    return EmbeddedLoop(canon, tuple(idxs), total)


def _four_loops(link: LinkGraph) -> list[EmbeddedLoop]:
    """All embedded 4-loops, via pairs of vertices with >= 2 common
    neighbours.  Valid for simple graphs."""
    pair_hubs: dict[tuple[LinkVertex, LinkVertex], list[LinkVertex]] = {}
    for w in link.vertices:
        nbs = [nb for nb, _ in link.adjacency[w]]
        for x, y in combinations(sorted(nbs), 2):
            pair_hubs.setdefault((x, y), []).append(w)
    loops = []
    for (x, y), hubs in pair_hubs.items():
        if len(hubs) < 2:
            continue
        for w1, w2 in combinations(hubs, 2):
            loops.append(make_loop(link, [x, w1, y, w2]))
    return sorted(set(loops), key=lambda lp: lp.vertices)


def has_short_loop(link: LinkGraph) -> bool:
    """Whether the link has an embedded loop of length < 6.

    Links are bipartite and simple, so this is exactly "some two
    vertices share two neighbours", i.e. girth 4.
    """
    seen: set[tuple[LinkVertex, LinkVertex]] = set()
    for w in link.vertices:
        nbs = link.adjacency[w]
        for i in range(len(nbs)):
            x = nbs[i][0]
            for j in range(i + 1, len(nbs)):
                key = (x, nbs[j][0])
                if key in seen:
                    return True
                seen.add(key)
    return False


def _bfs_shortest_path(
    link: LinkGraph,
    source: LinkVertex,
    target: LinkVertex,
    banned_edge: int,
    max_len: int | None,
) -> list[LinkVertex] | None:
    """Shortest path avoiding one edge, among paths of length <= max_len."""
    from collections import deque

    parent: dict[LinkVertex, LinkVertex | None] = {source: None}
    depth = {source: 0}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        if cur == target:
            break
        if max_len is not None and depth[cur] >= max_len:
            continue
        for nb, ei in link.adjacency[cur]:
            if ei == banned_edge or nb in parent:
                continue
            parent[nb] = cur
            depth[nb] = depth[cur] + 1
            queue.append(nb)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def girth(link: LinkGraph) -> tuple[int | None, EmbeddedLoop | None]:
    """Minimum edge count over embedded loops, with a canonical witness.

    Returns ``(None, None)`` for forests.  Ties between witness loops
    are broken by the canonical lexicographic vertex order.  A
    common-neighbour scan answers girth-4 links immediately; otherwise
    the per-edge-removal search runs.
    """
    if not link.edges:
        return None, None
    four = _four_loops(link)
    if four:
        return 4, four[0]
    return _girth_by_edge_removal(link)


def _girth_by_edge_removal(
    link: LinkGraph,
) -> tuple[int | None, EmbeddedLoop | None]:
    """Shortest cycle as min over edges of (shortest path avoiding the
    edge) + the edge itself."""
    best_len: int | None = None
    best_loop: EmbeddedLoop | None = None
    for ei, e in enumerate(link.edges):
        cap = None if best_len is None else best_len - 1
        path = _bfs_shortest_path(link, e.a, e.b, ei, cap)
        if path is None:
            continue
        loop = make_loop(link, path)
        if (
            best_len is None
            or loop.length < best_len
            or (loop.length == best_len and loop.vertices < best_loop.vertices)
        ):
            best_len, best_loop = loop.length, loop
    return best_len, best_loop


def min_angle_cycle(
    link: LinkGraph,
) -> tuple[Fraction | None, EmbeddedLoop | None]:
    """Minimum total angle over embedded loops, computed exactly.

    Angles must be assigned on every edge.  Ties prefer the shorter
    loop, then the canonically least one.  Returns ``(None, None)``
    for forests.
    """
    if not link.angles_assigned:
        raise UnassignedAnglesError("link has edges without angles")
    if not link.edges:
        return None, None
    for e in link.edges:
        if e.angle <= 0:
            raise UnassignedAnglesError(f"non-positive angle on edge {e.a}-{e.b}")

    # Scale the rational angles to integers for exact arithmetic.
    denom = 1
    for e in link.edges:
        denom = denom * e.angle.denominator // gcd(denom, e.angle.denominator)
    weight = [int(e.angle * denom) for e in link.edges]

    best: tuple[int, int, tuple] | None = None  # (weight, length, vertices)
    best_loop: EmbeddedLoop | None = None
    for ei, e in enumerate(link.edges):
        bound = None if best is None else best[0] - weight[ei]
        path = _dijkstra_path(link, weight, e.a, e.b, ei, bound)
        if path is None:
            continue
        loop = make_loop(link, path)
        total = sum(weight[i] for i in loop.edge_indices)
        key = (total, loop.length, loop.vertices)
        if best is None or key < best:
            best, best_loop = key, loop
    if best_loop is None:
        return None, None
    return best_loop.angle_sum, best_loop


def _dijkstra_path(
    link: LinkGraph,
    weight: list[int],
    source: LinkVertex,
    target: LinkVertex,
    banned_edge: int,
    bound: int | None,
) -> list[LinkVertex] | None:
    """Path minimizing (weight, hop count), avoiding one edge.

    Returns None when every path weighs more than ``bound``.  Breaking
    weight ties by hop count keeps witness loops as short as possible.
    """
    dist: dict[LinkVertex, tuple[int, int]] = {source: (0, 0)}
    parent: dict[LinkVertex, LinkVertex | None] = {source: None}
    done: set[LinkVertex] = set()
    heap: list[tuple[int, int, LinkVertex]] = [(0, 0, source)]
    while heap:
        d, hops, cur = heapq.heappop(heap)
        if cur in done:
            continue
        if bound is not None and d > bound:
            return None
        if cur == target:
            path = [target]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        done.add(cur)
        for nb, ei in link.adjacency[cur]:
            if ei == banned_edge or nb in done:
                continue
            cand = (d + weight[ei], hops + 1)
            if nb not in dist or cand < dist[nb]:
                dist[nb] = cand
                parent[nb] = cur
                heapq.heappush(heap, (cand[0], cand[1], nb))
    return None


def enumerate_short_loops(link: LinkGraph, max_len: int) -> list[EmbeddedLoop]:
    """All embedded loops of length <= ``max_len``, each once up to
    rotation and reflection, sorted canonically.

    ``max_len`` is capped at 8; longer enumerations are out of scope.
    """
    if max_len > LOOP_ENUMERATION_GUARD:
        raise LimitExceededError(
            f"max_len {max_len} exceeds the guard {LOOP_ENUMERATION_GUARD}"
        )
    if max_len < 3 or not link.edges:
        return []
    if max_len < 6:
        # Links are bipartite (levels alternate), so loops under length 6
        # are exactly the 4-loops; the common-neighbour scan finds them.
        return _four_loops(link) if max_len >= 4 else []
    loops: set[EmbeddedLoop] = set()
    order = {v: i for i, v in enumerate(link.vertices)}

    def extend(start: LinkVertex, path: list[LinkVertex], on_path: set[LinkVertex]):
        cur = path[-1]
        for nb, _ in link.adjacency[cur]:
            if nb == start and len(path) >= 3:
                # close a cycle; count each once: fix direction by the
                # neighbours of the minimal vertex
                if order[path[1]] < order[path[-1]]:
                    loops.add(make_loop(link, path))
                continue
            if nb in on_path or order[nb] <= order[start]:
                continue
            if len(path) == max_len:
                continue
            path.append(nb)
            on_path.add(nb)
            extend(start, path, on_path)
            on_path.remove(nb)
            path.pop()

    for start in link.vertices:
        extend(start, [start], {start})
    return sorted(loops, key=lambda lp: (lp.length, lp.vertices))
