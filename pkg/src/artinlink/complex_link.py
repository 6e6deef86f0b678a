"""The presentation 2-complex of a triangular presentation and its link.

The complex has a single 0-cell, one 1-cell per generator and one
triangular 2-cell per relator h^-1 u v.  The link of the 0-cell is the
graph of directions there: each 1-cell g contributes a head vertex
(written ``g``) and a tail vertex (written ``g_bar``), and each corner
of a 2-cell contributes an edge.  For consecutive boundary letters
l1 l2 the corner joins the terminal end of l1 to the initial end of l2,
which for a boundary h^-1 u v yields exactly

    bottom {h_bar, u_bar},  middle {u, v_bar},  top {v, h}.

Vertices fall into four levels: hub tails at level 1, non-hub tails at
level 2, non-hub heads at level 3 and hub heads at level 4.  Every edge
joins adjacent levels, so links are bipartite.  Edges carry their
2-cell corner as provenance, the hub of that 2-cell as their local
piece, and an optional exact angle (a Fraction, in units of pi).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import InternalInconsistencyError
from .presentations import HubRecord, Presentation
from .words import Letter

HEAD = "head"
TAIL = "tail"


class NotTriangularError(ValueError):
    """The presentation is not in triangular (length-3) form."""


class VertexNotFoundError(KeyError):
    pass


class LinkVertex(NamedTuple):
    gen: str
    end: str  # HEAD or TAIL
    level: int  # 1..4
    special: bool  # arises from a vertex of the defining graph

    @property
    def bar_name(self) -> str:
        return self.gen if self.end == HEAD else f"{self.gen}_bar"

    def __str__(self) -> str:
        return self.bar_name


class TwoCell(NamedTuple):
    boundary: tuple[Letter, Letter, Letter]  # (h^-1, u, v)
    hub: str
    left: str  # u
    right: str  # v
    source: tuple


class TwoComplex:
    """One 0-cell, a 1-cell per generator, a triangular 2-cell per relator."""

    def __init__(self, presentation: Presentation, cells: Iterable[TwoCell]):
        self.presentation = presentation
        self.cells = tuple(cells)
        self.zero_cells = 1
        self.one_cells = tuple(presentation.generators)
        # Squared lengths, so sqrt(2) stays exact; default is the unit metric.
        self.one_cell_lengths_sq = {g: 1 for g in self.one_cells}

    def __repr__(self) -> str:
        return (
            f"TwoComplex(1 zero-cell, {len(self.one_cells)} one-cells, "
            f"{len(self.cells)} two-cells)"
        )


def _hub_rotation(letters) -> tuple[Letter, Letter, Letter] | None:
    """Rotate a length-3 cyclic boundary to the form (h^-1, u, v)."""
    if len(letters) != 3:
        return None
    negs = [i for i, lt in enumerate(letters) if lt.exp == -1]
    if len(negs) != 1:
        return None
    i = negs[0]
    rotated = letters[i:] + letters[:i]
    return rotated  # (h^-1, u, v)


def _infer_hub_records(p: Presentation) -> tuple[HubRecord, ...]:
    """Reconstruct relation chains from the relators alone.

    Used for hand-built triangular presentations without provenance;
    the cycle is started at its lexicographically least generator, and
    its first two entries are then treated as the special ones.
    """
    chains: dict[str, dict[str, str]] = {}
    labels: dict[str, int] = {}
    for r in p.relators:
        rot = _hub_rotation(r.letters)
        if rot is None:
            raise NotTriangularError(f"relator {r} is not of the form h^-1 u v")
        h, u, v = rot[0].gen, rot[1].gen, rot[2].gen
        chains.setdefault(h, {})[u] = v
        labels[h] = labels.get(h, 0) + 1
    records = []
    for h in sorted(chains):
        succ = chains[h]
        with_pred = set(succ.values())
        starts = sorted(set(succ) - with_pred)
        start = starts[0] if starts else min(succ)  # open chain vs closed cycle
        cycle = [start]
        while cycle[-1] in succ:
            nxt = succ[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
        if len({*cycle}) != len(cycle) or len(succ) != labels[h]:
            raise NotTriangularError(f"relators of hub {h!r} do not chain up")
        records.append(HubRecord(h, tuple(cycle), labels[h], (cycle[0], cycle[1])))
    return tuple(records)


def build_complex(p: Presentation) -> TwoComplex:
    """Glue one triangular 2-cell per relator h^-1 u v.

    Raises :class:`NotTriangularError` if any relator is not a
    length-3 word with exactly one inverted letter.
    """
    records = p.hub_records or _infer_hub_records(p)
    hubs = {rec.hub for rec in records}
    cells = []
    for r in p.relators:
        rot = _hub_rotation(r.letters)
        if rot is None or rot[0].gen not in hubs:
            raise NotTriangularError(f"relator {r} is not of the form h^-1 u v")
        h, u, v = rot
        cells.append(
            TwoCell(tuple(rot), h.gen, u.gen, v.gen, p.provenance.get(r, (r, 0)))
        )
    complex_ = TwoComplex(
        Presentation(p.generators, p.relators, p.provenance, records), cells
    )
    return complex_


class LinkEdge(NamedTuple):
    a: LinkVertex
    b: LinkVertex  # a < b
    kind: str  # "bottom" | "middle" | "top"
    cell: int  # index of the 2-cell
    corner: int  # 0, 1, 2 around the boundary (h^-1 u, u v, v h^-1)
    piece: str  # hub generator of the cell, i.e. the local piece
    angle: Fraction | None = None  # exact multiple of pi


BOTTOM, MIDDLE, TOP = "bottom", "middle", "top"
_KIND_BY_LEVELS = {(1, 2): BOTTOM, (2, 3): MIDDLE, (3, 4): TOP}


class LinkGraph:
    """The link of the unique 0-cell, as an undirected simple graph."""

    def __init__(self, vertices: Iterable[LinkVertex], edges: Iterable[LinkEdge]):
        self.vertices = tuple(sorted(set(vertices)))
        self.edges = tuple(edges)
        self._vertex_set = set(self.vertices)
        seen: set[tuple[LinkVertex, LinkVertex]] = set()
        adj: dict[LinkVertex, list[tuple[LinkVertex, int]]] = {
            v: [] for v in self.vertices
        }
        for idx, e in enumerate(self.edges):
            if e.a not in self._vertex_set or e.b not in self._vertex_set:
                raise InternalInconsistencyError(f"edge {e} uses unknown vertex")
            if (e.a, e.b) in seen:
                raise InternalInconsistencyError(
                    f"parallel link edge between {e.a} and {e.b}"
                )
            if abs(e.a.level - e.b.level) != 1:
                raise InternalInconsistencyError(
                    f"link edge {e.a}-{e.b} skips a level"
                )
            seen.add((e.a, e.b))
            adj[e.a].append((e.b, idx))
            adj[e.b].append((e.a, idx))
        self.adjacency = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._edge_index = {(e.a, e.b): i for i, e in enumerate(self.edges)}

    # -- basic accessors -------------------------------------------------

    def degree(self, v: LinkVertex) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: LinkVertex, b: LinkVertex) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self._edge_index

    def edge_index(self, a: LinkVertex, b: LinkVertex) -> int:
        if a > b:
            a, b = b, a
        return self._edge_index[(a, b)]

    def vertex(self, gen: str, end: str) -> LinkVertex:
        for v in self.vertices:
            if v.gen == gen and v.end == end:
                return v
        raise VertexNotFoundError(f"{gen}/{end}")

    @property
    def special_vertices(self) -> tuple[LinkVertex, ...]:
        return tuple(v for v in self.vertices if v.special)

    def middle_edges(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if e.kind == MIDDLE)

    # -- subgraphs -------------------------------------------------------

    def subgraph(self, edge_indices: Iterable[int]) -> "LinkGraph":
        idxs = sorted(set(edge_indices))
        edges = [self.edges[i] for i in idxs]
        vertices = {e.a for e in edges} | {e.b for e in edges}
        return LinkGraph(vertices, edges)

    def induced(self, vertices: Iterable[LinkVertex]) -> "LinkGraph":
        vs = set(vertices)
        for v in vs:
            if v not in self._vertex_set:
                raise VertexNotFoundError(str(v))
        edges = [e for e in self.edges if e.a in vs and e.b in vs]
        return LinkGraph(vs, edges)

    def middle_subgraph(self) -> "LinkGraph":
        return self.subgraph(self.middle_edges())

    def neighborhood(self, v: LinkVertex, radius: int) -> "LinkGraph":
        """Induced subgraph on vertices within edge-distance ``radius``."""
        if v not in self._vertex_set:
            raise VertexNotFoundError(str(v))
        dist = {v: 0}
        queue = deque([v])
        while queue:
            cur = queue.popleft()
            if dist[cur] == radius:
                continue
            for nb, _ in self.adjacency[cur]:
                if nb not in dist:
                    dist[nb] = dist[cur] + 1
                    queue.append(nb)
        return self.induced(dist)

    def local_pieces(self) -> dict[str, tuple[int, ...]]:
        """Edge indices grouped by the hub of their 2-cell."""
        out: dict[str, list[int]] = {}
        for i, e in enumerate(self.edges):
            out.setdefault(e.piece, []).append(i)
        return {piece: tuple(idxs) for piece, idxs in sorted(out.items())}

    def components(self) -> list[tuple[tuple[LinkVertex, ...], tuple[int, ...]]]:
        seen: set[LinkVertex] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                cur = queue.popleft()
                for nb, _ in self.adjacency[cur]:
                    if nb not in comp:
                        comp.add(nb)
                        queue.append(nb)
            seen |= comp
            edge_idxs = tuple(
                i for i, e in enumerate(self.edges) if e.a in comp
            )
            out.append((tuple(sorted(comp)), edge_idxs))
        return out

    def is_forest(self) -> bool:
        return all(
            len(vs) == len(es) + 1 for vs, es in self.components()
        )

    # -- metric ----------------------------------------------------------

    def with_angles(self, angle_of: Mapping[tuple[int, int], Fraction]) -> "LinkGraph":
        """Copy of the link with each edge given the angle of its corner."""
        edges = [
            e._replace(angle=angle_of[(e.cell, e.corner)]) for e in self.edges
        ]
        return LinkGraph(self.vertices, edges)

    @property
    def angles_assigned(self) -> bool:
        return all(e.angle is not None for e in self.edges)

    # -- export ----------------------------------------------------------

    def to_dot(self) -> str:
        """Graphviz export: four ranks by level, bars as g_bar, middle
        edges bold, special vertices double-circled."""
        lines = ["graph link {", "  rankdir=BT;", "  node [shape=circle];"]
        for level in (1, 2, 3, 4):
            members = [v for v in self.vertices if v.level == level]
            if not members:
                continue
            lines.append(f"  {{ rank=same;  // level {level}")
            for v in members:
                shape = ", shape=doublecircle" if v.special else ""
                lines.append(f'    "{v.bar_name}" [label="{v.bar_name}"{shape}];')
            lines.append("  }")
        for e in self.edges:
            style = " [style=bold]" if e.kind == MIDDLE else ""
            lines.append(f'  "{e.a.bar_name}" -- "{e.b.bar_name}"{style};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"LinkGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def _terminal(lt: Letter, vertex_of) -> LinkVertex:
    return vertex_of(lt.gen, HEAD if lt.exp == 1 else TAIL)


def _initial(lt: Letter, vertex_of) -> LinkVertex:
    return vertex_of(lt.gen, TAIL if lt.exp == 1 else HEAD)


def build_link(k: TwoComplex) -> LinkGraph:
    """Two vertices per 1-cell, one edge per 2-cell corner."""
    p = k.presentation
    hubs = p.hubs
    special = p.special_generators

    cache: dict[tuple[str, str], LinkVertex] = {}

    def vertex_of(gen: str, end: str) -> LinkVertex:
        key = (gen, end)
        got = cache.get(key)
        if got is None:
            if gen in hubs:
                level = 4 if end == HEAD else 1
            else:
                level = 3 if end == HEAD else 2
            got = LinkVertex(gen, end, level, gen in special)
            cache[key] = got
        return got

    vertices = [vertex_of(g, end) for g in p.generators for end in (HEAD, TAIL)]
    edges = []
    for cell_idx, cell in enumerate(k.cells):
        letters = cell.boundary
        for corner in range(3):
            l1, l2 = letters[corner], letters[(corner + 1) % 3]
            a = _terminal(l1, vertex_of)
            b = _initial(l2, vertex_of)
            if a > b:
                a, b = b, a
            kind = _KIND_BY_LEVELS.get(tuple(sorted((a.level, b.level))))
            if kind is None:
                raise InternalInconsistencyError(
                    f"corner {corner} of cell {cell_idx} joins levels "
                    f"{a.level} and {b.level}"
                )
            edges.append(LinkEdge(a, b, kind, cell_idx, corner, cell.hub))
    return LinkGraph(vertices, edges)
