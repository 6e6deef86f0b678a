"""Exhaustive verification batteries behind the ``verify-lemmas`` command.

Three sweeps:

* two-generator equivalences: replay the presentation rewriting
  symbolically for every label in a range;
* triangle girth: for every labelled oriented triangle the link girth
  is 6 and the middle-edge subgraph splits into (m+n+p-9) isolated
  edges plus three 3-chains;
* pattern oracle: over all oriented labelled graphs on up to five
  vertices (orbit-reduced: one representative per isomorphism class),
  the forbidden-pattern detector fires exactly when the link has an
  embedded 4-loop.  Links are bipartite and simple, so "an embedded
  4-loop exists" is the same statement as "girth < 6"; the girth
  routine itself is re-run on a deterministic subsample as a
  cross-check.  A second sweep turns one edge per graph (the
  canonically first) into a label-2 wildcard.

Enumeration is by canonical forms: a labelled state assigns each
vertex pair one of {absent, label...}, and a state is kept only if no
vertex permutation maps it to a lexicographically smaller state.
Orientations are then reduced modulo the automorphisms of the
labelled graph.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from multiprocessing import Pool

from .complex_link import build_complex, build_link
from .curvature import B2, assign_metric
from .cycles import girth, has_short_loop, min_angle_cycle
from .forbidden import detect_forbidden
from .presentations import (
    DefiningGraph,
    Orientation,
    build_triangular,
    triangle_presentation,
    verify_tietze_equivalence,
)


@dataclass
class BatteryResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status} {self.name}: {self.cases - len(self.failures)}/{self.cases} "
            f"cases in {self.elapsed:.1f}s"
        )


def battery_tietze(max_label: int = 50) -> BatteryResult:
    start = time.perf_counter()
    failures = []
    for m in range(2, max_label + 1):
        report = verify_tietze_equivalence(m)
        if not report.ok:
            failures.append(f"m={m}")
    return BatteryResult(
        "two-generator-equivalences",
        max_label - 1,
        failures,
        time.perf_counter() - start,
    )


def middle_decomposition(link) -> tuple[int, int, bool]:
    """(isolated edge count, 3-chain count, nothing else) of the middle
    subgraph."""
    mid = link.middle_subgraph()
    singles = chains = 0
    clean = True
    for vs, es in mid.components():
        if len(vs) == 2 and len(es) == 1:
            singles += 1
        elif len(vs) == 4 and len(es) == 3 and all(
            mid.degree(v) <= 2 for v in vs
        ):
            chains += 1
        else:
            clean = False
    return singles, chains, clean


def battery_triangle_girth(
    min_label: int = 3, max_label: int = 5
) -> BatteryResult:
    start = time.perf_counter()
    failures = []
    cases = 0
    rng = range(min_label, max_label + 1)
    for m in rng:
        for n in rng:
            for p in rng:
                cases += 1
                pres, _ = triangle_presentation(m, n, p)
                link = build_link(build_complex(pres))
                g, _ = girth(link)
                singles, chains, clean = middle_decomposition(link)
                if g != 6 or not clean or chains != 3 or singles != m + n + p - 9:
                    failures.append(f"(m,n,p)=({m},{n},{p})")
    return BatteryResult(
        "triangle-girth", cases, failures, time.perf_counter() - start
    )


# -- canonical enumeration of small labelled graphs ----------------------


def _pair_tables(n: int):
    """Vertex pairs of K_n and, per permutation, where each pair goes
    and whether its endpoints swap order."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        dest = []
        flip = []
        for a, b in pairs:
            x, y = perm[a], perm[b]
            dest.append(index[(x, y) if x < y else (y, x)])
            flip.append(x > y)
        tables.append((tuple(dest), tuple(flip)))
    return pairs, tables


def _source_tables(tables, m: int):
    """Per permutation: src such that permuted_state[j] = state[src[j]]."""
    out = []
    for dest, flip in tables:
        src = [0] * m
        flip_at = [False] * m
        for i, j in enumerate(dest):
            src[j] = i
            flip_at[j] = flip[i]
        out.append((tuple(src), tuple(flip_at)))
    return out


def _is_canonical(state: tuple[int, ...], srcs, transform=None) -> bool:
    m = len(state)
    for src, flip_at in srcs:
        for j in range(m):
            v = state[src[j]]
            if transform is not None and flip_at[j]:
                v = transform(v)
            if v < state[j]:
                return False
            if v > state[j]:
                break
    return True


def _canonical_form(state: tuple[int, ...], srcs, transform=None) -> tuple[int, ...]:
    m = len(state)
    best = state
    for src, flip_at in srcs:
        # lazy comparison; materialize a candidate only when it wins
        verdict = 0
        for j in range(m):
            v = state[src[j]]
            if transform is not None and flip_at[j]:
                v = transform(v)
            if v != best[j]:
                verdict = -1 if v < best[j] else 1
                break
        if verdict == -1:
            if transform is None:
                best = tuple(state[src[j]] for j in range(m))
            else:
                best = tuple(
                    transform(state[src[j]]) if flip_at[j] else state[src[j]]
                    for j in range(m)
                )
    return best


# Oriented pair states: 0 absent; labelled states come in (forward,
# backward) pairs, plus one wildcard code per label-2 edge.
_FLIP = {0: 0, 5: 5}
_FLIP.update({1: 2, 2: 1, 3: 4, 4: 3})
_ORIENTED_DECODE = {
    1: (3, Orientation.FORWARD),
    2: (3, Orientation.BACKWARD),
    3: (4, Orientation.FORWARD),
    4: (4, Orientation.BACKWARD),
    5: (2, Orientation.WILDCARD),
}


def _flip_value(v: int) -> int:
    return _FLIP[v]


def enumerate_oriented_states(
    n: int, labels: tuple[int, ...] = (3, 4)
) -> list[tuple[int, ...]]:
    """Canonical representatives of oriented labelled graphs on n vertices.

    States are tuples over the vertex pairs of K_n with values 0
    (absent) or an (label, direction) code.
    """
    pairs, tables = _pair_tables(n)
    m = len(pairs)
    srcs = _source_tables(tables, m)
    label_codes = {3: (1, 2), 4: (3, 4)}
    for lab in labels:
        if lab not in label_codes:
            raise ValueError(f"unsupported sweep label {lab}")

    undirected: list[tuple[int, ...]] = []
    base_values = [0] + [lab for lab in labels]

    def gen_undirected(prefix):
        if len(prefix) == m:
            undirected.append(tuple(prefix))
            return
        for v in base_values:
            prefix.append(v)
            gen_undirected(prefix)
            prefix.pop()

    gen_undirected([])
    canon_undirected = [s for s in undirected if _is_canonical(s, srcs)]

    out: list[tuple[int, ...]] = []
    for und in canon_undirected:
        present = [i for i, v in enumerate(und) if v]
        aut = [
            (src, flip_at)
            for src, flip_at in srcs
            if all(und[src[j]] == und[j] for j in range(m))
        ]
        base = list(und)
        for i in present:
            base[i] = label_codes[und[i]][0]

        def gen_orientations(idx):
            if idx == len(present):
                state = tuple(base)
                if _is_canonical(state, aut, _flip_value):
                    out.append(state)
                return
            i = present[idx]
            fwd, bwd = label_codes[und[i]]
            for code in (fwd, bwd):
                base[i] = code
                gen_orientations(idx + 1)
            base[i] = fwd

        gen_orientations(0)
    return out


def _orientations_of(und, present_branching, aut, label_codes):
    """Canonical direction choices for the branching edges of one
    undirected labelled state."""
    out = []
    base = list(und)

    def gen(idx):
        if idx == len(present_branching):
            state = tuple(base)
            if _is_canonical(state, aut, _flip_value):
                out.append(state)
            return
        i = present_branching[idx]
        fwd, bwd = label_codes[und[i]]
        for code in (fwd, bwd):
            base[i] = code
            gen(idx + 1)
        base[i] = und[i]

    gen(0)
    return out


def enumerate_triangle_free_oriented_states(
    n: int = 5, labels: tuple[int, ...] = (2, 3, 4)
) -> list[tuple[int, ...]]:
    """Canonical triangle-free oriented labelled graphs on n vertices.

    Label-2 edges are wildcards and carry no direction; every direction
    assignment of the other edges appears once per isomorphism class.
    """
    pairs, tables = _pair_tables(n)
    m = len(pairs)
    srcs = _source_tables(tables, m)
    pair_index = {p: i for i, p in enumerate(pairs)}
    triples = [
        tuple(
            pair_index[p]
            for p in ((a, b), (a, c), (b, c))
        )
        for a, b, c in combinations(range(n), 3)
    ]
    label_codes = {3: (1, 2), 4: (3, 4)}

    out = []
    for bits in product((0, 1), repeat=m):
        if any(all(bits[i] for i in t) for t in triples):
            continue
        present = [i for i, b in enumerate(bits) if b]
        for labelling in product(labels, repeat=len(present)):
            state = [0] * m
            for i, lab in zip(present, labelling):
                state[i] = lab
            state = tuple(state)
            if not _is_canonical(state, srcs):
                continue
            aut = [
                (src, flip_at)
                for src, flip_at in srcs
                if all(state[src[j]] == state[j] for j in range(m))
            ]
            base = list(state)
            branching = []
            for i in present:
                if state[i] == 2:
                    base[i] = 5  # wildcard code
                else:
                    branching.append(i)
            out.extend(_orientations_of(tuple(base), branching, aut, label_codes))
    return out


def b2_case(state: tuple[int, ...], n: int):
    """Exact B2 minimum-angle check for one triangle-free graph.

    Returns (holds: bool, is_tight: bool, witness_is_4_middles: bool).
    """
    gamma = graph_from_state(state, n)
    pres, _ = build_triangular(gamma)
    k = build_complex(pres)
    link = build_link(k)
    metric = assign_metric(k, link, B2)
    angled = link.with_angles(metric.corner_angles)
    value, witness = min_angle_cycle(angled)
    if value is None:
        return True, False, False
    holds = value >= Fraction(2)
    tight = value == Fraction(2)
    four_middles = (
        witness is not None
        and witness.length == 4
        and witness.middle_edge_count(angled) == 4
    )
    return holds, tight, four_middles


def _b2_chunk(args):
    states, n = args
    failures = []
    for state in states:
        holds, _, _ = b2_case(state, n)
        if not holds:
            failures.append(f"state={state}")
    return len(states), failures


def battery_triangle_free_b2(
    max_vertices: int = 5, processes: int | None = None
) -> BatteryResult:
    """The B2 metric satisfies the link condition on every triangle-free
    graph with labels in {2, 3, 4}, for every orientation."""
    start = time.perf_counter()
    n = max_vertices
    states = enumerate_triangle_free_oriented_states(n)
    chunks = [(states[i : i + 256], n) for i in range(0, len(states), 256)]
    if processes and processes > 1:
        with Pool(processes) as pool:
            results = pool.map(_b2_chunk, chunks)
    else:
        results = [_b2_chunk(c) for c in chunks]
    failures = []
    total = 0
    for count, fails in results:
        total += count
        failures.extend(fails)
    failures.sort()
    return BatteryResult(
        "triangle-free-b2", total, failures, time.perf_counter() - start
    )


def wildcard_variants(
    states: list[tuple[int, ...]], n: int
) -> list[tuple[int, ...]]:
    """One variant per graph: its canonically first edge becomes a
    label-2 wildcard.  Deduplicated up to isomorphism."""
    pairs, tables = _pair_tables(n)
    srcs = _source_tables(tables, len(pairs))
    seen = set()
    out = []
    for state in states:
        present = [i for i, v in enumerate(state) if v]
        if not present:
            continue
        variant = list(state)
        variant[present[0]] = 5
        canon = _canonical_form(tuple(variant), srcs, _flip_value)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


def graph_from_state(state: tuple[int, ...], n: int) -> DefiningGraph:
    pairs = list(combinations(range(n), 2))
    names = tuple(f"v{i}" for i in range(n))
    edges = []
    for (a, b), v in zip(pairs, state):
        if v == 0:
            continue
        label, orientation = _ORIENTED_DECODE[v]
        edges.append((names[a], names[b], label, orientation))
    return DefiningGraph(names, edges)


def oracle_case(state: tuple[int, ...], n: int, with_girth: bool = False):
    """One oracle-equivalence case: pattern detector vs short link loops.

    Returns (ok, has_short_loop, girth_ok).
    """
    gamma = graph_from_state(state, n)
    witnesses = detect_forbidden(gamma)
    pres, _ = build_triangular(gamma)
    link = build_link(build_complex(pres))
    short = has_short_loop(link)
    ok = bool(witnesses) == short
    girth_ok = True
    if with_girth:
        g, _ = girth(link)
        girth_ok = (g == 4) if short else (g is None or g >= 6)
    return ok, short, girth_ok


_GIRTH_SAMPLE_STRIDE = 97


def _oracle_chunk(args):
    states, n = args
    failures = []
    girth_checked = 0
    short_count = 0
    for idx, state in states:
        sample = idx % _GIRTH_SAMPLE_STRIDE == 0
        ok, short, girth_ok = oracle_case(state, n, with_girth=sample)
        girth_checked += sample
        short_count += short
        if not ok or not girth_ok:
            failures.append(f"state={state}")
    return len(states), failures, girth_checked, short_count


def battery_pattern_oracle(
    max_vertices: int = 5,
    wildcard_sweep: bool = True,
    processes: int | None = None,
) -> BatteryResult:
    """Forbidden patterns fire exactly when the link has a 4-loop.

    Graphs on fewer vertices appear as classes with isolated vertices,
    so enumerating on ``max_vertices`` covers everything below it.
    """
    start = time.perf_counter()
    n = max_vertices
    states = enumerate_oriented_states(n)
    wilds = wildcard_variants(states, n) if wildcard_sweep else []
    work = [(i, s) for i, s in enumerate(states + wilds)]

    chunks = [
        (work[i : i + 512], n) for i in range(0, len(work), 512)
    ]
    failures: list[str] = []
    total = 0
    if processes and processes > 1:
        with Pool(processes) as pool:
            results = pool.map(_oracle_chunk, chunks)
    else:
        results = [_oracle_chunk(c) for c in chunks]
    for count, fails, _, _ in results:
        total += count
        failures.extend(fails)
    failures.sort()
    name = "pattern-girth-oracle" + ("+wildcards" if wildcard_sweep else "")
    return BatteryResult(name, total, failures, time.perf_counter() - start)


def battery_random_spot_checks(
    seed: int, cases: int = 50, vertices: int = 6
) -> BatteryResult:
    """Seeded random graphs beyond the exhaustive range, same oracle."""
    start = time.perf_counter()
    rng = random.Random(seed)
    pairs = list(combinations(range(vertices), 2))
    failures = []
    for case in range(cases):
        state = tuple(
            rng.choice((0, 0, 1, 2, 3, 4)) for _ in pairs
        )
        ok, _, girth_ok = oracle_case(state, vertices, with_girth=True)
        if not ok or not girth_ok:
            failures.append(f"case {case}: state={state}")
    return BatteryResult(
        f"random-spot-checks(seed={seed})",
        cases,
        failures,
        time.perf_counter() - start,
    )


def run_all(
    max_label: int = 5,
    max_vertices: int = 5,
    tietze_max: int = 50,
    seed: int | None = None,
    processes: int | None = None,
) -> list[BatteryResult]:
    results = [
        battery_tietze(tietze_max),
        battery_triangle_girth(3, max_label),
        battery_pattern_oracle(max_vertices, True, processes),
    ]
    if seed is not None:
        results.append(battery_random_spot_checks(seed))
    return results
