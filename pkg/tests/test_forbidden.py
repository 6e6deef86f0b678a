import itertools

import pytest
from oracle_tools import (
    all_orientation_completions,
    brute_force_girth,
    oriented_copy,
)

from artinlink import (
    DefiningGraph,
    DualNotBipartiteError,
    OddDegreeVertexError,
    Orientation,
    UnorientedEdgeError,
    build_complex,
    build_link,
    build_triangular,
    detect_forbidden,
    orient_from_rotation_system,
    resolve_orientations,
    search_orientation,
    trace_faces,
)

F, B, WILD = Orientation.FORWARD, Orientation.BACKWARD, Orientation.WILDCARD


def link_of(gamma):
    pres, _ = build_triangular(gamma)
    return build_link(build_complex(pres))


def directed_triangle(labels=(3, 3, 3)):
    m, n, p = labels
    return DefiningGraph(
        ("a", "b", "c"),
        [("a", "b", m, F), ("b", "c", n, F), ("c", "a", p, F)],
    )


def transitive_triangle():
    return DefiningGraph(
        ("a", "b", "c"),
        [("a", "b", 3, F), ("a", "c", 3, F), ("b", "c", 3, F)],
    )


def alternating_square():
    return DefiningGraph(
        ("u", "v", "w", "t"),
        [("u", "v", 3, F), ("w", "v", 3, F), ("w", "t", 3, F), ("u", "t", 3, F)],
    )


# -- detection ---------------------------------------------------------------


def test_directed_cycle_is_clean_and_link_confirms():
    g = directed_triangle()
    assert detect_forbidden(g) == []
    assert brute_force_girth(link_of(g)) >= 6


def test_transitive_triangle_is_type_a():
    ws = detect_forbidden(transitive_triangle())
    assert [w.kind for w in ws] == ["A"]
    assert ws[0].vertices == ("a", "b", "c")


def test_alternating_square_is_type_b():
    ws = detect_forbidden(alternating_square())
    assert [w.kind for w in ws] == ["B"]
    assert set(ws[0].directed_edges) == {
        ("u", "v"), ("w", "v"), ("w", "t"), ("u", "t")
    }


def test_wildcard_triangle_matches_as_needed():
    g = DefiningGraph(
        ("a", "b", "c"),
        [("a", "b", 2, WILD), ("a", "c", 3, F), ("b", "c", 3, F)],
    )
    ws = detect_forbidden(g)
    assert [w.kind for w in ws] == ["A"]


def test_directed_square_is_clean():
    g = DefiningGraph(
        ("u", "v", "w", "t"),
        [("u", "v", 3, F), ("v", "w", 3, F), ("w", "t", 3, F), ("u", "t", 3, B)],
    )
    assert detect_forbidden(g) == []


def test_unoriented_edge_rejected():
    g = DefiningGraph(("a", "b", "c"), [("a", "b", 3), ("b", "c", 3, F)])
    with pytest.raises(UnorientedEdgeError):
        detect_forbidden(g)


def test_witness_loops_exist_in_link():
    for gamma in (
        transitive_triangle(),
        alternating_square(),
        DefiningGraph(
            ("a", "b", "c"),
            [("a", "b", 2, WILD), ("a", "c", 3, F), ("b", "c", 3, F)],
        ),
    ):
        link = link_of(gamma)
        ws = detect_forbidden(gamma, link)  # raises if a loop is missing
        for w in ws:
            assert len(w.loop) == 4
            for i in range(4):
                assert link.has_edge(w.loop[i], w.loop[(i + 1) % 4])


def test_reversal_invariance_of_witness_counts():
    graphs = [
        transitive_triangle(),
        alternating_square(),
        directed_triangle(),
        DefiningGraph(
            ("a", "b", "c", "d"),
            [
                ("a", "b", 3, F), ("b", "c", 3, F), ("c", "d", 3, F),
                ("a", "d", 3, F), ("a", "c", 3, F),
            ],
        ),
    ]
    for g in graphs:
        fwd = detect_forbidden(g)
        rev = detect_forbidden(g.reversed())
        assert len(fwd) == len(rev)
        assert sorted(w.kind for w in fwd) == sorted(w.kind for w in rev)


def oriented_labelled_graphs(n, labels=(3, 4)):
    """All oriented labelled graphs on n named vertices (not reduced)."""
    names = tuple(f"v{i}" for i in range(n))
    pairs = list(itertools.combinations(names, 2))
    states = [(0,)] + [(lab, o) for lab in labels for o in (F, B)]
    for combo in itertools.product(states, repeat=len(pairs)):
        edges = []
        for (u, v), st in zip(pairs, combo):
            if st == (0,):
                continue
            lab, o = st
            edges.append((u, v, lab, o))
        yield DefiningGraph(names, edges)


def test_oracle_equivalence_exhaustive_four_vertices():
    for gamma in oriented_labelled_graphs(4, labels=(3,)):
        clean = not detect_forbidden(gamma)
        g = brute_force_girth(link_of(gamma))
        assert clean == (g is None or g >= 6)
        if not clean:
            assert g == 4


def test_oracle_equivalence_with_wildcard_edge():
    names = ("v0", "v1", "v2")
    pairs = list(itertools.combinations(names, 2))
    states = [(0,), (2, WILD), (3, F), (3, B)]
    for combo in itertools.product(states, repeat=3):
        edges = []
        for (u, v), st in zip(pairs, combo):
            if st == (0,):
                continue
            lab, o = st
            edges.append((u, v, lab, o))
        gamma = DefiningGraph(names, edges)
        clean = not detect_forbidden(gamma)
        g = brute_force_girth(link_of(gamma))
        assert clean == (g is None or g >= 6)


# -- orientation search --------------------------------------------------------


def good(gamma, assignment):
    return not detect_forbidden(oriented_copy(gamma, assignment))


def test_search_triangle_finds_cyclic_orientation():
    g = DefiningGraph(("a", "b", "c"), [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    found = search_orientation(g)
    assert found is not None
    assert good(g, found)
    winners = [asg for asg in all_orientation_completions(g) if good(g, asg)]
    assert len(winners) == 2  # the two cyclic orientations


def test_search_k4_is_impossible():
    names = ("a", "b", "c", "d")
    edges = [(u, v, 3) for u, v in itertools.combinations(names, 2)]
    g = DefiningGraph(names, edges)
    assert search_orientation(g) is None
    assert not any(good(g, asg) for asg in all_orientation_completions(g))


def test_search_trivial_on_acyclic_graphs():
    tree = DefiningGraph(("a", "b", "c", "d"), [("a", "b", 3), ("b", "c", 4), ("b", "d", 3)])
    assert search_orientation(tree) is not None
    five_cycle = DefiningGraph(
        tuple("abcde"),
        [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("d", "e", 3), ("a", "e", 3)],
    )
    found = search_orientation(five_cycle)
    assert found is not None and good(five_cycle, found)


def test_search_agrees_with_brute_force():
    cases = [
        DefiningGraph(
            ("a", "b", "c", "d"),
            [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3),
             ("a", "c", 3)],
        ),
        DefiningGraph(
            ("a", "b", "c", "d", "e"),
            [("a", "b", 3), ("b", "c", 3), ("c", "a", 3), ("c", "d", 3),
             ("d", "e", 3), ("e", "c", 3)],
        ),
        DefiningGraph(
            ("a", "b", "c"),
            [("a", "b", 2, WILD), ("b", "c", 3), ("a", "c", 3)],
        ),
    ]
    for g in cases:
        found = search_orientation(g)
        any_good = any(good(g, asg) for asg in all_orientation_completions(g))
        assert (found is not None) == any_good
        if found is not None:
            assert good(g, found)


def test_search_matches_brute_force_on_all_four_vertex_graphs():
    names = ("a", "b", "c", "d")
    pairs = list(itertools.combinations(names, 2))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        edges = [(u, v, 3) for (u, v), bit in zip(pairs, bits) if bit]
        g = DefiningGraph(names, edges)
        found = search_orientation(g)
        any_good = any(good(g, asg) for asg in all_orientation_completions(g))
        assert (found is not None) == any_good, edges
        if found is not None:
            assert good(g, found)


def test_search_wildcard_triangle_hopeless():
    # with a wildcard edge, any triangle matches type A under some reading
    g = DefiningGraph(
        ("a", "b", "c"), [("a", "b", 2, WILD), ("b", "c", 3), ("a", "c", 3)]
    )
    assert search_orientation(g) is None


def test_search_is_deterministic():
    g = DefiningGraph(
        ("a", "b", "c", "d"),
        [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
    )
    assert search_orientation(g) == search_orientation(g)


# -- checkerboard orientation ----------------------------------------------------


def square_with_rotations():
    return DefiningGraph(
        ("a", "b", "c", "d"),
        [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
    )


def test_checkerboard_square_is_directed_cycle():
    g = square_with_rotations()
    assignment = orient_from_rotation_system(g)
    oriented = resolve_orientations(g, assignment)
    assert detect_forbidden(oriented) == []
    outdeg = {v: 0 for v in oriented.vertices}
    for e in oriented.edges:
        outdeg[e.tail] += 1
    assert sorted(outdeg.values()) == [1, 1, 1, 1]


def test_checkerboard_single_triangle_is_cyclic():
    g = DefiningGraph(("a", "b", "c"), [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    assignment = orient_from_rotation_system(g)
    oriented = resolve_orientations(g, assignment)
    assert detect_forbidden(oriented) == []


def test_checkerboard_rejects_odd_degrees():
    g = DefiningGraph(
        ("a", "b", "c", "d"),
        [("a", "b", 3), ("b", "c", 3), ("a", "c", 3), ("c", "d", 3), ("b", "d", 3)],
    )
    with pytest.raises(OddDegreeVertexError):
        orient_from_rotation_system(g)


def bowtie():
    return DefiningGraph(
        ("c", "p", "q", "r", "s"),
        [("c", "p", 3), ("c", "q", 3), ("p", "q", 3),
         ("c", "r", 3), ("c", "s", 3), ("r", "s", 3)],
        rotations={"c": ("p", "q", "r", "s")},
    )


def test_checkerboard_bowtie_is_clean():
    g = bowtie()
    faces = trace_faces(g)
    assert sorted(len(f) for f in faces) == [3, 3, 6]
    assignment = orient_from_rotation_system(g)
    oriented = resolve_orientations(g, assignment)
    assert detect_forbidden(oriented) == []


def octahedron():
    return DefiningGraph(
        ("n", "s", "a", "b", "c", "d"),
        [("n", "a", 3), ("n", "b", 3), ("n", "c", 3), ("n", "d", 3),
         ("s", "a", 3), ("s", "b", 3), ("s", "c", 3), ("s", "d", 3),
         ("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
        rotations={
            "n": ("a", "b", "c", "d"), "s": ("a", "d", "c", "b"),
            "a": ("n", "d", "s", "b"), "b": ("n", "a", "s", "c"),
            "c": ("n", "b", "s", "d"), "d": ("n", "c", "s", "a"),
        },
    )


def test_octahedron_checkerboard_hits_equatorial_squares():
    # The octahedron's three equatorial 4-cycles bound no face, so the
    # checkerboard construction does not apply to it: orienting every
    # facial triangle cyclically forces each equator to alternate.
    g = octahedron()
    faces = trace_faces(g)
    assert sorted(len(f) for f in faces) == [3] * 8
    assignment = orient_from_rotation_system(g)
    oriented = resolve_orientations(g, assignment)
    ws = detect_forbidden(oriented)
    assert [w.kind for w in ws] == ["B", "B", "B"]
    assert {w.vertices for w in ws} == {
        ("a", "b", "c", "d"), ("a", "n", "c", "s"), ("b", "n", "d", "s")
    }
    # and no orientation at all avoids both patterns
    assert search_orientation(octahedron()) is None


def test_checkerboard_rejects_inconsistent_embedding():
    # interleaving the rotation at the cut vertex puts the bowtie on a
    # torus: one face borders every edge twice, so no 2-colouring exists
    g = DefiningGraph(
        ("c", "p", "q", "r", "s"),
        [("c", "p", 3), ("c", "q", 3), ("p", "q", 3),
         ("c", "r", 3), ("c", "s", 3), ("r", "s", 3)],
        rotations={"c": ("p", "r", "q", "s")},
    )
    assert len(trace_faces(g)) == 1
    with pytest.raises(DualNotBipartiteError):
        orient_from_rotation_system(g)


def test_trace_faces_requires_rotations_for_high_degree():
    g = DefiningGraph(
        ("c", "p", "q", "r", "s"),
        [("c", "p", 3), ("c", "q", 3), ("p", "q", 3),
         ("c", "r", 3), ("c", "s", 3), ("r", "s", 3)],
    )
    with pytest.raises(ValueError):
        trace_faces(g)
