"""The two oriented patterns that create short link loops.

An acyclically oriented triangle (type A) or an alternating 4-cycle
u->v, u->t, w->v, w->t (type B) in the defining graph produces an
embedded 4-loop in the link, and these are the only sources of loops
shorter than 6.  Label-2 edges read both ways and act as wildcards.

``search_orientation`` hunts for a direction assignment avoiding both
patterns.  The octahedron shows it can be impossible: orienting all
eight faces cyclically forces each equatorial square to alternate.
"""

from artinlink import DefiningGraph, Orientation, detect_forbidden, search_orientation

F = Orientation.FORWARD

transitive = DefiningGraph(
    ("a", "b", "c"),
    [("a", "b", 3, F), ("a", "c", 3, F), ("b", "c", 3, F)],
)
for w in detect_forbidden(transitive):
    print(f"type {w.kind} on {w.vertices}: link loop {' - '.join(str(v) for v in w.loop)}")

alternating = DefiningGraph(
    ("u", "v", "w", "t"),
    [("u", "v", 3, F), ("w", "v", 3, F), ("w", "t", 3, F), ("u", "t", 3, F)],
)
for w in detect_forbidden(alternating):
    print(f"type {w.kind} on {w.vertices}: link loop {' - '.join(str(v) for v in w.loop)}")

print("\nsearching orientations:")
triangle = DefiningGraph(("a", "b", "c"), [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
print(f"  bare triangle: {search_orientation(triangle)}")

import itertools

k4 = DefiningGraph(
    ("a", "b", "c", "d"),
    [(u, v, 3) for u, v in itertools.combinations("abcd", 2)],
)
print(f"  K4: {search_orientation(k4)}  (every orientation of K4 has an "
      "acyclic triangle)")

octa = DefiningGraph(
    ("n", "s", "a", "b", "c", "d"),
    [("n", x, 3) for x in "abcd"]
    + [("s", x, 3) for x in "abcd"]
    + [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
)
print(f"  octahedron: {search_orientation(octa)}  (forcing all triangles "
      "cyclic makes each equator alternate)")
