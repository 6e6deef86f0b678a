"""Orienting an embedded even-degree graph by checkerboard colouring.

Given a rotation system (the cyclic order of neighbours around each
vertex), faces are traced and 2-coloured so neighbouring faces differ;
even degrees make this possible.  Each edge is then directed the way
its black face traverses it.  When the short embedded loops of the
graph all bound faces, facial triangles come out cyclic and facial
squares come out directed, so neither forbidden pattern appears.
"""

from artinlink import (
    DefiningGraph,
    certify,
    detect_forbidden,
    orient_from_rotation_system,
    resolve_orientations,
    trace_faces,
)

bowtie = DefiningGraph(
    ("c", "p", "q", "r", "s"),
    [("c", "p", 3), ("c", "q", 3), ("p", "q", 3),
     ("c", "r", 3), ("c", "s", 3), ("r", "s", 3)],
    rotations={"c": ("p", "q", "r", "s")},
)

faces = trace_faces(bowtie)
print("bowtie faces:", [len(f) for f in faces])
assignment = orient_from_rotation_system(bowtie)
print("checkerboard directions:", assignment.to_json_dict())
oriented = resolve_orientations(bowtie, assignment)
print("forbidden patterns:", detect_forbidden(oriented))
print("verdict:", certify(oriented).verdict)

# The hypothesis matters: the octahedron has non-facial squares (its
# equators), and its checkerboard orientation contains all three of
# them as alternating 4-cycles.
octa = DefiningGraph(
    ("n", "s", "a", "b", "c", "d"),
    [("n", x, 3) for x in "abcd"] + [("s", x, 3) for x in "abcd"]
    + [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
    rotations={
        "n": ("a", "b", "c", "d"), "s": ("a", "d", "c", "b"),
        "a": ("n", "d", "s", "b"), "b": ("n", "a", "s", "c"),
        "c": ("n", "b", "s", "d"), "d": ("n", "c", "s", "a"),
    },
)
oriented = resolve_orientations(octa, orient_from_rotation_system(octa))
print("\noctahedron checkerboard patterns:")
for w in detect_forbidden(oriented):
    print(f"  type {w.kind} on {w.vertices}")
