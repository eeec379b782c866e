"""Smoke test for the alcove extension module.

Build and install first, e.g. `pip install maturin && maturin develop -m crates/python/Cargo.toml`,
or copy target/release/libalcove_py.so to a directory on PYTHONPATH as alcove.so.
"""

from fractions import Fraction

import alcove

hexagon = alcove.Matrix([[0, -5, -1], [-4, 0, -2], [-3, -6, 0]])
assert hexagon.shape == (3, 3)
assert hexagon.is_kleene_star() and hexagon.is_normal_idempotent()
assert hexagon @ hexagon == hexagon
assert hexagon.norm() == 6

vertices = alcove.enumerate_vertices(hexagon)
assert len(vertices) == 6
assert sum(tag == "generator" for _, tag in vertices) == 3
assert ([Fraction(3), Fraction(6), Fraction(0)], "pseudovertex") in vertices
assert alcove.express_vertex(hexagon, [3, 6]) == [0, 0, 0]

h = alcove.hrep(hexagon)
assert h["box"] == [(-1, 3), (-2, 6)]
assert h["diffs"] == [(1, 0, -4, 5)]

antenna = alcove.Matrix([[0, -5, -1], ["-7", 0, -2], [-3, -6, 0]])
assert not antenna.is_kleene_star()
star = alcove.tighten(antenna)
assert star.tolist()[1] == [-5, 0, -2]
assert alcove.radius_section(antenna)[0] == 7
assert alcove.radius_polytope(star)[0] == 6

try:
    alcove.Matrix([[0, 1], [1, 0]]).kleene_star()
except alcove.StarFailure as err:
    _, cycle, weight = err.args
    assert sorted(cycle) == [0, 1] and weight == 2
else:
    raise AssertionError("expected StarFailure")

nonconvex = alcove.Matrix([[0, -6, -10, -5], [-9, 0, -5, -3], [-3, -5, 0, -6], [-5, -3, -6, 0]])
assert not alcove.is_span_convex(nonconvex)
assert len(alcove.enumerate_vertices(alcove.tighten(nonconvex))) == 17

n = alcove.normalize(alcove.Matrix([[1, 5, 2], [4, 0, 3], [7, 1, 1]]))
assert n["normal"].is_normal()
assert n["q"] @ alcove.Matrix([[1, 5, 2], [4, 0, 3], [7, 1, 1]]) @ n["p"] == n["normal"]

assert alcove.distance([-5, -2, 0], [-2, -5, 0]) == 6
assert alcove.seminorm([Fraction(-1, 2), "1/3", 0]) == Fraction(5, 6)
assert alcove.span_membership(hexagon, [2, 4, 0]) == [-1, -2, 0]
assert all(alcove.contains(star, p) for p in alcove.span_sample(star, 100, seed=1))

try:
    alcove.Matrix([[0.5]])
except alcove.AlcoveError:
    pass
else:
    raise AssertionError("floats must be rejected")

print("alcove smoke test passed")
