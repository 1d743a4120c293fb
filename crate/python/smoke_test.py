"""Smoke test for the pytoricgraph extension module.

Build and install first:  maturin build --release -m crates/python/Cargo.toml && pip install target/wheels/pytoricgraph-*.whl
"""

import pytoricgraph as tg

k3 = tg.Graph.named("K3")
assert tg.toric_ideal(k3) == []

k4 = tg.Graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 4)])
assert k4.edge_count == 6
assert tg.toric_ideal(k4) == ["e1*e5 - e3*e6", "e2*e4 - e3*e6"]
assert tg.initial_ideal(k4) == ["e1*e5", "e2*e4"]

glued = tg.Graph.named("glued-four-cycles")
cert = tg.chromatic_certificate(glued, order="lex:e6,e3,e1,e2,e4,e5,e7")
assert cert["init_generators"] == ["e6*e7", "e3*e7", "e2*e4*e6"]
assert cert["cover"] == [2, 7] and cert["bound"] == 5 and cert["verified"]

dec = tg.kmy_decompose(glued, 6)
assert not dec["degenerate"]
assert dec["heights"][1] == 2

h = tg.height(tg.Graph.named("extended-bow-tie"))
assert h["formula"] == h["degeneration"] == h["nondegenerate_steps"]

bow = tg.Graph.named("bow-tie")
assert tg.graver_basis(bow) == tg.graver_basis(bow, backend="lawrence")

best = tg.chromatic_certificate(tg.Graph.named("K5"), search=8, seed=3)
assert best["bound"] >= best["exact_chromatic_number"] == 5

try:
    tg.Graph.parse("4\n1 2\n2 x\n")
except ValueError as e:
    assert "line 3" in str(e)
else:
    raise AssertionError("corrupted input accepted")

print("smoke test passed")
