"""End-to-end replays of the reduction arguments at desk scale."""

import random
from itertools import combinations

from gridlab.booldim import BooleanRealizer, is_boolean_realizer, reconstruct_realizer
from gridlab.grids import Subgrid, casual_embeddings, colex_order, core, \
    core_elements, grid, lex_order
from gridlab.poset import induced_subposet, is_isomorphic, is_realizer
from gridlab.ramsey import (
    KIND_COMPARABILITY,
    KIND_SUBPOSET,
    FunctionColoring,
    find_monochromatic_copy,
    find_monochromatic_subgrid,
    hash_coloring,
    reduce_comparability_to_subgrid,
    reduce_subposet_to_subgrid,
)


def test_signature_coloring_reconstruction_pipeline():
    # Color comparabilities by Boolean-realizer signatures, find a
    # monochromatic copy, and rebuild a realizer of it from the shared color.
    q = grid(4, 2)
    br = BooleanRealizer((lex_order(4).order, colex_order(4).dual().order),
                         frozenset({"10"}))
    assert is_boolean_realizer(q, br)
    sig_color = {"00": 1, "01": 2, "10": 3, "11": 4}
    coloring = FunctionColoring(
        KIND_COMPARABILITY, 4, lambda key: sig_color[br.signature(*key)])
    pattern = grid(2, 2)
    witness = find_monochromatic_copy(q, pattern, coloring)
    assert witness is not None and witness.color == 3
    mono_signature = {v: k for k, v in sig_color.items()}[witness.color]
    rebuilt = reconstruct_realizer(q, br, witness.elements, mono_signature)
    copy_poset = induced_subposet(q, witness.elements)
    assert is_realizer(copy_poset, rebuilt.extensions)
    assert is_isomorphic(copy_poset, pattern) is not None


def test_grid_ramsey_reduction_pipeline():
    # Comparability coloring -> 2^2-subgrid coloring -> monochromatic 4-side
    # subgrid -> every casually embedded 2^2 inside it is monochromatic.
    g = grid(4, 2)
    embeddings = casual_embeddings(2, 2)
    witnessed = 0
    for seed in range(30):
        c = hash_coloring(KIND_COMPARABILITY, 2, seed, bias_color=1, bias=0.9)
        reduced = reduce_comparability_to_subgrid(c, g)
        found = find_monochromatic_subgrid(4, 2, 2, 4, reduced)
        if found is None:
            continue
        witnessed += 1
        axes = found.subgrid.axes
        for emb in embeddings:
            elems = [g.index((axes[0][a], axes[1][b])) for a, b in emb.images]
            for x, y in combinations(elems, 2):
                if g.comparable(x, y):
                    key = (x, y) if g.lt(x, y) else (y, x)
                    assert c.color_of(key) == found.color
    assert witnessed >= 2


def test_core_reduction_pipeline_nontrivial_coloring():
    # Color a 4-element key 1 exactly when it is the core of the subgrid its
    # projections span. Every 4-side subgrid's core then gets color 1, the
    # whole 9^2 grid is monochromatic under the reduced coloring, and the
    # reduction argument demands that every 2^2 subposet of the grid's core
    # is itself such a core. The key universe is far from constant.
    g = grid(9, 2)

    def is_projection_core(key):
        coords = [g.coords(e) for e in key]
        s1 = tuple(sorted({c[0] for c in coords}))
        s2 = tuple(sorted({c[1] for c in coords}))
        if len(s1) != 4 or len(s2) != 4:
            return False
        return core_elements(Subgrid.of(s1, s2), g) == tuple(sorted(key))

    c1 = FunctionColoring(KIND_SUBPOSET, 2,
                          lambda key: 1 if is_projection_core(key) else 2)
    reduced = reduce_subposet_to_subgrid(c1, g, 2)
    assert set(reduced.assignment.values()) == {1}
    found = find_monochromatic_subgrid(9, 2, 4, 9, reduced)
    assert found is not None and found.color == 1
    assert found.subgrid == Subgrid.full(9, 2)

    core_pts = sorted(core(found.subgrid))
    g22 = grid(2, 2)
    rng = random.Random(5)
    nontrivial = 0
    checked = 0
    for quad in combinations(core_pts, 4):
        elems = [g.index(c) for c in quad]
        if is_isomorphic(induced_subposet(g, elems), g22) is None:
            continue
        checked += 1
        assert c1.color_of(tuple(sorted(elems))) == found.color
    # the coloring is genuinely bichromatic on the key universe
    for _ in range(200):
        pts = rng.sample(range(81), 4)
        if is_isomorphic(induced_subposet(g, pts), g22) is not None:
            if c1.color_of(tuple(sorted(pts))) == 2:
                nontrivial += 1
    assert checked > 0 and nontrivial > 0
