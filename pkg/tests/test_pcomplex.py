import json
import random

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from nhv import pcomplex as pc
from nhv.coeff_rings import QLambda
from nhv.pcomplex import Block, GradedPComplex

import oracles


def single_degree_matrix(c):
    """Flatten a complex to one big matrix (degree information dropped)."""
    keys = sorted(c.pieces)
    offs, tot = {}, 0
    for k in keys:
        offs[k] = tot
        tot += c.pieces[k]
    M = [[0] * tot for _ in range(tot)]
    for src, mat in c.diff.items():
        tgt = pc.target(src)
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                M[offs[tgt] + i][offs[src] + j] = int(v) % c.p
    return M


blocks_strategy = st.lists(
    st.builds(Block, st.integers(1, 5), st.integers(-4, 4).map(lambda v: 2 * v), st.integers(0, 1),
              st.integers(0, 1)),
    min_size=1, max_size=5)


@given(blocks_strategy)
def test_blocks_round_trip(blocks):
    p = 5
    c = pc.from_blocks(p, blocks)
    assert pc.verify_p_nilpotent(c)
    assert pc.jordan_blocks(c) == sorted(blocks)


@given(blocks_strategy, st.integers(0, 10 ** 6))
def test_blocks_invariant_under_change_of_basis(blocks, seed):
    p = 5
    c = pc.from_blocks(p, blocks)
    rng = random.Random(seed)
    # conjugate: d'_q = g_{q+2} d_q g_q^-1 with random unitriangular g_q
    gs = {}
    for k, dim in c.pieces.items():
        gs[k] = sp.Matrix(dim, dim, lambda i, j: 1 if i == j else (rng.randint(0, p - 1) if j > i else 0))
    diff = {}
    for src, mat in c.diff.items():
        new = (gs[pc.target(src)] * sp.Matrix(mat) * gs[src].inv_mod(p)).applyfunc(lambda v: v % p)
        diff[src] = new.tolist()
    c2 = GradedPComplex(p, dict(c.pieces), diff, p)
    assert pc.jordan_blocks(c2) == sorted(blocks)


@given(blocks_strategy)
def test_total_jordan_type_matches_ungraded_oracle(blocks):
    p = 5
    c = pc.from_blocks(p, blocks)
    sizes = {}
    for b in blocks:
        sizes[b.size] = sizes.get(b.size, 0) + 1
    assert oracles.jordan_sizes(single_degree_matrix(c), p) == sizes


def test_json_round_trip(tmp_path):
    data = {"p": 3, "field": "Fp",
            "pieces": [{"q": 0, "dim": 1}, {"q": 2, "dim": 1}, {"q": 4, "dim": 1}],
            "maps": [{"from": 0, "to": 1, "matrix": [[1]]}, {"from": {"q": 2}, "to": [4, 0, 0], "matrix": [[2]]}]}
    c = GradedPComplex.from_json(json.dumps(data))
    assert pc.jordan_blocks(c) == [Block(3, 0, 0, 0)]
    c2 = GradedPComplex.from_json(c.to_json())
    assert pc.jordan_blocks(c2) == pc.jordan_blocks(c)


def test_rejects_wrong_degree_and_non_nilpotent():
    data = {"p": 3, "pieces": [{"q": 0, "dim": 1}, {"q": 4, "dim": 1}],
            "maps": [{"from": 0, "to": 1, "matrix": [[1]]}]}
    with pytest.raises(ValueError):
        GradedPComplex.from_json(data)


def test_contractible_blocks_have_zero_symbol():
    for p in (3, 5, 7):
        assert pc.k0_symbol([Block(p, 0, 0, 0)], p) == QLambda.zero(p)
        assert pc.k0_symbol([Block(p, 6, 1, 1)], p) == QLambda.zero(p)
        assert pc.k0_symbol([Block(1, 0, 0, 0)], p) == QLambda.one(p)


def test_odd_parity_sign():
    p = 3
    assert pc.k0_symbol([Block(1, 0, 0, 1)], p) == -QLambda.one(p)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("w", range(-3, 4))
def test_weighted_shift(p, w):
    ws = pc.weighted_shift_blocks(p, w)
    assert ws.report.passed
    assert ws.leading == (-w) % p + 1


def test_weighted_shift_values():
    ws = pc.weighted_shift_blocks(5, 2)
    assert ws.blocks[:3] == [Block(4, 0, 0, 0), Block(5, 8, 0, 0), Block(5, 18, 0, 0)]


def test_graded_ranks():
    c = pc.from_blocks(3, [Block(2, 0, 0, 0), Block(1, 2, 0, 0)])
    assert pc.graded_ranks(c) == pc.graded_ranks(pc.from_blocks(3, pc.jordan_blocks(c)))
