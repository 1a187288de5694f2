import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import fillscope as fs
from fillscope.errors import DimensionError, InvariantError, UnknownCellError

from helpers import random_small_complex


def test_boundary_of_face_is_alternating_sum(tetra):
    c = fs.Chain(2, {"0,1,2": 1})
    bd = fs.boundary(tetra, c)
    assert bd == fs.Chain(1, {"1,2": 1, "0,2": -1, "0,1": 1})


def test_boundary_of_zero_chain_is_zero(tetra):
    assert fs.boundary(tetra, fs.Chain(2)) == fs.Chain(1)


def test_boundary_on_one_vertex_torus_cancels(torus_cw):
    bd = fs.boundary(torus_cw, fs.Chain(2, {"f": 1}))
    assert bd == fs.Chain(1)


def test_boundary_is_linear(tetra):
    c1 = fs.Chain(2, {"0,1,2": 2})
    c2 = fs.Chain(2, {"0,1,3": -1, "0,1,2": 1})
    lhs = fs.boundary(tetra, c1 + c2)
    rhs = fs.boundary(tetra, c1) + fs.boundary(tetra, c2)
    assert lhs == rhs


def test_boundary_dimension_errors(tetra):
    with pytest.raises(DimensionError):
        fs.boundary(tetra, fs.Chain(0, {"0": 1}))
    with pytest.raises(DimensionError):
        fs.boundary(tetra, fs.Chain(3, {"x": 1}))
    with pytest.raises(UnknownCellError):
        fs.boundary(tetra, fs.Chain(2, {"9,9,9": 1}))


def test_l1_norm_examples():
    assert fs.l1_norm(fs.Chain(1, {"s1": 2, "s2": -3})) == 5
    assert fs.l1_norm(fs.Chain(1)) == 0
    assert fs.l1_norm(fs.Chain(0, {"v": 1})) == 1


@given(
    st.dictionaries(st.sampled_from(["a", "b", "c", "d"]), st.integers(-9, 9)),
    st.dictionaries(st.sampled_from(["a", "b", "c", "d"]), st.integers(-9, 9)),
)
def test_l1_norm_properties(d1, d2):
    c1 = fs.Chain(1, d1)
    c2 = fs.Chain(1, d2)
    assert fs.l1_norm(c1 + c2) <= fs.l1_norm(c1) + fs.l1_norm(c2)
    assert fs.l1_norm(-c1) == fs.l1_norm(c1)
    assert (fs.l1_norm(c1) == 0) == (c1 == fs.Chain(1))


def test_chain_stores_no_zeros():
    c = fs.Chain(1, {"a": 1, "b": 0})
    assert "b" not in c.coeffs
    assert fs.Chain(1, {"a": 1}) + fs.Chain(1, {"a": -1}) == fs.Chain(1)


def test_chain_is_immutable():
    c = fs.Chain(1, {"a": 1})
    with pytest.raises(AttributeError):
        c.dim = 2


def test_complex_rejects_duplicate_cells():
    with pytest.raises(InvariantError):
        fs.ChainComplex({0: ["v", "v"]}, {})


def test_complex_rejects_unknown_face():
    with pytest.raises(UnknownCellError):
        fs.ChainComplex({0: ["v"], 1: ["e"]}, {1: {"e": {"w": 1}}})


def test_complex_rejects_broken_dd():
    # single edge from v to w, one 2-cell whose boundary is just the edge:
    # dd(f) = w - v != 0
    with pytest.raises(InvariantError):
        fs.ChainComplex(
            {0: ["v", "w"], 1: ["e"], 2: ["f"]},
            {1: {"e": {"v": -1, "w": 1}}, 2: {"f": {"e": 1}}},
        )


def test_boundary_of_boundary_vanishes_randomized():
    rng = random.Random(11)
    done = 0
    while done < 25:
        cc = random_small_complex(rng)
        if cc is None:
            continue
        done += 1
        coeffs = {cell: rng.randint(-3, 3) for cell in cc.cells(2)}
        c = fs.Chain(2, coeffs)
        assert fs.boundary(cc, fs.boundary(cc, c)) == fs.Chain(0)


def test_vector_round_trip(tetra):
    c = fs.Chain(1, {"0,1": 3, "2,3": -2})
    assert tetra.vector_to_chain(1, tetra.chain_to_vector(c)) == c
