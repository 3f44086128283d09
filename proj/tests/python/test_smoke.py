"""Smoke tests for the Python bindings: golden values from the C++ suite."""

import pytest

import blobcalc as bc


@pytest.fixture(scope="module")
def p52():
    return bc.validate_params(5, 2)


def test_params(p52):
    assert (p52.l, p52.m, p52.k) == (5, 2, 1)
    assert bc.validate_params(7, 3).k == 5
    with pytest.raises(bc.DomainError):
        bc.validate_params(5, 1)


def test_residue_sequence(p52):
    assert bc.residue_sequence_of_shape(p52, 6, 3) == [4, 1, 0, 2, 1, 3, 4, 0, 1]
    assert bc.tmax(6, 3) == [2, 1, 2, 1, 2, 1, 1, 1, 1]
    assert bc.walk_of(bc.tmax(6, 3)) == [0, -1, 0, -1, 0, -1, 0, 1, 2, 3]
    assert bc.tableau_of([0, -1, 0, 1]) == [2, 1, 1]


def test_isp(p52):
    assert bc.is_residue_sequence(p52, [1, 0, 0]) is None
    witness = bc.is_residue_sequence(p52, [4, 1, 0, 2, 1, 3, 4, 0, 1])
    assert witness is not None
    assert bc.residue_sequence(p52, witness) == [4, 1, 0, 2, 1, 3, 4, 0, 1]


def test_dihedral(p52):
    assert bc.multiply("st", "ts") == "e"
    assert bc.bruhat_leq("st", "tst")
    assert not bc.bruhat_leq("s", "t")
    assert bc.kl_h("e", "sts") == [(3, 1)]
    assert bc.alcove_of(p52, 15) == "tst"
    assert bc.act(p52, "ts", 0) == (10, 1)


def test_d_of():
    word, one_line = bc.d_of([2, 2, 2, 2, 1, 2, 1])
    assert word == [4, 3, 2, 6, 5, 4]
    assert bc.is_321_avoiding(one_line)


def test_blocks():
    p73 = bc.validate_params(7, 3)
    blocks = bc.block_decomposition(p73, 23, 2)
    assert blocks == [
        [8, 7, 6, 5, 9, 8, 7, 10, 9, 11],
        [15, 14, 16],
        [22, 21, 20, 19, 23, 22, 21, 24, 23],
    ]


def test_dotline():
    assert bc.dotline_normal_form(1, [2]) == []
    assert bc.dotline_normal_form(2, [0, 2]) == [(3, -2)]
    assert bc.dotline_dimension_oracle(4) == 16
    x1 = [(1, 1)]
    assert bc.dotline_multiply(2, x1, x1) == []


def test_leaves():
    leaves = bc.enumerate_leaves("sts")
    assert len(leaves) == 8
    tops = sorted(leaf["top"] for leaf in leaves)
    assert tops == ["e", "e", "s", "s", "st", "sts", "t", "ts"]
    assert bc.graded_dim_soergel("s") == [(0, 1), (2, 1)]


def test_bijection(p52):
    rep = bc.verify_bijection(p52, 18, 3)
    assert rep["ok"]
    assert rep["count_b"] == rep["count_A"] == 12
    assert rep["graded_b"] == rep["graded_A"]
    assert rep["F"][(18, 3)] == "tst"
    assert bc.central_element_degree(p52, 18, 3) == 6
    assert bc.graded_dim_blob(p52, 5, 1) == [(0, 1), (2, 1)]


def test_lambda_data(p52):
    data = bc.lambda_data(p52, 18, 3)
    assert data["a"] == 9
    assert data["q"] == 2
    assert data["mu"] == (11, 10)
    assert data["w"] == "tst"
    with pytest.raises(bc.DomainError):
        bc.lambda_data(p52, 2, 1)


def test_decomposition_matrix(p52):
    mat = bc.decomposition_matrix(p52, 8)
    idx = {pt: i for i, pt in enumerate(mat["points"])}
    assert mat["entries"][idx[0]][idx[0]] == [(0, 1)]
    assert mat["on_wall"][idx[-2]] == 1
