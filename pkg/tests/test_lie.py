from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffeq.algebra import Multivector, Signature, apply_orthogonal, blade_indices
from cliffeq.errors import InvalidBladeError
from cliffeq.lie import (
    LieGenerator,
    LinearOperator,
    act_on_blade,
    act_on_multivector,
    act_on_vector,
    action_matrix,
    check_so_membership,
    generator_matrix,
    generators,
    left_mul_operator,
    right_mul_operator,
    sample_improper_elements,
    sample_so_elements,
)

from .conftest import multivectors, sig_and_mvs, signatures

L12 = LieGenerator(1, 2)


def test_act_on_vector_examples():
    sig = Signature(2, 0)
    assert act_on_vector(sig, L12, 1) == -sig.e(2)
    assert act_on_vector(sig, L12, 2) == sig.e(1)
    assert act_on_vector(Signature(3, 1), L12, 3).is_zero()
    with pytest.raises(InvalidBladeError):
        act_on_vector(sig, L12, 3)


def test_act_on_vector_mixed_signs():
    sig = Signature(1, 1)
    # eps_1 = +1, eps_2 = -1
    assert act_on_vector(sig, L12, 1) == -sig.e(2)
    assert act_on_vector(sig, L12, 2) == -sig.e(1)


def test_generator_validation():
    with pytest.raises(InvalidBladeError):
        LieGenerator(2, 2)
    with pytest.raises(InvalidBladeError):
        act_on_blade(Signature(1, 0), L12, 1)


def test_act_on_blade_examples():
    sig = Signature(2, 0)
    assert act_on_blade(sig, L12, 0b11).is_zero()
    assert act_on_blade(sig, L12, 0).is_zero()
    sig31 = Signature(3, 1)
    assert act_on_blade(sig31, L12, 0b1) == -sig31.e(2)


def test_act_on_multivector_examples(sig31):
    assert act_on_multivector(sig31, L12, sig31.scalar(1)).is_zero()
    assert act_on_multivector(sig31, L12, sig31.e(1) + sig31.e(3)) == -sig31.e(2)
    for L in generators(sig31):
        assert act_on_multivector(sig31, L, sig31.omega).is_zero()


@pytest.mark.parametrize("n", range(2, 9))
def test_facts_one_and_two_exhaustive(n):
    for r in (0, n // 2, n):
        sig = Signature(r, n - r)
        for L in generators(sig):
            j, k = 1 << (L.j - 1), 1 << (L.k - 1)
            images = {}
            for mask in sig.blades():
                img = act_on_blade(sig, L, mask)
                meets = bool(mask & j) + bool(mask & k)
                assert img.is_zero() == (meets != 1)
                if meets == 1:
                    ((m, c),) = img.items()
                    assert c in (1, -1)
                    images[mask] = m
            src = [m for m in images if m & j]
            dst = {images[m] for m in src}
            assert len(dst) == len(src)
            assert dst == {m for m in sig.blades() if m & k and not m & j}


def test_action_matrix_examples():
    sig = Signature(2, 0)
    op = action_matrix(sig, L12)
    assert [c for c, _ in op.columns()] == [0b01, 0b10]
    sig31 = Signature(3, 1)
    for L in generators(sig31):
        op = action_matrix(sig31, L)
        assert not op.column(0) and not op.column(sig31.dim - 1)
        assert all(len(col) == 1 for _, col in op.columns())


@given(sig_and_mvs(2, max_n=6, min_n=2))
def test_leibniz_rule(args):
    sig, x, y = args
    for L in generators(sig):
        lhs = act_on_multivector(sig, L, x * y)
        rhs = act_on_multivector(sig, L, x) * y + x * act_on_multivector(sig, L, y)
        assert lhs == rhs


def test_left_and_right_multiplication_examples(sig02, sig31):
    assert left_mul_operator(sig31.scalar(1)) == LinearOperator.identity(16)
    R = right_mul_operator(sig02.omega)
    assert R @ R == -LinearOperator.identity(4)
    L1, Rw = left_mul_operator(sig31.e(1)), right_mul_operator(sig31.omega)
    assert L1 @ Rw == Rw @ L1


@given(sig_and_mvs(2, max_n=5))
def test_left_right_commute(args):
    sig, a, b = args
    assert right_mul_operator(a) @ left_mul_operator(b) == left_mul_operator(b) @ right_mul_operator(a)


@given(sig_and_mvs(2, max_n=5))
def test_operators_apply_products(args):
    sig, a, x = args
    assert Multivector(sig, left_mul_operator(a).apply(x.terms)) == a * x
    assert Multivector(sig, right_mul_operator(a).apply(x.terms)) == x * a


def test_operator_json_round_trip(sig31):
    op = right_mul_operator((1 - sig31.e(1, 4)) / 2)
    data = op.to_json()
    assert data["dim"] == 16
    assert all(isinstance(v, str) for col in data["cols"].values() for _, v in col)
    assert LinearOperator.from_json(data) == op


def test_sample_so_elements_contents():
    f = F
    rot = ((f(3, 5), f(-4, 5)), (f(4, 5), f(3, 5)))
    assert rot in [g.entries for g in sample_so_elements(Signature(2, 0))]
    boost = ((f(5, 3), f(4, 3)), (f(4, 3), f(5, 3)))
    assert boost in [g.entries for g in sample_so_elements(Signature(1, 1))]
    cyc = ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
    assert cyc in [g.entries for g in sample_so_elements(Signature(3, 1))]
    assert sample_so_elements(Signature(1, 0)) == []


@pytest.mark.parametrize("r, s", [(2, 0), (1, 1), (3, 1), (2, 3), (0, 4)])
def test_sampled_elements_are_proper_or_improper(r, s):
    sig = Signature(r, s)
    assert all(g.det == 1 for g in sample_so_elements(sig))
    assert all(g.det == -1 for g in sample_improper_elements(sig))


def test_so_membership():
    sig = Signature(3, 1)
    for L in generators(sig):
        assert check_so_membership(sig, generator_matrix(sig, L))
    ident = [[int(a == b) for b in range(4)] for a in range(4)]
    assert not check_so_membership(sig, ident)
    assert check_so_membership(sig, [[0] * 4 for _ in range(4)])


def test_generator_matrix_columns_follow_vector_action(sig31):
    for L in generators(sig31):
        m = generator_matrix(sig31, L)
        for i in range(1, 5):
            col = Multivector(sig31, {1 << t: m[t][i - 1] for t in range(4)})
            assert col == act_on_vector(sig31, L, i)
