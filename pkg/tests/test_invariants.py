import random
from fractions import Fraction as F
from itertools import product

import pytest

from cliffeq.algebra import Signature, apply_orthogonal, omega_squared
from cliffeq.errors import DimensionCapError
from cliffeq.invariants import (
    brute_force_invariants,
    find_equivariant_complex_structures,
    find_equivariant_idempotents,
    invariant_subspace,
    is_equivariant,
    rational_sqrt,
)
from cliffeq.lie import LinearOperator, left_mul_operator, right_mul_operator, sample_so_elements
from cliffeq.verify import random_multivector, theorem_condition

ALL_UP_TO_6 = [(r, n - r) for n in range(7) for r in range(n + 1)]
ALL_UP_TO_8 = [(r, n - r) for n in range(9) for r in range(n + 1)]


@pytest.mark.parametrize(
    "rs, expected",
    [((3, 1), [(), (1, 2, 3, 4)]), ((0, 2), [(), (1, 2)]), ((1, 0), [(), (1,)])],
)
def test_invariant_subspace_examples(rs, expected):
    sig = Signature(*rs)
    got = list(invariant_subspace(sig))
    assert got == [sig.e(*idx) for idx in expected]


def test_brute_force_examples():
    sig = Signature(2, 0)
    assert list(brute_force_invariants(sig)) == [sig.scalar(1), sig.omega]
    sig = Signature(0, 1)
    assert list(brute_force_invariants(sig)) == [sig.scalar(1), sig.e(1)]
    sig = Signature(3, 1)
    assert list(brute_force_invariants(sig)) == [sig.scalar(1), sig.omega]
    with pytest.raises(DimensionCapError):
        brute_force_invariants(Signature(7, 0))


@pytest.mark.parametrize("r, s", ALL_UP_TO_6)
def test_fast_path_matches_dense_oracle(r, s):
    sig = Signature(r, s)
    assert invariant_subspace(sig).vectors == brute_force_invariants(sig).vectors


@pytest.mark.parametrize("r, s", [(2, 0), (1, 1), (3, 1), (2, 2), (1, 4)])
def test_invariants_fixed_by_group(r, s):
    sig = Signature(r, s)
    for g in sample_so_elements(sig):
        for v in invariant_subspace(sig):
            assert apply_orthogonal(g, v) == v


def test_complex_structure_examples():
    sig = Signature(3, 1)
    assert find_equivariant_complex_structures(sig) == [-sig.omega, sig.omega]
    assert find_equivariant_complex_structures(Signature(4, 0)) == []
    sig = Signature(1, 0)
    assert find_equivariant_complex_structures(sig) == [-sig.e(1), sig.e(1)]


def _grid_solutions(sig, alpha, beta):
    """Brute force: c + d*u over a grid of small rationals (u = last invariant vector)."""
    basis = list(invariant_subspace(sig))
    grid = sorted({F(a, b) for a in range(-3, 4) for b in (1, 2)})
    out = set()
    coeff_sets = product(grid, repeat=len(basis))
    for coeffs in coeff_sets:
        x = sig.zero()
        for c, v in zip(coeffs, basis):
            x = x + v.scale(c)
        if x * x == x.scale(alpha) + beta:
            out.add(x)
    return out


@pytest.mark.parametrize("rs", [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 1), (0, 3)])
def test_quadratic_solves_match_grid_search(rs):
    sig = Signature(*rs)
    assert set(find_equivariant_complex_structures(sig)) == _grid_solutions(sig, 0, -1)
    assert set(find_equivariant_idempotents(sig)) == _grid_solutions(sig, 1, 0)


def test_idempotent_examples():
    sig = Signature(3, 1)
    assert find_equivariant_idempotents(sig) == [sig.zero(), sig.scalar(1)]
    sig = Signature(1, 1)
    w = sig.e(1, 2)
    assert find_equivariant_idempotents(sig) == [sig.zero(), (1 - w) / 2, (1 + w) / 2, sig.scalar(1)]
    sig = Signature(0, 0)
    assert find_equivariant_idempotents(sig) == [sig.zero(), sig.scalar(1)]


@pytest.mark.parametrize("r, s", ALL_UP_TO_8)
def test_theorem_sweep(r, s):
    sig = Signature(r, s)
    sols = find_equivariant_complex_structures(sig)
    assert bool(sols) == theorem_condition(r, s) == (omega_squared(sig) == -1)
    if sols:
        assert set(sols) == {sig.omega, -sig.omega}


def test_is_equivariant_examples():
    sig = Signature(2, 0)
    assert is_equivariant(sig.omega)
    assert not is_equivariant(sig.e(1))
    assert is_equivariant(sig.scalar(1))
    assert not is_equivariant(Signature(3, 1).e(1, 2))


@pytest.mark.parametrize("rs", [(3, 1), (0, 2), (1, 0), (3, 2)])
def test_solutions_give_operator_level_complex_structures(rs):
    sig = Signature(*rs)
    rng = random.Random(7)
    ident = LinearOperator.identity(sig.dim)
    for j in find_equivariant_complex_structures(sig):
        R = right_mul_operator(j)
        assert R @ R == -ident
        for _ in range(5):
            Lx = left_mul_operator(random_multivector(sig, rng))
            assert R @ Lx == Lx @ R


def test_rational_sqrt():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(F(2)) is None
    assert rational_sqrt(F(-1)) is None
    assert rational_sqrt(F(0)) == 0
