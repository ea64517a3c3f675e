from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffeq.algebra import (
    Multivector,
    OrthogonalMap,
    Signature,
    apply_orthogonal,
    blade,
    blade_indices,
    blade_mul,
    omega_squared,
    volume_element,
)
from cliffeq.errors import DimensionCapError, InvalidBladeError, NotOrthogonalError, SignatureMismatchError
from cliffeq.lie import sample_improper_elements, sample_so_elements

from .conftest import multivectors, sig_and_mvs, signatures


def naive_product(sig, factors):
    """Bubble-sort a word of generator indices, contracting equal neighbours."""
    word = list(factors)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a > b:
                word[i], word[i + 1] = b, a
                sign = -sign
                changed = True
                break
            if a == b:
                sign *= -sig.eps(a)
                del word[i : i + 2]
                changed = True
                break
    return sign, tuple(word)


def test_naive_oracle_on_hand_cases():
    assert naive_product(Signature(1, 0), [1, 1]) == (-1, ())
    assert naive_product(Signature(0, 2), [2, 1]) == (-1, (1, 2))


@pytest.mark.parametrize(
    "rs, a, b, expected",
    [
        ((1, 0), (1,), (1,), (-1, ())),
        ((0, 2), (1,), (1, 2), (1, (2,))),
        ((3, 1), (1, 4), (1, 4), (1, ())),
    ],
)
def test_blade_mul_examples(rs, a, b, expected):
    sig = Signature(*rs)
    sign, mask = blade_mul(sig, blade(sig, a), blade(sig, b))
    assert (sign, blade_indices(mask)) == expected
    assert naive_product(sig, a + b) == expected


@given(signatures(max_n=7), st.data())
def test_blade_mul_matches_naive(sig, data):
    a = data.draw(st.integers(0, sig.dim - 1))
    b = data.draw(st.integers(0, sig.dim - 1))
    sign, mask = blade_mul(sig, a, b)
    assert (sign, blade_indices(mask)) == naive_product(sig, blade_indices(a) + blade_indices(b))


@pytest.mark.parametrize("r, s", [(r, n - r) for n in range(7) for r in range(n + 1)])
def test_generators_anticommute_and_square(r, s):
    sig = Signature(r, s)
    for j in range(1, sig.n + 1):
        assert sig.e(j) * sig.e(j) == -sig.eps(j)
        for k in range(j + 1, sig.n + 1):
            assert (sig.e(j) * sig.e(k) + sig.e(k) * sig.e(j)).is_zero()


def test_mv_mul_examples(sig31, sig02):
    p = (1 - sig31.e(1, 4)) / 2
    # (1 - e14)^2 / 4 = (1 - 2 e14 + 1) / 4
    assert p * p == Multivector(sig31, {0: F(1, 2), 0b1001: F(-1, 2)})
    assert sig02.e(1, 2) * sig02.e(1, 2) == -1
    x = sig31.e(2) + F(3, 7) * sig31.e(1, 3, 4)
    assert sig31.scalar(1) * x == x and x * 1 == x


def test_add_and_scale_examples():
    sig = Signature(2, 1)
    e1 = sig.e(1)
    assert e1 + sig.zero() == e1
    assert (e1 / 2).scale(2) == e1
    assert (1 + e1) + (1 - e1) == 2
    assert ((1 + e1) + (1 - e1)).terms == {0: 2}
    assert (e1 - e1).is_zero() and not (e1 - e1).terms


@given(sig_and_mvs(3, max_n=6))
def test_associativity(args):
    sig, x, y, z = args
    assert (x * y) * z == x * (y * z)


@given(sig_and_mvs(3, max_n=5))
def test_distributivity(args):
    sig, x, y, z = args
    assert x * (y + z) == x * y + x * z


def test_volume_element_examples():
    assert blade_indices(volume_element(Signature(3, 1))) == (1, 2, 3, 4)
    assert volume_element(Signature(0, 0)) == 0
    assert blade_indices(volume_element(Signature(0, 2))) == (1, 2)


@pytest.mark.parametrize("rs, expected", [((3, 1), -1), ((0, 2), -1), ((4, 0), 1)])
def test_omega_squared_examples(rs, expected):
    sig = Signature(*rs)
    assert omega_squared(sig) == expected
    assert sig.omega * sig.omega == expected


def test_omega_squared_sweep_direct_vs_rule():
    for n in range(9):
        for r in range(n + 1):
            sig = Signature(r, n - r)
            direct = (sig.omega * sig.omega).coeff(0)
            assert omega_squared(sig) == direct


def test_signature_validation(monkeypatch):
    with pytest.raises(ValueError):
        Signature(-1, 2)
    with pytest.raises(DimensionCapError):
        Signature(13, 0)
    monkeypatch.setenv("CLIFFEQ_MAX_N", "14")
    assert Signature(13, 1).n == 14
    monkeypatch.setenv("CLIFFEQ_MAX_N", "3")
    with pytest.raises(DimensionCapError):
        Signature(2, 2)


def test_blade_validation():
    sig = Signature(2, 0)
    with pytest.raises(InvalidBladeError):
        sig.e(3)
    with pytest.raises(InvalidBladeError):
        sig.e(2, 1)
    with pytest.raises(InvalidBladeError):
        Multivector(sig, {4: 1})
    with pytest.raises(SignatureMismatchError):
        sig.e(1) + Signature(1, 1).e(1)


def test_degenerate_signature_is_the_scalars():
    sig = Signature(0, 0)
    assert sig.dim == 1
    assert sig.omega == 1
    assert (sig.scalar(3) * sig.scalar(F(1, 3))) == 1


def test_apply_orthogonal_examples():
    sig = Signature(2, 0)
    rot = OrthogonalMap(sig, ((F(3, 5), F(-4, 5)), (F(4, 5), F(3, 5))))
    assert rot.det == 1
    assert apply_orthogonal(rot, sig.omega) == sig.omega
    flip = OrthogonalMap(sig, ((1, 0), (0, -1)))
    assert flip.det == -1
    assert apply_orthogonal(flip, sig.omega) == -sig.omega
    x = sig.e(1) + F(2, 3) * sig.e(1, 2) + 5
    assert apply_orthogonal(OrthogonalMap.identity(sig), x) == x
    # e1 -> 3/5 e1 + 4/5 e2
    assert apply_orthogonal(rot, sig.e(1)) == F(3, 5) * sig.e(1) + F(4, 5) * sig.e(2)


def test_orthogonal_map_rejects_non_isometries():
    sig = Signature(1, 1)
    with pytest.raises(NotOrthogonalError):
        OrthogonalMap(sig, ((F(3, 5), F(-4, 5)), (F(4, 5), F(3, 5))))
    with pytest.raises(NotOrthogonalError):
        OrthogonalMap(Signature(2, 0), ((2, 0), (0, 1)))


@given(signatures(max_n=5, min_n=2), st.data())
def test_orthogonal_extension_is_multiplicative(sig, data):
    g = data.draw(st.sampled_from(sample_so_elements(sig) + sample_improper_elements(sig)))
    x = data.draw(multivectors(sig))
    y = data.draw(multivectors(sig))
    assert apply_orthogonal(g, x * y) == apply_orthogonal(g, x) * apply_orthogonal(g, y)
    assert apply_orthogonal(g, sig.omega) == sig.omega.scale(g.det)
