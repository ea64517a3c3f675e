from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffeq.gaussian import ComplexMatrix, GaussianRational, I, ONE, ZERO, pauli

gauss = st.builds(
    GaussianRational,
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
)


def test_i_squared():
    assert I * I == -1


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


def test_format_and_json():
    z = GaussianRational(F(1, 2), F(-3, 4))
    assert str(z) == "1/2-(3/4)i"
    assert z.format("latex") == r"\frac{1}{2}-\frac{3}{4}i"
    assert str(-I) == "-i" and str(ZERO) == "0"
    assert GaussianRational.from_json(z.to_json()) == z


def test_complex_float_rejected():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1j)


def test_pauli_algebra():
    s1, s2, s3 = pauli()
    e = ComplexMatrix.identity(2)
    for s in (s1, s2, s3):
        assert s @ s == e
    assert s1 @ s2 == s3.scale(I)
    assert s1 @ s2 + s2 @ s1 == ComplexMatrix.zeros(2)


def test_block_and_json_round_trip():
    s1, s2, s3 = pauli()
    z = ComplexMatrix.zeros(2)
    g = ComplexMatrix.block([[z, -s2], [s2, z]])
    assert g.m == 4
    assert g[0, 3] == I and g[3, 0] == I
    data = g.to_json()
    assert data["m"] == 4 and data["entries"][0][3] == ["0", "1"]
    assert ComplexMatrix.from_json(data) == g


def test_latex_pmatrix():
    tex = pauli()[1].to_latex()
    assert tex.startswith("\\begin{pmatrix}") and "-i" in tex


@given(st.lists(gauss, min_size=9, max_size=9), st.lists(gauss, min_size=9, max_size=9))
def test_matmul_matches_naive(a, b):
    A = ComplexMatrix([a[0:3], a[3:6], a[6:9]])
    B = ComplexMatrix([b[0:3], b[3:6], b[6:9]])
    naive = [[sum((A[i, k] * B[k, j] for k in range(3)), ZERO) for j in range(3)] for i in range(3)]
    assert A @ B == ComplexMatrix(naive)
