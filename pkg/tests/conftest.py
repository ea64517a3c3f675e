import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cliffeq.algebra import Multivector, Signature

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def signatures(draw, max_n=5, min_n=0):
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(0, n))
    return Signature(r, n - r)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def multivectors(draw, sig, max_terms=6):
    masks = draw(st.lists(st.integers(0, sig.dim - 1), max_size=max_terms, unique=True))
    return Multivector(sig, {m: draw(rationals) for m in masks})


@st.composite
def sig_and_mvs(draw, count, max_n=5, min_n=0):
    sig = draw(signatures(max_n, min_n))
    return (sig, *[draw(multivectors(sig)) for _ in range(count)])


@pytest.fixture
def sig31():
    return Signature(3, 1)


@pytest.fixture
def sig02():
    return Signature(0, 2)
