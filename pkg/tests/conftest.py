import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from endw import Algebra, Field, Kind

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIELDS = [Field(), Field(2), Field(-1), Field(3)]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, field=None, nonzero=False):
    field = field or draw(st.sampled_from(FIELDS))
    a = draw(rationals)
    b = draw(rationals) if field.d is not None else 0
    s = field(a, b)
    if nonzero and not s:
        s = field(1)
    return s


@st.composite
def algebras(draw, kinds=(Kind.COMMUTATIVE, Kind.ASSOCIATIVE), ns=(1, 2, 3), fields=None):
    return Algebra(draw(st.sampled_from(kinds)), draw(st.sampled_from(ns)), draw(st.sampled_from(fields or FIELDS)), 16)


@st.composite
def elements(draw, alg, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        deg = draw(st.integers(0, max_degree))
        word = draw(st.lists(st.integers(0, alg.n - 1), min_size=deg, max_size=deg))
        terms[alg.word_monomial(word)] = draw(scalars(alg.field))
    return alg.from_terms({m: c for m, c in terms.items() if c})
