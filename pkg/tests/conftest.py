from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("suite", max_examples=30, deadline=None)
settings.load_profile("suite")

from psicalc import Polynomial

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=6
)


def polynomials(max_degree=8):
    return st.lists(rationals, max_size=max_degree + 1).map(Polynomial)
