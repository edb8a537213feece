"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from rppjt.polyring import Polynomial, t_var, x_var

variables = st.one_of(
    st.integers(1, 4).map(x_var),
    st.integers(1, 4).map(t_var),
)

monomials = st.dictionaries(variables, st.integers(1, 3), max_size=3)

polynomials = st.lists(st.tuples(monomials, st.integers(-9, 9)), max_size=5).map(Polynomial.from_terms)
