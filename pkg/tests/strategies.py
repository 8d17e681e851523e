"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from kucomm.hopf import HopfElem
from kucomm.kumod import KuElem


def ku_elems(max_weight: int, positive: bool = False, max_size: int = 4):
    keys = st.tuples(st.integers(0, max_weight), st.integers(0, max_weight)).filter(
        lambda k: k[0] + k[1] <= max_weight and (not positive or k[0] + k[1] > 0)
    )
    return st.dictionaries(keys, st.integers(-4, 4), max_size=max_size).map(KuElem)


def hopf0_elems(max_weight: int, max_size: int = 3):
    """[0]-component elements: sums of zeta monomials of bounded weight."""
    gens = st.tuples(st.integers(0, max_weight), st.integers(0, max_weight)).filter(
        lambda g: 0 < g[0] + g[1] <= max_weight
    )
    monos = st.lists(gens, min_size=1, max_size=2).filter(
        lambda m: sum(a + b for a, b in m) <= max_weight
    )
    return st.lists(st.tuples(monos, st.integers(-3, 3)), max_size=max_size).map(
        lambda ts: HopfElem({(0, tuple(m)): c for m, c in ts})
    )
