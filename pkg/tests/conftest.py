import pytest
from hypothesis import strategies as st

from posetideals import Poset, from_up_rows, generate_corpus


def chain(n: int) -> Poset:
    return from_up_rows([((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)])


def antichain(n: int) -> Poset:
    return from_up_rows([1 << i for i in range(n)])


def diamond() -> Poset:
    # 0 < a, b < 1
    return from_up_rows((0b1111, 0b1010, 0b1100, 0b1000),
                        labels=("0", "a", "b", "1"))


def vee() -> Poset:
    # one bottom, two incomparable tops
    return from_up_rows((0b111, 0b010, 0b100), labels=("0", "a", "b"))


def wedge() -> Poset:
    # two incomparable bottoms under one top
    return from_up_rows((0b101, 0b110, 0b100), labels=("a", "b", "1"))


@pytest.fixture(scope="session")
def corpus4():
    return generate_corpus(4)


@pytest.fixture(scope="session")
def corpus5():
    return generate_corpus(5)


@st.composite
def posets(draw, max_n: int = 5) -> Poset:
    """Random poset: a relation on naturally ordered points, transitively
    closed.  Reaches every isomorphism class since every finite poset can
    be relabeled along a linear extension."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
    for i in reversed(range(n)):
        acc = rows[i]
        for j in range(i + 1, n):
            if rows[i] >> j & 1:
                acc |= rows[j]
        rows[i] = acc
    return from_up_rows(rows)


def relabel(P: Poset, perm) -> Poset:
    """Q with Q.leq(perm[i], perm[j]) == P.leq(i, j)."""
    rows = [0] * P.n
    for i in range(P.n):
        for j in range(P.n):
            if P.leq(i, j):
                rows[perm[i]] |= 1 << perm[j]
    return from_up_rows(rows)


@st.composite
def relabelings(draw, max_n: int = 5):
    P = draw(posets(max_n))
    perm = tuple(draw(st.permutations(range(P.n))))
    return P, relabel(P, perm), perm
