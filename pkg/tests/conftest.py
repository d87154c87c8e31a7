import random

import pytest
from hypothesis import strategies as st

from afsolve import build_framework

EXAMPLE1_ARGS = ["a", "b", "c", "d", "e", "f"]
EXAMPLE1_ATTACKS = [
    ("a", "b"),
    ("b", "d"),
    ("c", "b"),
    ("c", "d"),
    ("c", "e"),
    ("d", "c"),
    ("d", "e"),
    ("e", "f"),
]

EXAMPLE1_ADMISSIBLE = [
    set(),
    {"a"},
    {"c"},
    {"a", "c"},
    {"a", "d"},
    {"c", "f"},
    {"a", "c", "f"},
    {"a", "d", "f"},
]
EXAMPLE1_STABLE = [{"a", "d", "f"}, {"a", "c", "f"}]
EXAMPLE1_PREFERRED = [{"a", "c", "f"}, {"a", "d", "f"}]

EXAMPLE1_APX = """\
arg(a).
arg(b).
arg(c).
arg(d).
arg(e).
arg(f).
att(a,b).
att(a,b). % duplicates collapse
att(b,d).
att(c,b).
att(c,d).
att(c,e).
att(d,c).
att(d,e).
att(e,f).
"""


@pytest.fixture
def example1():
    return build_framework(EXAMPLE1_ARGS, EXAMPLE1_ATTACKS)


@pytest.fixture
def three_cycle():
    return build_framework("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def name_sets(fw, exts):
    """ExtensionSet -> list of name sets, for readable comparisons."""
    return [set(names) for names in exts.to_name_sets(fw)]


def random_framework(rng: random.Random, max_args: int = 10, p=None):
    n = rng.randint(0, max_args)
    if p is None:
        p = rng.choice([0.1, 0.2, 0.4])
    names = [f"a{i}" for i in range(n)]
    attacks = [
        (x, y) for x in names for y in names if rng.random() < p
    ]
    return build_framework(names, attacks)


@st.composite
def frameworks(draw, max_args: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_args))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    chosen = draw(
        st.lists(st.sampled_from(pairs), max_size=3 * n)
        if pairs
        else st.just([])
    )
    names = [f"a{i}" for i in range(n)]
    return build_framework(names, [(names[i], names[j]) for i, j in chosen])
