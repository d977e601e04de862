"""Small named monoids and DFAs used as fixtures and examples."""

from __future__ import annotations

import random

from .errors import SizeLimitExceeded
from .fields import FieldSpec, parse_fields
from .languages import Dfa, parse_dfa, transition_monoid
from .monoid import FiniteMonoid, monoid_from_transformations

STANDARD_FIELDS = ("AC0", "AC2", "AC3", "F2", "F3", "F4", "Q")

A_STAR = """\
dfa 1 0
accept 0
alphabet a
0: a->0
"""

FULL_BINARY = """\
dfa 1 0
accept 0
alphabet a b
0: a->0 b->0
"""

EMPTY_BINARY = """\
dfa 1 0
accept
alphabet a b
0: a->0 b->0
"""

EVEN_A = """\
# (aa)*
dfa 2 0
accept 0
alphabet a
0: a->1
1: a->0
"""

EVEN_A_PLUS = """\
# (aa)+: even, nonempty
dfa 3 0
accept 2
alphabet a
0: a->1
1: a->2
2: a->1
"""

# Periodic words of the golden mean shift: no 11, also across the wrap-around.
# States track (first letter, last letter): 1=(0,0) 2=(0,1) 3=(1,0) 4=(1,1), 5 dead.
GOLDEN_MEAN = """\
dfa 6 0
accept 0 1 2 3
alphabet 0 1
0: 0->1 1->4
1: 0->1 1->2
2: 0->1 1->5
3: 0->3 1->4
4: 0->3 1->5
5: 0->5 1->5
"""

DFA_TEXTS = {
    "a_star": A_STAR,
    "full_binary": FULL_BINARY,
    "empty_binary": EMPTY_BINARY,
    "even_a": EVEN_A,
    "even_a_plus": EVEN_A_PLUS,
    "golden_mean": GOLDEN_MEAN,
}

CYCLIC_DFAS = ("a_star", "full_binary", "golden_mean")


def dfa(name: str) -> Dfa:
    return parse_dfa(DFA_TEXTS[name])


def standard_fields() -> list[FieldSpec]:
    return parse_fields(STANDARD_FIELDS)


# Corpus members are built as transformation monoids so that every one of
# them carries a defining representation.


def trivial_monoid() -> FiniteMonoid:
    return monoid_from_transformations(1, [])


def u1() -> FiniteMonoid:
    """``{1, 0}``: index 0 is the identity, index 1 the zero (a constant map)."""
    return monoid_from_transformations(2, [(0, 0)])


def rotation_group(n: int) -> FiniteMonoid:
    """Cyclic group of order ``n`` acting on ``n`` points; element ``k`` is
    the ``k``-th power of the rotation, as in :func:`monochar.monoid.cyclic_group`."""
    return monoid_from_transformations(n, [tuple(range(1, n)) + (0,)])


def full_transformation_monoid(degree: int) -> FiniteMonoid:
    if degree == 1:
        return monoid_from_transformations(1, [])
    cycle = tuple(range(1, degree)) + (0,)
    swap = (1, 0) + tuple(range(2, degree))
    collapse = (0, 0) + tuple(range(2, degree))
    gens = [swap, collapse] if degree == 2 else [cycle, swap, collapse]
    return monoid_from_transformations(degree, gens)


def t2() -> FiniteMonoid:
    """``{id, swap, const0, const1}`` in that order."""
    return monoid_from_transformations(2, [(1, 0), (0, 0)])


def symmetric_group_3() -> FiniteMonoid:
    return monoid_from_transformations(3, [(1, 2, 0), (1, 0, 2)])


def random_transformation_submonoids(
    degree: int = 4, count: int = 3, max_size: int = 60, min_size: int = 20, seed: int = 2014
) -> list[FiniteMonoid]:
    """Submonoids of ``T_degree`` generated by two random maps, with
    ``min_size <= |M| <= max_size``; deterministic in ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        gens = [tuple(rng.randrange(degree) for _ in range(degree)) for _ in range(2)]
        try:
            M = monoid_from_transformations(degree, gens, limit=max_size)
        except SizeLimitExceeded:
            continue
        if M.size >= min_size:
            out.append(M)
    return out


def monoid_corpus() -> dict[str, FiniteMonoid]:
    corpus = {"trivial": trivial_monoid(), "U1": u1()}
    for n in range(2, 7):
        corpus[f"C{n}"] = rotation_group(n)
    corpus["S3"] = symmetric_group_3()
    corpus["T2"] = t2()
    corpus["T3"] = full_transformation_monoid(3)
    for name in ("golden_mean", "even_a_plus", "even_a"):
        corpus[f"M({name})"] = transition_monoid(dfa(name)).monoid
    for k, M in enumerate(random_transformation_submonoids()):
        corpus[f"T4sub{k}"] = M
    return corpus
