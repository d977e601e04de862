"""Finite monoids given by multiplication tables, and their elementary structure.

Elements are dense indices ``0..size-1``.  Everything here is table driven;
transformation images, when present, are carried along only as metadata.

Transformations compose left to right: ``(f*g)(x) = g(f(x))``, so that the
map sending a letter of a DFA to its state transformation extends to a
monoid homomorphism on words read left to right.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    AssociativityViolation,
    IdentityViolation,
    ImageOutOfRange,
    IndexOutOfRange,
    NotGroupElement,
    NotIdempotent,
    ParseError,
    SizeLimitExceeded,
    WitnessInvalid,
)

DEFAULT_SIZE_LIMIT = 10_000


class IndexPeriod(NamedTuple):
    index: int
    period: int


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """A finite monoid as a complete multiplication table.

    ``table[a][b]`` is the index of ``a*b``.  The constructor does not
    validate; use :func:`monoid_from_table` for untrusted input.  Instances
    hash by identity, which lets per-monoid caches stay cheap.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] | None = None
    images: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __iter__(self):
        return iter(range(len(self.table)))

    def mul(self, *elements: int) -> int:
        acc = self.identity
        for m in elements:
            acc = self.table[acc][m]
        return acc

    def power(self, m: int, k: int) -> int:
        """``m**k`` by repeated squaring; ``k = 0`` gives the identity."""
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.identity, m
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def label(self, m: int) -> str:
        return self.labels[m] if self.labels else str(m)

    @cached_property
    def _index_periods(self) -> tuple[IndexPeriod, ...]:
        out = []
        for m in range(self.size):
            seen = {}
            x, k = m, 1
            while x not in seen:
                seen[x] = k
                x = self.table[x][m]
                k += 1
            r = seen[x]
            out.append(IndexPeriod(r, k - r))
        return tuple(out)

    @cached_property
    def _inverse_pairs(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        # (xy, yx) -> all (x, y) with xyx = x and yxy = y, in lexicographic order
        t = np.asarray(self.table)
        n = self.size
        xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        xy = t[xs, ys]
        yx = t[ys, xs]
        ok = (t[xy, xs] == xs) & (t[yx, ys] == ys)
        pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for x, y in zip(*np.nonzero(ok)):
            key = (int(xy[x, y]), int(yx[x, y]))
            pairs.setdefault(key, []).append((int(x), int(y)))
        return pairs

    @cached_property
    def _ideals(self) -> tuple[frozenset[int], ...]:
        t = self.table
        out = []
        for m in range(self.size):
            left = {t[x][m] for x in range(self.size)}
            out.append(frozenset(t[a][y] for a in left for y in range(self.size)))
        return tuple(out)


class GroupView:
    """The maximal subgroup of a monoid at an idempotent."""

    def __init__(self, host: FiniteMonoid, idempotent: int, inverse: dict[int, int]):
        self.host = host
        self.idempotent = idempotent
        self.inverse = dict(inverse)
        self.elements = tuple(sorted(inverse))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.inverse

    def __repr__(self):
        return f"GroupView(idempotent={self.idempotent}, elements={self.elements})"

    def mul(self, *elements: int) -> int:
        acc = self.idempotent
        for g in elements:
            acc = self.host.table[acc][g]
        return acc

    def conjugate(self, x: int, g: int) -> int:
        """``x g x^-1``."""
        return self.mul(x, g, self.inverse[x])


# -- construction ---------------------------------------------------------


def monoid_from_table(
    size: int,
    table_rows: Sequence[Sequence[int]],
    identity: int,
    labels: Sequence[str] | None = None,
) -> FiniteMonoid:
    if size < 1:
        raise IndexOutOfRange("a monoid needs at least one element")
    if len(table_rows) != size or any(len(row) != size for row in table_rows):
        raise IndexOutOfRange(f"table must be {size}x{size}")
    if not 0 <= identity < size:
        raise IndexOutOfRange(f"identity {identity} not in [0, {size})")
    for a, row in enumerate(table_rows):
        for b, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < size:
                raise IndexOutOfRange(f"table[{a}][{b}] = {v!r} not in [0, {size})")

    t = np.asarray(table_rows, dtype=np.int64)
    idx = np.arange(size)
    for a in range(size):
        if t[identity, a] != a or t[a, identity] != a:
            raise IdentityViolation(a)
    left = t[t]  # left[a, b, c] = (a*b)*c
    right = t[idx[:, None, None], t[None, :, :]]  # right[a, b, c] = a*(b*c)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise AssociativityViolation(a, b, c)

    return FiniteMonoid(
        table=tuple(tuple(int(v) for v in row) for row in table_rows),
        identity=int(identity),
        labels=tuple(labels) if labels is not None else None,
    )


def _format_map(img: Sequence[int]) -> str:
    return "[" + " ".join(map(str, img)) + "]"


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``f*g``: apply ``f`` first, then ``g``."""
    return tuple(g[x] for x in f)


def monoid_from_transformations(
    degree: int,
    generators: Iterable[Sequence[int]],
    limit: int = DEFAULT_SIZE_LIMIT,
) -> FiniteMonoid:
    """The monoid generated by total maps on ``{0, ..., degree-1}``.

    Element 0 is the identity map; the rest follow in breadth-first order
    of right multiplication by the generators.
    """
    if degree < 1:
        raise ImageOutOfRange("degree must be positive")
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if len(g) != degree or any(not 0 <= v < degree for v in g):
            raise ImageOutOfRange(f"generator {list(g)} is not a map on {degree} points")
        gens.append(g)

    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        f = queue.popleft()
        for g in gens:
            h = compose(f, g)
            if h not in index:
                if len(elements) >= limit:
                    raise SizeLimitExceeded(f"generated monoid exceeds {limit} elements")
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)

    table = tuple(
        tuple(index[compose(f, g)] for g in elements) for f in elements
    )
    return FiniteMonoid(
        table=table,
        identity=0,
        labels=tuple(_format_map(f) for f in elements),
        images=tuple(elements),
    )


def cyclic_group(order: int) -> FiniteMonoid:
    """Integers mod ``order`` under addition; element ``k`` is ``g**k``."""
    table = tuple(tuple((a + b) % order for b in range(order)) for a in range(order))
    return FiniteMonoid(table=table, identity=0, labels=tuple(f"g^{k}" for k in range(order)))


def find_element(M: FiniteMonoid, image: Sequence[int]) -> int:
    """Index of the transformation with the given images."""
    return M.images.index(tuple(image))


# -- text format ----------------------------------------------------------


def _ints(tokens, lineno, line):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, line.find(tok) + 1) from None
    return out


def parse_monoid(text: str, limit: int = DEFAULT_SIZE_LIMIT) -> FiniteMonoid:
    """Read a monoid in table or transformation format.

    Table format::

        monoid <size> <identity>
        <size rows of size indices>

    Transformation format::

        transformations <degree>
        <one generator per line, as its images>

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            lines.append((lineno, line))
    if not lines:
        raise ParseError("empty input", 1, 1)

    lineno, header = lines[0]
    words = header.split()
    kind = words[0]
    if kind == "monoid":
        if len(words) != 3:
            raise ParseError("expected 'monoid <size> <identity>'", lineno, 1)
        size, identity = _ints(words[1:], lineno, header)
        rows = [_ints(line.split(), n, line) for n, line in lines[1:]]
        if len(rows) != size:
            last = lines[-1][0]
            raise ParseError(f"expected {size} table rows, found {len(rows)}", last, 1)
        for (n, line), row in zip(lines[1:], rows):
            if len(row) != size:
                raise ParseError(f"expected {size} entries, found {len(row)}", n, 1)
        return monoid_from_table(size, rows, identity)
    if kind == "transformations":
        if len(words) != 2:
            raise ParseError("expected 'transformations <degree>'", lineno, 1)
        (degree,) = _ints(words[1:], lineno, header)
        gens = []
        for n, line in lines[1:]:
            g = _ints(line.split(), n, line)
            if len(g) != degree or any(not 0 <= v < degree for v in g):
                raise ParseError(f"generator is not a map on {degree} points", n, 1)
            gens.append(g)
        return monoid_from_transformations(degree, gens, limit=limit)
    raise ParseError(f"unknown header {kind!r}", lineno, 1)


def format_monoid(M: FiniteMonoid) -> str:
    lines = [f"monoid {M.size} {M.identity}"]
    lines += [" ".join(map(str, row)) for row in M.table]
    return "\n".join(lines) + "\n"


# -- powers ---------------------------------------------------------------


def index_period(M: FiniteMonoid, m: int) -> IndexPeriod:
    """Minimal ``(r, s)`` with ``m**r == m**(r+s)``."""
    return M._index_periods[m]


def omega(M: FiniteMonoid, m: int) -> int:
    """The idempotent power of ``m``."""
    r, s = M._index_periods[m]
    k = s * math.ceil(r / s)
    return M.power(m, k)


def omega_plus_one(M: FiniteMonoid, m: int) -> int:
    return M.table[omega(M, m)][m]


def is_group_element(M: FiniteMonoid, m: int) -> bool:
    return M._index_periods[m].index == 1


def group_order(M: FiniteMonoid, m: int) -> int:
    r, s = M._index_periods[m]
    if r != 1:
        raise NotGroupElement(f"element {m} is not a group element (index {r})")
    return s


def is_p_regular(M: FiniteMonoid, m: int, p: int) -> bool:
    r, s = M._index_periods[m]
    return r == 1 and (p == 0 or s % p != 0)


def _coprime_part_exponent(order: int, p: int) -> int:
    """Exponent ``z`` in ``[1, order]`` with ``z = 1 mod t`` and ``z = 0 mod p^k``,
    where ``order = p^k * t`` and ``gcd(t, p) = 1``."""
    pk = 1
    if p:
        while order % (pk * p) == 0:
            pk *= p
    t = order // pk
    z = (pk * pow(pk, -1, t)) % order if t > 1 else 0
    return z or order


def p_regular_part(M: FiniteMonoid, m: int, p: int) -> int:
    """The p'-part of ``m**(omega+1)``; for ``p = 0`` just ``m**(omega+1)``."""
    g = omega_plus_one(M, m)
    if p == 0:
        return g
    return M.power(g, _coprime_part_exponent(M._index_periods[m].period, p))


def group_power(M: FiniteMonoid, g: int, j: int) -> int:
    """``g**j`` inside the cyclic group of the group element ``g``, so that
    exponents congruent modulo ``|g|`` agree (``j = 0`` gives ``g**omega``)."""
    s = group_order(M, g)
    return M.power(g, j % s or s)


# -- idempotents and D-classes --------------------------------------------


def idempotents(M: FiniteMonoid) -> list[int]:
    return [e for e in range(M.size) if M.table[e][e] == e]


def _check_idempotent(M: FiniteMonoid, *es: int) -> None:
    for e in es:
        if M.table[e][e] != e:
            raise NotIdempotent(f"element {e} is not idempotent")


def principal_ideal(M: FiniteMonoid, m: int) -> frozenset[int]:
    """``MmM``."""
    return M._ideals[m]


def d_equivalent(M: FiniteMonoid, e: int, f: int) -> tuple[int, int] | None:
    """A pair ``(x, y)`` with ``xyx=x``, ``yxy=y``, ``xy=e``, ``yx=f``, if any."""
    _check_idempotent(M, e, f)
    pairs = M._inverse_pairs.get((e, f))
    return pairs[0] if pairs else None


def d_class_idempotent_reps(M: FiniteMonoid) -> list[int]:
    """One idempotent per D-class, compatible with ideal inclusion.

    Classes are sorted by ideal size with ties broken by smallest element,
    so ``MeM`` strictly inside ``MfM`` puts ``e`` before ``f``; the
    identity's class comes last.
    """
    classes: dict[frozenset[int], int] = {}
    for e in idempotents(M):
        classes.setdefault(M._ideals[e], e)
    return [e for ideal, e in sorted(classes.items(), key=lambda kv: (len(kv[0]), kv[1]))]


def maximal_subgroup(M: FiniteMonoid, e: int) -> GroupView:
    """Units of ``eMe``."""
    _check_idempotent(M, e)
    t = M.table
    local = [m for m in range(M.size) if t[e][m] == m and t[m][e] == m]
    inverse = {}
    for g in local:
        for u in local:
            if t[g][u] == e and t[u][g] == e:
                inverse[g] = u
                break
    return GroupView(M, e, inverse)


def group_isomorphism_from_witness(M: FiniteMonoid, x: int, y: int) -> dict[int, int]:
    """The isomorphism ``a -> y a x`` from ``G_{xy}`` onto ``G_{yx}``.

    Checked elementwise: bijective, product preserving, and inverted by
    ``b -> x b y``.
    """
    t = M.table
    if t[t[x][y]][x] != x or t[t[y][x]][y] != y:
        raise WitnessInvalid(f"({x}, {y}) does not satisfy xyx=x, yxy=y")
    src = maximal_subgroup(M, t[x][y])
    dst = maximal_subgroup(M, t[y][x])
    phi = {a: M.mul(y, a, x) for a in src}
    if sorted(phi.values()) != list(dst.elements):
        raise WitnessInvalid("y.x does not map G_xy onto G_yx")
    for a in src:
        if M.mul(x, phi[a], y) != a:
            raise WitnessInvalid("x.y is not inverse to y.x")
        for b in src:
            if phi[t[a][b]] != t[phi[a]][phi[b]]:
                raise WitnessInvalid("y.x is not multiplicative")
    return phi
