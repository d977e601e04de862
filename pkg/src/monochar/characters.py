"""Class functions, concrete characters and virtual-character certificates.

The characters built here come from 0/1 matrix representations (right
regular, and the defining representation of a transformation monoid), so
their values are fixed-point counts pushed into the prime field of the
chosen field: Fractions in characteristic 0, residues mod p otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

from .equivalence import EquivPartition, equiv_closure, field_data
from .errors import NoTransformationData, NotClassConstant, NotCyclic, NotRepresentation
from .fields import FieldSpec
from .monoid import (
    FiniteMonoid,
    d_class_idempotent_reps,
    group_power,
    index_period,
    is_p_regular,
    maximal_subgroup,
    p_regular_part,
)


@dataclass(frozen=True, eq=False)
class ClassFunction:
    host: FiniteMonoid
    field: FieldSpec
    values: tuple

    def __getitem__(self, m):
        return self.values[m]

    def __len__(self):
        return len(self.values)

    def is_constant_on(self, partition: EquivPartition) -> bool:
        return all(len({self.values[m] for m in cls}) == 1 for cls in partition)

    def replace(self, m: int, value) -> ClassFunction:
        values = list(self.values)
        values[m] = value
        return ClassFunction(self.host, self.field, tuple(values))


def class_function(M: FiniteMonoid, fs: FieldSpec, values: Iterable[int]) -> ClassFunction:
    """Wrap integer values, reducing them into the prime field of ``fs``."""
    values = tuple(fs.scalar(v) for v in values)
    if len(values) != M.size:
        raise ValueError(f"expected {M.size} values, got {len(values)}")
    return ClassFunction(M, fs, values)


class MatrixRep:
    """An integer matrix representation read in the prime field of ``field``.

    ``images[m]`` is the matrix of ``m``; the identity must map to the
    identity matrix and products to products (modulo the characteristic).
    Both are checked on construction.
    """

    def __init__(self, host: FiniteMonoid, images, field: FieldSpec):
        images = np.asarray(images)
        if images.ndim != 3 or images.shape[0] != host.size or images.shape[1] != images.shape[2]:
            raise NotRepresentation("images must have shape (size, r, r)")
        self.host = host
        self.field = field
        self.images = images.astype(np.int64)
        self.degree = images.shape[1]
        self._check()

    def _reduce(self, a):
        p = self.field.characteristic
        return a % p if p else a

    def _check(self):
        M, imgs = self.host, self.images
        eye = np.eye(self.degree, dtype=np.int64)
        if np.any(self._reduce(imgs[M.identity] - eye)):
            raise NotRepresentation("identity does not map to the identity matrix")
        # float products are exact while entries stay below 2**53
        bound = int(np.abs(imgs).max(initial=0)) ** 2 * max(self.degree, 1)
        exact_float = bound < 2**53
        stack = imgs.astype(np.float64) if exact_float else imgs.astype(object)
        t = np.asarray(M.table)
        for a in M:
            prod = stack[a] @ stack
            if exact_float:
                prod = np.rint(prod).astype(np.int64)
            diff = self._reduce(prod - imgs[t[a]])
            bad = np.nonzero(np.any(diff.reshape(M.size, -1) != 0, axis=1))[0]
            if len(bad):
                raise NotRepresentation(f"image of {a}*{int(bad[0])} is not the product of images")

    def trace(self, m: int):
        return self.field.scalar(int(np.trace(self.images[m])))


def _functional_matrices(maps: Iterable[Iterable[int]], degree: int) -> np.ndarray:
    maps = np.asarray(list(maps), dtype=np.int64)
    out = np.zeros((len(maps), degree, degree), dtype=np.int64)
    rows = np.arange(degree)
    for k, f in enumerate(maps):
        out[k, rows, f] = 1
    return out


def right_regular_rep(M: FiniteMonoid, fs: FieldSpec) -> MatrixRep:
    """Matrices of ``x -> x*m`` (row ``x`` has its 1 in column ``x*m``)."""
    t = np.asarray(M.table)
    return MatrixRep(M, _functional_matrices(t.T, M.size), fs)


def natural_rep(M: FiniteMonoid, fs: FieldSpec) -> MatrixRep:
    """The defining 0/1 representation of a transformation monoid."""
    if M.images is None:
        raise NoTransformationData("monoid has no transformation images")
    degree = len(M.images[0])
    return MatrixRep(M, _functional_matrices(M.images, degree), fs)


def char_of_rep(rep: MatrixRep) -> ClassFunction:
    return ClassFunction(rep.host, rep.field, tuple(rep.trace(m) for m in rep.host))


def natural_character(M: FiniteMonoid, fs: FieldSpec) -> ClassFunction:
    """Fixed-point counts of the underlying transformations."""
    if M.images is None:
        raise NoTransformationData("monoid has no transformation images")
    return class_function(
        M, fs, (sum(1 for x, fx in enumerate(img) if x == fx) for img in M.images)
    )


def right_regular_character(M: FiniteMonoid, fs: FieldSpec) -> ClassFunction:
    """``#{x : x*m = x}`` without building matrices."""
    t = M.table
    return class_function(M, fs, (sum(1 for x in M if t[x][m] == x) for m in M))


class Violation(NamedTuple):
    rule: str  # "commute", "p-part" or "galois"
    elements: tuple[int, ...]
    values: tuple

    def __str__(self):
        return f"{self.rule}: elements {self.elements} give values {self.values}"


def verify_character_identities(
    chi: ClassFunction, M: FiniteMonoid | None = None, fs: FieldSpec | None = None
) -> list[Violation]:
    """Check ``chi(ab) = chi(ba)``, ``chi(a) = chi(p'-part of a**(omega+1))`` and
    ``chi(a) = chi(a**j)`` for p-regular ``a`` and ``j`` in the Galois image."""
    M = M or chi.host
    fs = fs or chi.field
    p, T = field_data(M, fs)
    v, t = chi.values, M.table
    out = []
    for a in M:
        for b in range(a + 1, M.size):
            if v[t[a][b]] != v[t[b][a]]:
                out.append(Violation("commute", (a, b), (v[t[a][b]], v[t[b][a]])))
    for a in M:
        g = p_regular_part(M, a, p)
        if v[a] != v[g]:
            out.append(Violation("p-part", (a, g), (v[a], v[g])))
    for a in M:
        if is_p_regular(M, a, p):
            for j in T:
                aj = group_power(M, a, j)
                if v[a] != v[aj]:
                    out.append(Violation("galois", (a, j), (v[a], v[aj])))
    return out


def restrict_to_group(f: ClassFunction, e: int) -> dict[int, object]:
    """Values of ``f`` on the maximal subgroup at ``e``."""
    return {g: f.values[g] for g in maximal_subgroup(f.host, e)}


# -- cyclic subsets and virtual characters --------------------------------


class PowerCounterexample(NamedTuple):
    element: int
    exponent: int

    def __str__(self):
        return f"m={self.element}, s={self.exponent}: m and m^s differ in membership"


class CommutationCounterexample(NamedTuple):
    left: int
    right: int

    def __str__(self):
        return f"m1={self.left}, m2={self.right}: m1*m2 and m2*m1 differ in membership"


@dataclass(frozen=True)
class CyclicVerdict:
    is_cyclic: bool
    counterexample: PowerCounterexample | CommutationCounterexample | None = None

    def __bool__(self):
        return self.is_cyclic


def cyclic_subset_check(M: FiniteMonoid, X: Iterable[int]) -> CyclicVerdict:
    """Is ``X`` closed in both directions under powers and under swapping
    the factors of a product?  Returns the first counterexample otherwise."""
    X = frozenset(X)
    for m in M:
        r, s = index_period(M, m)
        inside = m in X
        # powers repeat from m^r on, so exponents up to r+s cover every s > 0
        for k in range(1, r + s + 1):
            if (M.power(m, k) in X) != inside:
                return CyclicVerdict(False, PowerCounterexample(m, k))
    t = M.table
    for a in M:
        for b in M:
            if (t[a][b] in X) != (t[b][a] in X):
                return CyclicVerdict(False, CommutationCounterexample(a, b))
    return CyclicVerdict(True)


@dataclass(frozen=True)
class VirtualCertificate:
    """Per D-class representative, what the indicator restricts to on its
    maximal subgroup: ``"trivial"`` (the trivial character) or ``"zero"``."""

    field: FieldSpec
    restrictions: tuple[tuple[int, str], ...]
    class_count: int

    def as_dict(self, M: FiniteMonoid | None = None) -> dict:
        return {
            "field": self.field.name,
            "classes": self.class_count,
            "restrictions": [
                {"idempotent": e, "label": M.label(e) if M else str(e), "restriction": kind}
                for e, kind in self.restrictions
            ],
        }


def indicator(M: FiniteMonoid, X: Iterable[int], fs: FieldSpec) -> ClassFunction:
    X = frozenset(X)
    return class_function(M, fs, (1 if m in X else 0 for m in M))


def indicator_virtual_certificate(
    M: FiniteMonoid,
    X: Iterable[int],
    fs: FieldSpec,
    partition: EquivPartition | None = None,
) -> VirtualCertificate:
    """Certify that the indicator of a cyclic subset is a virtual character.

    The indicator must be constant on the character-equivalence classes and
    restrict to zero or to the trivial character on each maximal subgroup
    at a D-class representative; both are checked here.
    """
    X = frozenset(X)
    verdict = cyclic_subset_check(M, X)
    if not verdict:
        raise NotCyclic(verdict.counterexample)
    if partition is None:
        partition = equiv_closure(M, fs)
    ind = indicator(M, X, fs)
    for cls in partition:
        if len({ind[m] for m in cls}) != 1:
            raise NotClassConstant(f"indicator is not constant on class {cls}")
    restrictions = []
    for e in d_class_idempotent_reps(M):
        G = set(maximal_subgroup(M, e))
        if G <= X:
            restrictions.append((e, "trivial"))
        elif not G & X:
            restrictions.append((e, "zero"))
        else:
            raise NotClassConstant(f"maximal subgroup at {e} is split by the subset")
    return VirtualCertificate(fs, tuple(restrictions), len(partition))


def class_function_verdict(f: ClassFunction, partition: EquivPartition | None = None) -> str:
    """``"virtual"`` when ``f`` is class constant and every restriction to a
    maximal subgroup at a D-class representative is an integer multiple of
    the trivial character (zero included); ``"class-constant"`` when only
    constancy can be established; ``"not class-constant"`` otherwise."""
    M, fs = f.host, f.field
    if partition is None:
        partition = equiv_closure(M, fs)
    if not f.is_constant_on(partition):
        return "not class-constant"
    for e in d_class_idempotent_reps(M):
        vals = set(restrict_to_group(f, e).values())
        if len(vals) != 1:
            return "class-constant"
        (v,) = vals
        if isinstance(v, Fraction) and v.denominator != 1:
            return "class-constant"
    return "virtual"

