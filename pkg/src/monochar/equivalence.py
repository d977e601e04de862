"""Character equivalence of a finite monoid over a field, computed two ways.

:func:`equiv_closure` builds the least equivalence generated by
commutation (``ab ~ ba``), passage to the p'-part of ``m**(omega+1)`` and
Galois powers of p-regular elements.  :func:`partition_from_approx` instead
searches, for every pair, for an explicit conjugating witness.  The two must
agree, and the number of classes must equal the number of irreducible
representations counted group by group through K-conjugacy in the maximal
subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from scipy.cluster.hierarchy import DisjointSet

from .errors import BijectionFailure, ModulusTooSmall, NotTransitive
from .fields import FieldSpec, GaloisImage, galois_image, lcm_p_regular_orders
from .monoid import (
    FiniteMonoid,
    GroupView,
    d_class_idempotent_reps,
    group_order,
    group_power,
    is_p_regular,
    maximal_subgroup,
    omega,
    p_regular_part,
)


@dataclass(frozen=True)
class EquivPartition:
    """A partition of ``range(host_size)`` or of a subset of it.

    Classes are sorted by their smallest element and class ids follow
    that order.
    """

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]]) -> EquivPartition:
        classes = sorted(tuple(sorted(g)) for g in groups)
        return cls(tuple(c for c in classes if c))

    @property
    def class_of(self) -> dict[int, int]:
        return {m: i for i, cls in enumerate(self.classes) for m in cls}

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(m for cls in self.classes for m in cls))

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def same(self, a: int, b: int) -> bool:
        lookup = self.class_of
        return lookup[a] == lookup[b]

    def refines(self, other: EquivPartition) -> bool:
        """Every class of ``self`` lies inside a class of ``other``."""
        lookup = other.class_of
        return all(len({lookup[m] for m in cls}) == 1 for cls in self.classes)

    def is_valid(self, universe: Iterable[int] | None = None) -> bool:
        seen = [m for cls in self.classes for m in cls]
        if any(not cls for cls in self.classes) or len(seen) != len(set(seen)):
            return False
        return universe is None or set(seen) == set(universe)


class ApproxWitness(NamedTuple):
    x: int
    y: int
    j: int


def field_data(M: FiniteMonoid, fs: FieldSpec) -> tuple[int, GaloisImage]:
    """Characteristic and Galois image at the shared modulus for ``M``."""
    p = fs.characteristic
    return p, galois_image(fs, lcm_p_regular_orders(M, p))


def k_conjugacy_classes(G: GroupView, T: GaloisImage, p: int) -> EquivPartition:
    """Classes of p-regular elements of ``G`` under ``x g x^-1 = h^j``."""
    M = G.host
    preg = [g for g in G if is_p_regular(M, g, p)]
    for g in preg:
        if T.modulus % group_order(M, g):
            raise ModulusTooSmall(f"order of {g} does not divide {T.modulus}")
    # h^j = x g x^-1 iff h = (x g x^-1)^(j^-1), and T is a group
    remaining = set(preg)
    groups = []
    for g in preg:
        if g not in remaining:
            continue
        orbit = {group_power(M, G.conjugate(x, g), j) for x in G for j in T}
        groups.append(orbit)
        remaining -= orbit
    return EquivPartition.from_groups(groups)


def equiv_closure(M: FiniteMonoid, fs: FieldSpec) -> EquivPartition:
    p, T = field_data(M, fs)
    ds = DisjointSet(range(M.size))
    t = M.table
    for a in M:
        for b in M:
            ds.merge(t[a][b], t[b][a])
    for m in M:
        ds.merge(m, p_regular_part(M, m, p))
        if is_p_regular(M, m, p):
            for j in T:
                ds.merge(m, group_power(M, m, j))
    return EquivPartition.from_groups(ds.subsets())


class _ApproxData:
    """Per (monoid, field) data shared by all witness searches."""

    def __init__(self, M: FiniteMonoid, fs: FieldSpec):
        self.M = M
        self.p, self.T = field_data(M, fs)
        self.omega = [omega(M, m) for m in M]
        self.part = [p_regular_part(M, m, self.p) for m in M]
        self.powers = [
            {group_power(M, h, j): j for j in reversed(self.T.members)} for h in self.part
        ]

    def search(self, a: int, b: int) -> ApproxWitness | None:
        M = self.M
        g = self.part[a]
        targets = self.powers[b]
        for x, y in M._inverse_pairs.get((self.omega[b], self.omega[a]), ()):
            j = targets.get(M.mul(x, g, y))
            if j is not None:
                # smallest j for the first (x, y); several j may give the same power
                return ApproxWitness(x, y, j)
        return None


def verify_witness(
    M: FiniteMonoid, fs: FieldSpec, a: int, b: int, w: ApproxWitness
) -> bool:
    """Check every defining equation of an approximation witness."""
    p, T = field_data(M, fs)
    x, y, j = w
    t = M.table
    return (
        j in T.members
        and M.mul(x, y, x) == x
        and M.mul(y, x, y) == y
        and t[x][y] == omega(M, b)
        and t[y][x] == omega(M, a)
        and M.mul(x, p_regular_part(M, a, p), y) == group_power(M, p_regular_part(M, b, p), j)
    )


def approx_test(M: FiniteMonoid, fs: FieldSpec, a: int, b: int) -> ApproxWitness | None:
    """First witness ``(x, y, j)`` in lexicographic order, or None."""
    return _ApproxData(M, fs).search(a, b)


def approx_relation(M: FiniteMonoid, fs: FieldSpec) -> dict[tuple[int, int], ApproxWitness]:
    """All pairs related by a witness, with the witness found."""
    data = _ApproxData(M, fs)
    out = {}
    for a in M:
        for b in M:
            w = data.search(a, b)
            if w is not None:
                out[a, b] = w
    return out


def partition_from_approx(M: FiniteMonoid, fs: FieldSpec) -> EquivPartition:
    """Partition from pairwise witness search, checked to be an equivalence."""
    related = approx_relation(M, fs)
    rel = [set() for _ in M]
    for a, b in related:
        rel[a].add(b)
    for a in M:
        if a not in rel[a]:
            raise NotTransitive(f"element {a} is not related to itself")
        for b in rel[a]:
            if a not in rel[b]:
                raise NotTransitive(f"{a} ~ {b} but not {b} ~ {a}")
            if not rel[b] <= rel[a]:
                c = min(rel[b] - rel[a])
                raise NotTransitive(f"{a} ~ {b} ~ {c} but not {a} ~ {c}")
    return EquivPartition.from_groups({frozenset(r) for r in rel})


def irr_count(M: FiniteMonoid, fs: FieldSpec) -> int:
    """Number of irreducible representations: K-conjugacy classes of p-regular
    elements summed over one maximal subgroup per D-class of idempotents."""
    p, T = field_data(M, fs)
    return sum(
        len(k_conjugacy_classes(maximal_subgroup(M, e), T, p))
        for e in d_class_idempotent_reps(M)
    )


@dataclass(frozen=True)
class PsiEntry:
    idempotent: int
    k_class: tuple[int, ...]
    equiv_class: tuple[int, ...]


def psi_bijection(
    M: FiniteMonoid, fs: FieldSpec, partition: EquivPartition | None = None
) -> list[PsiEntry]:
    """Send each K-conjugacy class of each maximal subgroup at a D-class
    representative to the equivalence class containing it.

    Raises :class:`BijectionFailure` unless the map is well defined,
    injective and onto.
    """
    if partition is None:
        partition = equiv_closure(M, fs)
    p, T = field_data(M, fs)
    lookup = partition.class_of
    entries = []
    hit: dict[int, PsiEntry] = {}
    for e in d_class_idempotent_reps(M):
        for kcls in k_conjugacy_classes(maximal_subgroup(M, e), T, p):
            targets = {lookup[g] for g in kcls}
            if len(targets) != 1:
                raise BijectionFailure(f"K-class {kcls} meets several classes")
            (cid,) = targets
            entry = PsiEntry(e, kcls, partition.classes[cid])
            if cid in hit:
                raise BijectionFailure(
                    f"K-classes {hit[cid].k_class} and {kcls} map to the same class"
                )
            hit[cid] = entry
            entries.append(entry)
    if len(hit) != len(partition):
        missing = [c for i, c in enumerate(partition.classes) if i not in hit]
        raise BijectionFailure(f"classes not reached: {missing}")
    return entries
