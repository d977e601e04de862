"""Field specifications and the Galois image ``T`` inside the units mod ``n``.

Only three kinds of field are supported, each with a closed form for ``T``:
algebraically closed (``T = {1}``), finite fields ``F_q`` (``T = <q>``) and
the rationals (``T`` = all units).  Residues are stored in ``1..n`` so that
the trivial modulus ``n = 1`` still has the member ``1``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import isprime, primefactors

from .errors import NotCoprime, NotDivisor, UnsupportedField
from .monoid import FiniteMonoid, index_period


class FieldKind(Enum):
    ALGEBRAICALLY_CLOSED = "AC"
    RATIONALS = "Q"
    FINITE = "F"


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    characteristic: int = 0
    order: int | None = None

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not isprime(p):
            raise UnsupportedField(f"characteristic {p} is not 0 or a prime")
        if self.kind is FieldKind.RATIONALS and p != 0:
            raise UnsupportedField("the rationals have characteristic 0")
        if self.kind is FieldKind.FINITE:
            q = self.order
            if q is None or q < 2 or p == 0:
                raise UnsupportedField("a finite field needs an order q >= 2")
            if _prime_of_power(q) != p:
                raise UnsupportedField(f"order {q} is not a power of {p}")
        elif self.order is not None:
            raise UnsupportedField("only finite fields carry an order")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS)

    @classmethod
    def finite(cls, q: int) -> FieldSpec:
        p = _prime_of_power(q)
        if p is None:
            raise UnsupportedField(f"{q} is not a prime power")
        return cls(FieldKind.FINITE, p, q)

    @classmethod
    def algebraically_closed(cls, p: int = 0) -> FieldSpec:
        return cls(FieldKind.ALGEBRAICALLY_CLOSED, p)

    @property
    def name(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        if self.kind is FieldKind.FINITE:
            return f"F{self.order}"
        return f"AC{self.characteristic}"

    def __str__(self):
        return self.name

    def scalar(self, value: int):
        """Image of an integer in the prime field: a Fraction in
        characteristic 0, a residue in ``range(p)`` otherwise."""
        if self.characteristic == 0:
            return Fraction(value)
        return value % self.characteristic


def _prime_of_power(q: int) -> int | None:
    if q < 2:
        return None
    primes = primefactors(q)
    return primes[0] if len(primes) == 1 else None


_FIELD_RE = re.compile(r"^(?:(Q)|F(\d+)|AC(\d+))$")


def parse_field(text: str) -> FieldSpec:
    """``Q``, ``F<q>``, ``AC0`` or ``AC<p>``."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise UnsupportedField(f"unrecognised field {text!r}; use Q, F<q> or AC<p>")
    try:
        if m.group(1):
            return FieldSpec.rationals()
        if m.group(2):
            return FieldSpec.finite(int(m.group(2)))
        return FieldSpec.algebraically_closed(int(m.group(3)))
    except UnsupportedField as exc:
        raise UnsupportedField(f"field {text.strip()!r}: {exc}") from None


def parse_fields(values) -> list[FieldSpec]:
    """Comma separated field lists, possibly repeated; order kept, duplicates dropped."""
    out: list[FieldSpec] = []
    for value in values:
        for part in value.split(","):
            if part.strip():
                fs = parse_field(part)
                if fs not in out:
                    out.append(fs)
    return out


@dataclass(frozen=True)
class GaloisImage:
    modulus: int
    members: tuple[int, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, j):
        return (j % self.modulus or self.modulus) in self.members

    def is_subgroup(self) -> bool:
        n = self.modulus
        ms = set(self.members)
        if 1 not in ms or any(math.gcd(j, n) != 1 for j in ms):
            return False
        return all(((a * b) % n or n) in ms for a in ms for b in ms)


def _residue(j: int, n: int) -> int:
    return j % n or n


def lcm_p_regular_orders(M: FiniteMonoid, p: int) -> int:
    n = 1
    for m in M:
        r, s = index_period(M, m)
        if r == 1 and (p == 0 or s % p):
            n = math.lcm(n, s)
    return n


def galois_image(fs: FieldSpec, n: int) -> GaloisImage:
    if n < 1:
        raise ValueError("modulus must be positive")
    if fs.kind is FieldKind.ALGEBRAICALLY_CLOSED:
        return GaloisImage(n, (1,))
    if fs.kind is FieldKind.RATIONALS:
        return GaloisImage(n, tuple(j for j in range(1, n + 1) if math.gcd(j, n) == 1))
    q = fs.order
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"field order {q} is not coprime to modulus {n}")
    members = {1 % n or n}
    j = _residue(q, n)
    while j not in members:
        members.add(j)
        j = _residue(j * q, n)
    return GaloisImage(n, tuple(sorted(members)))


def galois_image_reduce(image: GaloisImage, n: int) -> GaloisImage:
    """Reduce a Galois image at modulus ``t`` to a divisor ``n`` of ``t``."""
    t = image.modulus
    if n < 1 or t % n:
        raise NotDivisor(f"{n} does not divide {t}")
    return GaloisImage(n, tuple(sorted({_residue(j, n) for j in image.members})))


def galois_image_for_monoid(M: FiniteMonoid, fs: FieldSpec) -> GaloisImage:
    """``T`` at the lcm of the orders of the p-regular elements of ``M``."""
    return galois_image(fs, lcm_p_regular_orders(M, fs.characteristic))
