"""Cross-checks of the classification on a single monoid."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .characters import char_of_rep, natural_rep, right_regular_rep, verify_character_identities
from .equivalence import EquivPartition, equiv_closure, irr_count, partition_from_approx, psi_bijection
from .errors import InvariantBreach
from .fields import FieldSpec
from .monoid import FiniteMonoid, omega


@dataclass(frozen=True)
class CheckResult:
    name: str
    field: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{tag} {self.name} [{self.field}]{tail}"

    def as_dict(self) -> dict:
        return {"check": self.name, "field": self.field, "passed": self.passed, "detail": self.detail}


def builtin_characters(M: FiniteMonoid, fs: FieldSpec):
    """Characters of the right regular representation and, for
    transformation monoids, of the defining representation."""
    out = [("right-regular", char_of_rep(right_regular_rep(M, fs)))]
    if M.images is not None:
        out.append(("natural", char_of_rep(natural_rep(M, fs))))
    return out


def first_difference(p: EquivPartition, q: EquivPartition) -> tuple[int, int] | None:
    """A pair of elements grouped together by exactly one of the partitions."""
    lp, lq = p.class_of, q.class_of
    elems = sorted(lp)
    for a in elems:
        for b in elems:
            if (lp[a] == lp[b]) != (lq[a] == lq[b]):
                return a, b
    return None


def check_theorems(
    M: FiniteMonoid,
    fields: Sequence[FieldSpec],
    closure: Callable[[FiniteMonoid, FieldSpec], EquivPartition] = equiv_closure,
) -> list[CheckResult]:
    """Run every consistency check for each field.

    ``closure`` is injectable so tests can feed a corrupted partition.
    """
    results = []
    for fs in fields:
        name = fs.name
        generated = closure(M, fs)

        try:
            searched = partition_from_approx(M, fs)
        except InvariantBreach as exc:
            results.append(CheckResult("witness-relation-is-equivalence", name, False, str(exc)))
            searched = None
        else:
            results.append(CheckResult("witness-relation-is-equivalence", name, True))
        if searched is not None:
            diff = first_difference(generated, searched)
            detail = "" if diff is None else f"elements {diff[0]} and {diff[1]} are classified differently"
            results.append(CheckResult("closure-equals-witness-partition", name, diff is None, detail))

        count = irr_count(M, fs)
        results.append(
            CheckResult(
                "class-count-equals-irreducible-count",
                name,
                len(generated) == count,
                f"{len(generated)} classes, {count} irreducibles",
            )
        )

        try:
            psi_bijection(M, fs, generated)
        except InvariantBreach as exc:
            results.append(CheckResult("psi-bijection", name, False, str(exc)))
        else:
            results.append(CheckResult("psi-bijection", name, True))

        for label, chi in builtin_characters(M, fs):
            bad = verify_character_identities(chi, M, fs)
            detail = f"{len(bad)} violations, first: {bad[0]}" if bad else ""
            results.append(CheckResult(f"character-identities-{label}", name, not bad, detail))

    k = math.factorial(M.size)
    bad = [m for m in M if M.power(m, k) != omega(M, m)]
    results.append(
        CheckResult("omega-power-law", "-", not bad, f"fails at {bad[0]}" if bad else "")
    )
    return results
