"""Exact power series: zeta series from word counts, and their
reconstruction as rational functions with a checked recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import InsufficientCoefficients

Poly = tuple[Fraction, ...]


def _trim(coeffs: Sequence) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) or (Fraction(0),)


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Ascending degree with explicit signs, e.g. ``1 - x - x^2``."""
    terms = []
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not terms:
            terms.append(body if sign == "+" else f"-{body}")
        else:
            terms.append(f"{sign} {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` with ``denominator(0) = 1``."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if Fraction(self.denominator[0]) != 1:
            raise ValueError("denominator must have constant term 1")

    def series(self, n: int) -> list[Fraction]:
        """Coefficients of the expansion up to ``x^n``."""
        P, Q = self.numerator, self.denominator
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = P[k] if k < len(P) else Fraction(0)
            for i in range(1, min(k, len(Q) - 1) + 1):
                acc -= Q[i] * out[k - i]
            out.append(acc)
        return out

    def __str__(self):
        num = format_poly(self.numerator)
        den = format_poly(self.denominator)
        if len(self.denominator) == 1:
            return num
        if len(self.numerator) > 1 and any(self.numerator[1:]):
            num = f"({num})"
        return f"{num} / ({den})"

    def as_dict(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "denominator": [str(c) for c in self.denominator],
            "text": str(self),
        }


@dataclass(frozen=True)
class ZetaSeries:
    """``exp(sum a_n x^n / n)`` truncated at ``x^N``."""

    word_counts: tuple[int, ...]  # a_1 .. a_N
    coefficients: tuple[Fraction, ...]  # c_0 .. c_N

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


def exp_of_log_series(word_counts: Sequence[int]) -> ZetaSeries:
    """Coefficients of ``exp(sum_{n>=1} a_n x^n / n)``.

    Differentiating ``Z = exp(S)`` gives ``k c_k = sum_{m=1..k} a_m c_{k-m}``.
    """
    a = [0, *word_counts]
    c = [Fraction(1)]
    for k in range(1, len(a)):
        c.append(sum((a[m] * c[k - m] for m in range(1, k + 1)), Fraction(0)) / k)
    return ZetaSeries(tuple(word_counts), tuple(c))


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    A = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])
    b = sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in rhs])
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    sol = sol.subs({s: 0 for s in params})
    return [Fraction(int(v.p), int(v.q)) for v in sol]


def rational_reconstruct(
    series: ZetaSeries | Sequence, dmax: int
) -> RationalFunction | None:
    """Smallest ``d <= dmax`` and ``P/Q`` with ``deg P, deg Q <= d``, ``Q(0) = 1``
    whose expansion matches every known coefficient; None if there is none.

    Needs at least ``2*dmax + 2`` coefficients (``c_0 .. c_{2 dmax + 1}``), so
    that at least ``d + 1`` recurrence equations constrain each candidate.
    """
    c = [Fraction(v) for v in (series.coefficients if isinstance(series, ZetaSeries) else series)]
    N = len(c) - 1
    if dmax < 0 or N < 2 * dmax + 1:
        raise InsufficientCoefficients(
            f"degree bound {dmax} needs coefficients through x^{2 * dmax + 1}, have x^{N}"
        )
    for d in range(dmax + 1):
        if d == 0:
            q = []
        else:
            rows = [[c[k - i] for i in range(1, d + 1)] for k in range(d + 1, N + 1)]
            q = _solve_exact(rows, [-c[k] for k in range(d + 1, N + 1)])
            if q is None:
                continue
        Q = [Fraction(1), *q]
        P = [sum((Q[i] * c[k - i] for i in range(0, k + 1)), Fraction(0)) for k in range(d + 1)]
        candidate = RationalFunction(_trim(P), _trim(Q))
        # the certificate: every known coefficient is reproduced
        if candidate.series(N) == c:
            return candidate
    return None
