"""Regular languages given by DFAs: transition monoids, cyclicity, word
counts and zeta functions.

DFA text format::

    dfa <states> <initial>
    accept <state> ...
    alphabet <symbol> ...
    <state>: <symbol>-><state> ...      (one line per state)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .characters import (
    CommutationCounterexample,
    CyclicVerdict,
    PowerCounterexample,
    VirtualCertificate,
    cyclic_subset_check,
    indicator_virtual_certificate,
)
from .errors import InsufficientCoefficients, ParseError, PartialTransition
from .fields import FieldSpec
from .monoid import DEFAULT_SIZE_LIMIT, FiniteMonoid, monoid_from_transformations
from .series import RationalFunction, ZetaSeries, exp_of_log_series, rational_reconstruct


@dataclass(frozen=True)
class Dfa:
    states: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]  # delta[state][symbol index]
    initial: int
    accepting: frozenset[int]

    def __post_init__(self):
        if self.states < 1:
            raise PartialTransition("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise PartialTransition("repeated alphabet symbol")
        if not 0 <= self.initial < self.states:
            raise PartialTransition(f"initial state {self.initial} out of range")
        if any(not 0 <= q < self.states for q in self.accepting):
            raise PartialTransition("accepting state out of range")
        if len(self.delta) != self.states:
            raise PartialTransition(f"expected transitions for {self.states} states")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet) or any(not 0 <= r < self.states for r in row):
                raise PartialTransition(f"transitions of state {q} are incomplete or out of range")

    @classmethod
    def from_dict(cls, states, alphabet, transitions, initial, accepting) -> Dfa:
        """``transitions[(state, symbol)] -> state``."""
        alphabet = tuple(alphabet)
        delta = []
        for q in range(states):
            row = []
            for a in alphabet:
                if (q, a) not in transitions:
                    raise PartialTransition(f"no transition from state {q} on {a!r}")
                row.append(transitions[q, a])
            delta.append(tuple(row))
        return cls(states, alphabet, tuple(delta), initial, frozenset(accepting))

    def step(self, q: int, symbol: str) -> int:
        return self.delta[q][self.alphabet.index(symbol)]

    def run(self, word: Iterable[str]) -> int:
        return self.run_from(self.initial, word)

    def run_from(self, q: int, word: Iterable[str]) -> int:
        for a in word:
            q = self.step(q, a)
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.accepting

    def letter_map(self, symbol: str) -> tuple[int, ...]:
        k = self.alphabet.index(symbol)
        return tuple(row[k] for row in self.delta)


def parse_dfa(text: str) -> Dfa:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            lines.append((lineno, line))

    def need(idx, keyword):
        if idx >= len(lines):
            raise ParseError(f"missing '{keyword}' line", (lines[-1][0] + 1) if lines else 1, 1)
        lineno, line = lines[idx]
        words = line.split()
        if words[0] != keyword:
            raise ParseError(f"expected '{keyword}', found {words[0]!r}", lineno, line.find(words[0]) + 1)
        return lineno, line, words[1:]

    def as_int(tok, lineno, line):
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, line.find(tok) + 1) from None

    lineno, line, rest = need(0, "dfa")
    if len(rest) != 2:
        raise ParseError("expected 'dfa <states> <initial>'", lineno, 1)
    states, initial = (as_int(t, lineno, line) for t in rest)
    if states < 1:
        raise ParseError("number of states must be positive", lineno, 1)
    if not 0 <= initial < states:
        raise ParseError(f"initial state {initial} out of range", lineno, line.rfind(rest[1]) + 1)

    lineno, line, rest = need(1, "accept")
    accepting = set()
    for tok in rest:
        q = as_int(tok, lineno, line)
        if not 0 <= q < states:
            raise ParseError(f"accepting state {q} out of range", lineno, line.find(tok) + 1)
        accepting.add(q)

    lineno, line, alphabet = need(2, "alphabet")
    if not alphabet:
        raise ParseError("empty alphabet", lineno, 1)
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("repeated alphabet symbol", lineno, 1)

    transitions: dict[tuple[int, str], int] = {}
    seen_states = set()
    for lineno, line in lines[3:]:
        head, sep, body = line.partition(":")
        if not sep:
            raise ParseError("expected '<state>: <symbol>-><state> ...'", lineno, 1)
        q = as_int(head.strip(), lineno, line)
        if not 0 <= q < states:
            raise ParseError(f"state {q} out of range", lineno, 1)
        if q in seen_states:
            raise ParseError(f"duplicate row for state {q}", lineno, 1)
        seen_states.add(q)
        offset = len(head) + 1
        for tok in body.split():
            col = offset + body.find(tok) + 1
            sym, arrow, target = tok.partition("->")
            if not arrow:
                raise ParseError(f"expected '<symbol>-><state>', got {tok!r}", lineno, col)
            if sym not in alphabet:
                raise ParseError(f"symbol {sym!r} not in alphabet", lineno, col)
            if (q, sym) in transitions:
                raise ParseError(f"duplicate transition on {sym!r}", lineno, col)
            r = as_int(target, lineno, line)
            if not 0 <= r < states:
                raise ParseError(f"target state {r} out of range", lineno, col)
            transitions[q, sym] = r
    return Dfa.from_dict(states, alphabet, transitions, initial, accepting)


def format_dfa(dfa: Dfa) -> str:
    lines = [
        f"dfa {dfa.states} {dfa.initial}",
        "accept " + " ".join(map(str, sorted(dfa.accepting))),
        "alphabet " + " ".join(dfa.alphabet),
    ]
    for q, row in enumerate(dfa.delta):
        lines.append(f"{q}: " + " ".join(f"{a}->{r}" for a, r in zip(dfa.alphabet, row)))
    return "\n".join(lines) + "\n"


# -- transition monoid ----------------------------------------------------


@dataclass(frozen=True, eq=False)
class TransitionMonoid:
    """The monoid of state maps of a DFA together with ``eta``.

    ``letters[a]`` is the element of letter ``a``, ``accepted`` the set
    ``X`` of elements sending the initial state into an accepting state,
    and ``words[m]`` a shortest word representing ``m``.
    """

    dfa: Dfa
    monoid: FiniteMonoid
    letters: dict[str, int]
    accepted: frozenset[int]
    words: tuple[tuple[str, ...], ...] = field(repr=False)

    def eta(self, word: Iterable[str]) -> int:
        return self.monoid.mul(*(self.letters[a] for a in word))

    def word(self, m: int) -> str:
        return spell(self.words[m])


def spell(word: Sequence[str]) -> str:
    if not word:
        return "<empty>"
    if all(len(a) == 1 for a in word):
        return "".join(word)
    return " ".join(word)


def transition_monoid(dfa: Dfa, limit: int = DEFAULT_SIZE_LIMIT) -> TransitionMonoid:
    maps = [dfa.letter_map(a) for a in dfa.alphabet]
    M = monoid_from_transformations(dfa.states, maps, limit=limit)
    index = {img: k for k, img in enumerate(M.images)}
    letters = {a: index[f] for a, f in zip(dfa.alphabet, maps)}
    accepted = frozenset(m for m in M if M.images[m][dfa.initial] in dfa.accepting)

    words: list[tuple[str, ...] | None] = [None] * M.size
    words[M.identity] = ()
    queue = deque([M.identity])
    while queue:
        m = queue.popleft()
        for a in dfa.alphabet:
            n = M.table[m][letters[a]]
            if words[n] is None:
                words[n] = words[m] + (a,)
                queue.append(n)
    return TransitionMonoid(dfa, M, letters, accepted, tuple(words))


@dataclass(frozen=True)
class LanguageCyclicity:
    verdict: CyclicVerdict
    words: tuple[str, ...] = ()  # representatives of the counterexample elements

    def __bool__(self):
        return bool(self.verdict)

    def describe(self) -> str:
        ce = self.verdict.counterexample
        if ce is None:
            return "cyclic"
        if isinstance(ce, PowerCounterexample):
            return f"u={self.words[0]}, s={ce.exponent}: exactly one of u and u^{ce.exponent} is in L"
        return f"u={self.words[0]}, v={self.words[1]}: exactly one of uv and vu is in L"


def is_cyclic_language(dfa: Dfa | TransitionMonoid) -> LanguageCyclicity:
    """Cyclicity of ``L``, decided on the transition monoid: ``L`` is the full
    preimage of ``X``, so both closure conditions transfer between them."""
    tm = dfa if isinstance(dfa, TransitionMonoid) else transition_monoid(dfa)
    verdict = cyclic_subset_check(tm.monoid, tm.accepted)
    ce = verdict.counterexample
    if isinstance(ce, PowerCounterexample):
        words = (tm.word(ce.element),)
    elif isinstance(ce, CommutationCounterexample):
        words = (tm.word(ce.left), tm.word(ce.right))
    else:
        words = ()
    return LanguageCyclicity(verdict, words)


# -- counting and zeta ----------------------------------------------------


def word_counts(dfa: Dfa, N: int) -> list[int]:
    """``[a_1, ..., a_N]``: accepted words of each length, by iterating the
    transfer matrix (sum of the letter matrices) on the initial state."""
    v = [0] * dfa.states
    v[dfa.initial] = 1
    out = []
    for _ in range(N):
        w = [0] * dfa.states
        for q, count in enumerate(v):
            if count:
                for r in dfa.delta[q]:
                    w[r] += count
        v = w
        out.append(sum(v[q] for q in dfa.accepting))
    return out


def word_count(dfa: Dfa, n: int) -> int:
    if n < 1:
        raise ValueError("length must be at least 1")
    return word_counts(dfa, n)[-1]


def brute_force_count(dfa: Dfa, n: int) -> int:
    return sum(1 for w in product(dfa.alphabet, repeat=n) if dfa.accepts(w))


def zeta_truncated(dfa: Dfa, N: int) -> ZetaSeries:
    if N < 1:
        raise ValueError("order must be at least 1")
    return exp_of_log_series(word_counts(dfa, N))


@dataclass
class ZetaReport:
    dfa: Dfa
    transition: TransitionMonoid
    cyclicity: LanguageCyclicity
    certificates: list[VirtualCertificate]
    series: ZetaSeries
    rational: RationalFunction | None
    degree_bounds: list[int]
    heuristic_bound: bool

    @property
    def cyclic(self) -> bool:
        return bool(self.cyclicity)

    @property
    def status(self) -> str:
        return "rational" if self.rational is not None else "undetermined"

    def as_dict(self) -> dict:
        M = self.transition.monoid
        return {
            "states": self.dfa.states,
            "alphabet": list(self.dfa.alphabet),
            "monoid_size": M.size,
            "accepted_elements": sorted(self.transition.accepted),
            "cyclic": self.cyclic,
            "counterexample": None if self.cyclic else self.cyclicity.describe(),
            "certificates": [c.as_dict(M) for c in self.certificates],
            "order": self.series.order,
            "word_counts": list(self.series.word_counts),
            "zeta_coefficients": [str(c) for c in self.series.coefficients],
            "degree_bounds_tried": self.degree_bounds,
            "degree_bound_heuristic": self.heuristic_bound,
            "zeta_status": self.status,
            "zeta": self.rational.as_dict() if self.rational is not None else None,
        }

    def format_text(self) -> str:
        M = self.transition.monoid
        lines = [
            f"states: {self.dfa.states}",
            f"alphabet: {' '.join(self.dfa.alphabet)}",
            f"transition monoid size: {M.size}",
            "accepted elements: " + (" ".join(map(str, sorted(self.transition.accepted))) or "(none)"),
        ]
        if self.cyclic:
            lines.append("cyclic: yes")
            for cert in self.certificates:
                parts = ", ".join(f"G[{M.label(e)}] {kind}" for e, kind in cert.restrictions)
                lines.append(f"virtual character over {cert.field.name}: {parts}")
        else:
            lines.append(f"cyclic: no ({self.cyclicity.describe()})")
        lines.append("word counts: " + " ".join(map(str, self.series.word_counts)))
        lines.append("zeta coefficients: " + " ".join(map(str, self.series.coefficients)))
        bounds = ", ".join(map(str, self.degree_bounds))
        if self.rational is not None:
            lines.append(f"zeta: {self.rational}")
            lines.append(f"recurrence verified through x^{self.series.order} (degree bounds tried: {bounds})")
        else:
            lines.append(f"zeta: undetermined for degree bounds {bounds} through x^{self.series.order}")
        return "\n".join(lines) + "\n"


def zeta_report(
    dfa: Dfa,
    field_specs: Sequence[FieldSpec] = (),
    N: int = 16,
    dmax: int | None = None,
) -> ZetaReport:
    """The full pipeline for one DFA.

    Without an explicit ``dmax`` the number of states is tried first and then
    twice that, extending the series as needed; an explicit ``dmax`` must
    fit within the requested order.
    """
    tm = transition_monoid(dfa)
    cyclicity = is_cyclic_language(tm)
    certificates = []
    if cyclicity:
        certificates = [indicator_virtual_certificate(tm.monoid, tm.accepted, fs) for fs in field_specs]

    if dmax is not None:
        if N < 2 * dmax + 1:
            raise InsufficientCoefficients(f"order {N} is below 2*dmax+1 = {2 * dmax + 1}")
        bounds, heuristic = [dmax], False
    else:
        bounds, heuristic = [dfa.states, 2 * dfa.states], True

    tried = []
    rational = None
    series = None
    for d in bounds:
        series = zeta_truncated(dfa, max(N, 2 * d + 1))
        tried.append(d)
        rational = rational_reconstruct(series, d)
        if rational is not None:
            break
    return ZetaReport(dfa, tm, cyclicity, certificates, series, rational, tried, heuristic)
