"""Exact first-return period detection with verifiable certificates.

Because the forward map is a bijection, an orbit that ever revisits a
window must revisit its initial window first, and the first return time
is the minimal period of the generated sequence.  Detection therefore
compares the full k-window against the start after every step and stops
at the first match.

A successful detection is packaged as a PeriodCertificate carrying the
whole cycle, its maximum, and a canonical rotation index, so that
independent code (or another process entirely) can re-check every claim:
re-simulation, minimality, and the sign structure that any cycle of this
recurrence must satisfy around occurrences of its maximum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .orbit import (
    State,
    clear_denominators,
    format_rational,
    iterate,
    make_state,
    orbit_values,
    parse_rational,
)

DEFAULT_CAP = 1_000_000


def _first_return(window: Sequence[int], cap: int) -> Tuple[Optional[int], List[int]]:
    """Integer fast path: first return time and the values produced on the way."""
    w = tuple(window)
    target = w
    produced: List[int] = []
    append = produced.append
    for t in range(1, cap + 1):
        rest = w[1:]
        m = max(rest)
        if m < 0:
            m = 0
        w = rest + (m - w[0],)
        append(w[-1])
        if w == target:
            return t, produced
    return None, produced


def least_rotation_index(values: Sequence) -> int:
    """Index of the lexicographically smallest rotation (Booth's algorithm)."""
    n = len(values)
    if n == 0:
        return 0
    doubled = list(values) + list(values)
    fail = [-1] * len(doubled)
    best = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and c != doubled[best + i + 1]:
            if c < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if c != doubled[best + i + 1]:
            if c < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return best % n


@dataclass(frozen=True)
class PeriodCertificate:
    """A checked claim that ``initial`` generates a cycle of minimal period."""

    k: int
    initial: State
    period: int
    cycle: Tuple[Fraction, ...]
    max_value: Fraction
    rotation: int

    def canonical_cycle(self) -> Tuple[Fraction, ...]:
        """The cycle rotated to its lexicographically smallest rotation."""
        r = self.rotation
        return self.cycle[r:] + self.cycle[:r]

    def window_at(self, index: int) -> State:
        """The k-window of the cycle starting at the given cycle index."""
        p = self.period
        return tuple(self.cycle[(index + t) % p] for t in range(self.k))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "initial": [format_rational(v) for v in self.initial],
            "period": self.period,
            "cycle": [format_rational(v) for v in self.cycle],
            "max": format_rational(self.max_value),
            "rotation": self.rotation,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "PeriodCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            k=int(data["k"]),
            initial=tuple(parse_rational(v) for v in data["initial"]),
            period=int(data["period"]),
            cycle=tuple(parse_rational(v) for v in data["cycle"]),
            max_value=parse_rational(data["max"]),
            rotation=int(data["rotation"]),
        )


@dataclass(frozen=True)
class NotClosed:
    """The orbit did not return to its initial window within ``steps`` steps."""

    steps: int


DetectionOutcome = Union[PeriodCertificate, NotClosed]


def detect_period(state: State, cap: int = DEFAULT_CAP) -> DetectionOutcome:
    """Run the orbit forward until the initial window recurs, or give up.

    NotClosed is an answer, not an error: nothing guarantees that an
    arbitrary rational window closes within any particular budget.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    state = make_state(state)
    ints, L = clear_denominators(state)
    p, produced = _first_return(ints, cap)
    if p is None:
        return NotClosed(steps=cap)
    k = len(ints)
    if p >= k:
        cycle_ints = list(ints) + produced[: p - k]
    else:
        cycle_ints = list(ints[:p])
    cycle = tuple(Fraction(c, L) for c in cycle_ints)
    return PeriodCertificate(
        k=k,
        initial=state,
        period=p,
        cycle=cycle,
        max_value=max(cycle),
        rotation=least_rotation_index(cycle),
    )


def period_of(state: State, cap: int = DEFAULT_CAP) -> Optional[int]:
    """Just the period, or None if the orbit did not close within the cap."""
    outcome = detect_period(state, cap)
    return outcome.period if isinstance(outcome, PeriodCertificate) else None


def _proper_divisors(n: int) -> List[int]:
    divs = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
        d += 1
    return sorted(x for x in divs if x < n)


def first_violation(cert: PeriodCertificate) -> Optional[str]:
    """Name of the first certificate invariant that fails, or None.

    The checks are deliberately independent of the detector: the cycle is
    re-simulated, minimality is re-established through divisors (the
    periods of a fixed sequence are closed under gcd, so a divisor check
    is complete), and the sign structure around the maximum is verified
    directly.
    """
    k, p = cert.k, cert.period
    if k < 2 or len(cert.initial) != k:
        return "order"
    if p < 1:
        return "period-positive"
    if len(cert.cycle) != p:
        return "cycle-length"
    if any(cert.initial[i] != cert.cycle[i % p] for i in range(k)):
        return "initial-window"
    if tuple(orbit_values(cert.initial, p)) != cert.cycle:
        return "resimulation"
    if iterate(cert.initial, p) != cert.initial:
        return "resimulation"
    for d in _proper_divisors(p):
        if iterate(cert.initial, d) == cert.initial:
            return "minimality"
    if cert.max_value != max(cert.cycle):
        return "max-element"
    if cert.max_value < 0:
        return "max-nonnegative"
    if cert.max_value == 0 and any(v != 0 for v in cert.cycle):
        return "zero-cycle"
    if cert.max_value > 0:
        for i, v in enumerate(cert.cycle):
            if v == cert.max_value:
                if any(cert.cycle[(i + t) % p] < 0 for t in range(k)):
                    return "sign-structure"
                if cert.cycle[(i + k) % p] > 0:
                    return "sign-structure"
    if not (0 <= cert.rotation < p) or cert.rotation != least_rotation_index(cert.cycle):
        return "rotation"
    return None


def verify_certificate(cert: PeriodCertificate) -> bool:
    """True iff every certificate invariant re-checks from scratch."""
    return first_violation(cert) is None


def match_eight_template(cert: PeriodCertificate) -> Optional[Tuple[Fraction, Fraction]]:
    """Parameters (x, alpha) of an 8-cycle, if this certificate is one.

    Every 8-cycle of the order-4 recurrence is, up to rotation,

        x, 0, x, alpha, 0, x, 0, x - alpha      with x > 0, 0 <= alpha <= x.

    At the boundary alpha in {0, x} two rotations match; the smaller alpha
    is returned so the answer is canonical.
    """
    if cert.period != 8:
        return None
    c = cert.cycle
    x = cert.max_value
    if x <= 0:
        return None
    alphas = []
    for r in range(8):
        w = tuple(c[(r + t) % 8] for t in range(8))
        alpha = w[3]
        if (
            w[0] == x
            and w[1] == 0
            and w[2] == x
            and 0 <= alpha <= x
            and w[4] == 0
            and w[5] == x
            and w[6] == 0
            and w[7] == x - alpha
        ):
            alphas.append(alpha)
    if not alphas:
        return None
    return x, min(alphas)


def match_two_template(cert: PeriodCertificate) -> Optional[Fraction]:
    """The positive value a of an alternating {a, 0} 2-cycle, if applicable.

    Such cycles exist only for odd order k; the matcher itself just
    inspects the cycle.
    """
    if cert.period != 2:
        return None
    lo, hi = sorted(cert.cycle)
    if lo == 0 and hi > 0:
        return hi
    return None
