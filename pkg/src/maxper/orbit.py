"""Exact state arithmetic for the max-minus recurrence.

Sequences here obey, for a fixed order k >= 2,

    x[n+k] = max(x[n+k-1], x[n+k-2], ..., x[n+1], 0) - x[n].

The state of the dynamical system is one window of k consecutive terms,
stored oldest first as a tuple of exact rationals.  The forward map is a
bijection: the oldest term can always be recovered from the next window,

    x[n] = max(x[n+k-1], ..., x[n+1], 0) - x[n+k],

so every orbit extends to a bi-infinite sequence and eventual periodicity
already implies periodicity from the start.

All arithmetic is exact (``fractions.Fraction``); no floats appear
anywhere.  Values produced by the recurrence stay in the additive lattice
spanned by the initial entries, so denominators never grow beyond the lcm
of the initial denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Tuple

from .errors import Undecided

Rational = Fraction
State = Tuple[Fraction, ...]


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or literal like ``-3`` / ``5/2`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` with q > 0.  Floats are rejected."""
    s = text.strip()
    if not s or "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"not an exact rational literal: {text!r}") from None
        if d <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"not an exact rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Inverse of parse_rational: ``5``, ``-3``, or ``p/q`` in lowest terms."""
    return str(value)


def make_state(values: Iterable[int | str | Fraction]) -> State:
    """Build a state tuple from any mix of ints, strings, and Fractions."""
    state = tuple(as_rational(v) for v in values)
    if len(state) < 2:
        raise ValueError(f"a state needs order k >= 2, got {len(state)} entries")
    return state


def parse_state(text: str) -> State:
    """Parse a comma-separated window such as ``8,2,1,5`` or ``3/2,1/2,0,1``."""
    parts = [p for p in text.split(",")]
    if len(parts) < 2:
        raise ValueError(f"a state needs at least two comma-separated entries: {text!r}")
    return make_state(parts)


def format_state(state: State) -> str:
    return ",".join(str(v) for v in state)


def step(state: State) -> State:
    """One forward application of the recurrence to a k-window."""
    rest = state[1:]
    m = max(rest)
    if m < 0:
        m = 0
    return rest + (m - state[0],)


def step_back(state: State) -> State:
    """Exact inverse of step: recover the window one index earlier."""
    head = state[:-1]
    m = max(head)
    if m < 0:
        m = 0
    return (m - state[-1],) + head


def iterate(state: State, n: int) -> State:
    """n-fold forward step; negative n walks backward via the inverse map."""
    if n >= 0:
        for _ in range(n):
            state = step(state)
    else:
        for _ in range(-n):
            state = step_back(state)
    return state


def orbit_values(state: State, n: int) -> List[Fraction]:
    """First n terms x[1], ..., x[n] of the sequence seeded by this window."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = len(state)
    values = list(state[:n])
    w = state
    for _ in range(max(0, n - k)):
        w = step(w)
        values.append(w[-1])
    return values


@dataclass(frozen=True)
class OrbitSegment:
    """A start window together with the terms it generates, in order."""

    start: State
    values: Tuple[Fraction, ...]

    @classmethod
    def generate(cls, start: State, n: int) -> "OrbitSegment":
        return cls(start=start, values=tuple(orbit_values(start, n)))


def scale(state: State, alpha: int | str | Fraction) -> State:
    """Multiply every entry by alpha > 0.

    Positive scaling commutes with the recurrence, so the scaled orbit is
    periodic exactly when the original is, with the same period.
    """
    a = as_rational(alpha)
    if a <= 0:
        raise ValueError(f"scale factor must be positive, got {a}")
    return tuple(v * a for v in state)


def denominator_lcm(state: State) -> int:
    return lcm(*(as_rational(v).denominator for v in state))


def clear_denominators(state: State) -> Tuple[Tuple[int, ...], int]:
    """Return (integer window, L) where the window is the state scaled by L.

    Scaling by the positive integer L preserves periods and first-return
    times exactly, which makes integer arithmetic a safe fast path.
    """
    L = denominator_lcm(state)
    ints = tuple(int(as_rational(v) * L) for v in state)
    return ints, L


def shift_equivalent(first: State, second: State, cap: Optional[int] = None) -> bool:
    """Do the two windows generate the same bi-infinite sequence up to a shift?

    Both orbits are run through the period detector.  If both close, the
    answer is exact: equal periods and equal cycles up to rotation.  If
    exactly one closes within the cap the answer is False (a shift of a
    periodic sequence is periodic with the same period).  If neither
    closes, the orbit of ``first`` is searched forward and backward for
    the window ``second``; failing that the question is Undecided.
    """
    from .detect import DEFAULT_CAP, PeriodCertificate, detect_period

    if len(first) != len(second):
        raise ValueError("states must have the same order k")
    if cap is None:
        cap = DEFAULT_CAP
    first = make_state(first)
    second = make_state(second)

    a = detect_period(first, cap)
    b = detect_period(second, cap)
    a_closed = isinstance(a, PeriodCertificate)
    b_closed = isinstance(b, PeriodCertificate)
    if a_closed and b_closed:
        return a.period == b.period and a.canonical_cycle() == b.canonical_cycle()
    if a_closed != b_closed:
        return False

    if first == second:
        return True
    w = first
    for _ in range(cap):
        w = step(w)
        if w == second:
            return True
    w = first
    for _ in range(cap):
        w = step_back(w)
        if w == second:
            return True
    raise Undecided(f"neither orbit closed and no shift found within {cap} steps")
