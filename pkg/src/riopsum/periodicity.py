"""Minimal eventual-periodicity detection and the Q(t)/(1-t^n) correspondence.

A sequence is eventually periodic with period n exactly when its generating
function is Q(t)/(1-t^n); both directions are implemented, plus minimization
of a (preperiod, period, prefix, block) description.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Poly, fps_expand_rational, is_zero_scalar, scalar_eq


class NotEventuallyPeriodicError(RuntimeError):
    """No (preperiod, period) verified within the inspected window.

    A legitimate outcome for genuinely aperiodic sequences; carries the terms
    that were examined.
    """

    def __init__(self, message: str, terms=()):
        super().__init__(message)
        self.terms = list(terms)


@dataclass(frozen=True)
class EventualPeriod:
    """Prefix + infinitely repeated block description of a sequence."""

    preperiod: int
    period: int
    prefix: tuple
    block: tuple

    def __post_init__(self):
        if self.period < 1 or not self.block:
            raise ValueError("period must be positive with a nonempty block")
        if len(self.prefix) != self.preperiod or len(self.block) != self.period:
            raise ValueError("prefix/block lengths must match preperiod/period")

    def terms(self, count: int) -> list:
        """First ``count`` terms of the described sequence."""
        out = list(self.prefix[:count])
        i = 0
        while len(out) < count:
            out.append(self.block[i % self.period])
            i += 1
        return out

    def __eq__(self, other):
        if not isinstance(other, EventualPeriod):
            return NotImplemented
        return (
            self.preperiod == other.preperiod
            and self.period == other.period
            and all(a == b for a, b in zip(self.prefix, other.prefix))
            and all(a == b for a, b in zip(self.block, other.block))
        )

    __hash__ = None


def detect_eventual_period(seq, max_len: int | None = None, tolerance: float | None = None) -> EventualPeriod:
    """Minimal (preperiod, period) verified over the whole window.

    Periods are tried ascending; for the first period n that verifies, the
    preperiod k is the minimal one for that n (found by scanning backward from
    the verified suffix).  A candidate is accepted only when k + 3n <= max_len,
    so every block position is checked at least twice; anything weaker lets a
    lucky pair of equal values at the window edge masquerade as a period-1
    tail.  Exact equality by default, |difference| <= tolerance in float mode.
    """
    seq = list(seq)
    if max_len is None:
        max_len = len(seq)
    if max_len > len(seq):
        raise ValueError(f"sequence provides {len(seq)} terms but max_len is {max_len}")
    window = seq[:max_len]
    for n in range(1, max_len // 3 + 1):
        mismatch = -1
        for i in range(max_len - n - 1, -1, -1):
            if not scalar_eq(window[i], window[i + n], tolerance):
                mismatch = i
                break
        k = mismatch + 1
        if k + 3 * n <= max_len:
            return EventualPeriod(
                preperiod=k,
                period=n,
                prefix=tuple(window[:k]),
                block=tuple(window[k : k + n]),
            )
    raise NotEventuallyPeriodicError(
        f"no eventual period with preperiod + 3*period <= {max_len}", window
    )


def minimize(ep: EventualPeriod, tolerance: float | None = None) -> EventualPeriod:
    """Smallest equivalent description: minimal period, then minimal preperiod."""
    block = list(ep.block)
    n = ep.period
    for cand in range(1, n + 1):
        if n % cand:
            continue
        if all(scalar_eq(block[i], block[i % cand], tolerance) for i in range(n)):
            block = block[:cand]
            n = cand
            break
    prefix = list(ep.prefix)
    while prefix and scalar_eq(prefix[-1], block[-1], tolerance):
        prefix.pop()
        block = [block[-1]] + block[:-1]
    return EventualPeriod(len(prefix), n, tuple(prefix), tuple(block))


def gf_from_periodic(ep: EventualPeriod) -> tuple[Poly, Poly]:
    """Numerator and denominator (1 - t^n) generating the described sequence."""
    sample = ep.block[0]
    zero = sample * 0
    one = sample ** 0
    n = ep.period
    denom = Poly([one] + [zero] * (n - 1) + [-one])
    q0 = Poly(ep.prefix)
    q = Poly(ep.block)
    numer = q0 * denom + q.shift(ep.preperiod)
    return numer, denom


def periodic_from_gf(numer: Poly, n: int, tolerance: float | None = None) -> EventualPeriod:
    """Eventual period of the expansion of numer/(1 - t^n), minimized.

    Splits the numerator into degree-n blocks Q_0..Q_{p-1} plus remainder R;
    the tail repeats the cyclic shift of their running total, and the result
    is then reduced to the minimal description.
    """
    if n < 1:
        raise ValueError("period must be positive")
    if numer.is_zero():
        return EventualPeriod(0, 1, (), (0,))
    coeffs = list(numer.coeffs)
    zero = coeffs[0] * 0
    deg = len(coeffs) - 1
    if deg < n:
        block = coeffs + [zero] * (n - deg - 1)
        return minimize(EventualPeriod(0, n, (), tuple(block)), tolerance)
    p, r = divmod(deg, n)
    running = [zero] * n
    prefix: list = []
    for i in range(p):
        chunk = coeffs[i * n : (i + 1) * n]
        prefix.extend(running[j] + chunk[j] if j < len(chunk) else running[j] for j in range(n))
        running = [running[j] + chunk[j] for j in range(n)]
    rest = coeffs[p * n :]
    total = [running[j] + (rest[j] if j < len(rest) else zero) for j in range(n)]
    # the pure tail starts right past the numerator's degree, so the repeating
    # part is the running total cyclically shifted by r+1
    prefix.extend(total[: r + 1])
    shifted = total[r + 1 :] + total[: r + 1]
    ep = EventualPeriod(len(prefix), n, tuple(prefix), tuple(shifted))
    return minimize(ep, tolerance)
