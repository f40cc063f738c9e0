"""Macaulay calculus on numerical functions H: N -> N.

An :class:`OSequence` stores a finite window ``h(0), ..., h(D)`` together with
a tail convention that determines every later value:

* ``MAX_GROWTH``: ``h(q+1) = h(q)^<q>`` for all ``q >= D``.
* ``ZERO``: ``h(q) = 0`` for ``q > D``.
* ``POLYNOMIAL``: the values continue along the polynomial of degree at most
  ``n - 1`` interpolating the last ``min(n, D)`` window values of positive
  degree (the Hilbert polynomial regime).

All arithmetic is exact Python integers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from .errors import DomainError, GuardrailError

# Largest degree searched for the onset of maximal growth under POLYNOMIAL tails.
SETTLE_CAP = 2000


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with ``C(a, b) = 0`` whenever ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def macaulay_rep(a: int, q: int) -> list[tuple[int, int]]:
    """Greedy ``q``-th Macaulay representation of ``a``.

    Returns pairs ``(a_i, i)`` with ``a = sum C(a_i, i)``, ``i`` running down
    from ``q`` and ``a_q > a_{q-1} > ... > a_j >= j >= 1``.

    >>> macaulay_rep(11, 2)
    [(5, 2), (1, 1)]
    """
    if a < 0 or q < 1:
        raise DomainError(f"macaulay_rep needs a >= 0 and q >= 1, got a={a}, q={q}")
    terms = []
    i = q
    while a > 0:
        # largest top t with C(t, i) <= a; t >= i since C(i, i) = 1 <= a
        lo, hi = i, i
        while comb(hi, i) <= a:
            lo, hi = hi, 2 * hi + 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if comb(mid, i) <= a:
                lo = mid
            else:
                hi = mid
        terms.append((lo, i))
        a -= comb(lo, i)
        i -= 1
    return terms


def macaulay_bound(a: int, q: int) -> int:
    """The pseudo-power ``a^<q>``: shift every term of the representation up by one."""
    return sum(comb(t + 1, i + 1) for t, i in macaulay_rep(a, q))


class Tail(enum.Enum):
    MAX_GROWTH = "max"
    ZERO = "zero"
    POLYNOMIAL = "poly"


@dataclass(frozen=True)
class Violation:
    """First failing degree of an O-sequence check.

    ``kind`` is one of ``"h0"``, ``"h1"``, ``"negative"``, ``"growth"``; for
    ``"growth"`` the value ``h(q+1)`` exceeds ``bound = h(q)^<q>``.
    """

    kind: str
    q: int
    value: int
    bound: int | None = None

    def describe(self) -> str:
        if self.kind == "h0":
            return f"h(0) = {self.value} != 1"
        if self.kind == "h1":
            return f"h(1) = {self.value} exceeds n = {self.bound}"
        if self.kind == "negative":
            return f"h({self.q}) = {self.value} is negative"
        return f"h({self.q + 1}) = {self.value} exceeds h({self.q})^<{self.q}> = {self.bound}"


@dataclass(frozen=True)
class OCheck:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def _extend_polynomial(points: list[int], count: int) -> list[int]:
    """Continue ``points`` by ``count`` values of their lowest-degree interpolant."""
    if not points:
        return [0] * count
    # Newton forward differences; the last row is constant.
    table = [list(points)]
    while len(table[-1]) > 1:
        row = table[-1]
        table.append([row[k + 1] - row[k] for k in range(len(row) - 1)])
    tops = [row[-1] for row in table]
    out = []
    for _ in range(count):
        for k in range(len(tops) - 2, -1, -1):
            tops[k] += tops[k + 1]
        out.append(tops[0])
    return out


@dataclass(frozen=True)
class OSequence:
    n: int
    values: tuple[int, ...]
    tail: Tail = Tail.MAX_GROWTH
    _cache: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.values:
            raise DomainError("an O-sequence window needs at least h(0)")
        if self.n < 0:
            raise DomainError(f"ambient variable count must be >= 0, got {self.n}")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        self._cache.extend(self.values)

    @property
    def D(self) -> int:
        return len(self.values) - 1

    @cached_property
    def _fit_points(self) -> int:
        return min(self.n, self.D)

    @property
    def poly_from(self) -> int:
        """Degree from which the values follow a single polynomial in ``q``."""
        if self.tail is Tail.MAX_GROWTH:
            return self.D
        if self.tail is Tail.ZERO:
            return self.D + 1
        return self.D - self._fit_points + 1

    def __getitem__(self, q: int) -> int:
        if q < 0:
            return 0
        cache = self._cache
        while len(cache) <= q:
            last = len(cache) - 1
            if self.tail is Tail.ZERO:
                cache.append(0)
            elif self.tail is Tail.POLYNOMIAL:
                k = self._fit_points
                pts = list(self.values[len(self.values) - k:]) if k else []
                done = len(cache) - len(self.values)
                ext = _extend_polynomial(pts, done + max(q + 1 - len(cache), 16))
                cache.extend(ext[done:])
            else:
                h = cache[last]
                if h < 0:
                    raise DomainError(f"cannot grow a negative value h({last}) = {h}")
                cache.append(macaulay_bound(h, last) if last >= 1 else self.n * h)
        return cache[q]

    def prefix(self, length: int) -> tuple[int, ...]:
        """The first ``length`` values ``h(0), ..., h(length - 1)``."""
        self[length - 1]
        return tuple(self._cache[:length])

    def with_window(self, D: int) -> tuple[int, ...]:
        return self.prefix(D + 1)

    @cached_property
    def _scan(self):
        """Walk degrees upward: first violation, or the settle degree."""
        if self[0] != 1:
            return Violation("h0", 0, self[0])
        if self[1] < 0:
            return Violation("negative", 1, self[1])
        if self[1] > self.n:
            return Violation("h1", 1, self[1], self.n)
        if self.tail is Tail.MAX_GROWTH:
            start = max(self.D, 1)
        elif self.tail is Tail.ZERO:
            start = self.D + 1
        else:
            start = max(self.poly_from, 1)
        for q in range(1, SETTLE_CAP):
            if q >= start and self._grows_maximally_from(q):
                S = q
                while S > 1 and macaulay_bound(self[S - 1], S - 1) == self[S]:
                    S -= 1
                return S
            nxt = self[q + 1]
            if nxt < 0:
                return Violation("negative", q + 1, nxt)
            b = macaulay_bound(self[q], q)
            if nxt > b:
                return Violation("growth", q, nxt, b)
        raise GuardrailError(f"no onset of maximal growth found below degree {SETTLE_CAP}")

    @property
    def settle_degree(self) -> int:
        """Smallest ``S >= 1`` with ``h(q+1) = h(q)^<q>`` for every ``q >= S``.

        No lexsegment generators live above degree ``S``.
        """
        r = self._scan
        if isinstance(r, Violation):
            raise DomainError(f"not an O-sequence: {r.describe()}", degree=r.q)
        return r

    def _grows_maximally_from(self, S: int) -> bool:
        # Values up to S are already validated here, so h(S) <= C(n-1+S, S)
        # and maximal growth from S is a polynomial of degree <= n-1 in q,
        # as is the tail; n+1 agreeing steps past poly_from decide equality.
        if self.tail is Tail.MAX_GROWTH and S >= self.D:
            return True
        if self.tail is Tail.ZERO and S > self.D:
            return True
        h, q = self[S], S
        steps = 0
        while steps <= self.n:
            b = macaulay_bound(h, q)
            if self[q + 1] != b:
                return False
            h, q = b, q + 1
            if q > self.poly_from:
                steps += 1
        return True

    def horizon(self) -> int:
        """Degree up to which values must be inspected for validity."""
        return max(self.D, self.settle_degree) + 1


def is_o_sequence(H: OSequence) -> OCheck:
    """Macaulay's criterion ``h(0) = 1``, ``h(1) <= n``, ``h(q+1) <= h(q)^<q>``.

    Checked up to the settle degree, beyond which the tail is consistent by
    construction. Stops at the first failure, reported in ``violation``.
    """
    r = H._scan
    if isinstance(r, Violation):
        return OCheck(False, r)
    return OCheck(True)


def require_o_sequence(H: OSequence) -> None:
    chk = is_o_sequence(H)
    if not chk:
        v = chk.violation
        raise DomainError(f"not an O-sequence: {v.describe()}", degree=v.q)


def differential(H: OSequence) -> OSequence:
    """First differential over ``n - 1`` variables.

    The result carries a POLYNOMIAL tail with its window extended far enough
    that every fitted point lies where ``H`` is already polynomial.
    """
    if H.n == 0:
        raise DomainError("differential needs at least one ambient variable")
    D_out = max(H.D, H.poly_from) + H.n
    h = H.prefix(D_out + 1)
    vals = (1,) + tuple(h[q] - h[q - 1] for q in range(1, D_out + 1))
    return OSequence(H.n - 1, vals, Tail.POLYNOMIAL)


def pth_differential(H: OSequence, p: int) -> OSequence:
    if p < 0 or p > H.n:
        raise DomainError(f"differential order p = {p} must lie in 0..{H.n}")
    for _ in range(p):
        H = differential(H)
    return H


def integrate(dH: OSequence, length: int) -> tuple[int, ...]:
    """Partial sums of a differential seeded at 1; inverse of :func:`differential` on windows."""
    d = dH.prefix(length)
    out = [1]
    for q in range(1, length):
        out.append(out[-1] + d[q])
    return tuple(out)


def full_ring(n: int, D: int = 0) -> OSequence:
    """Hilbert function of the polynomial ring itself."""
    return OSequence(n, tuple(binomial(n - 1 + q, q) for q in range(D + 1)), Tail.MAX_GROWTH)


def parse_values(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.replace(" ", "").split(",") if p.strip()]
    if not parts:
        raise ValueError("empty Hilbert function")
    return tuple(int(p) for p in parts)
