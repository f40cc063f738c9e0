"""Monomials as exponent vectors, lex order, rank/unrank and monomial ideals.

Variables are ``x1 > x2 > ... > xn``. Lex comparison of two monomials is
plain tuple comparison of their exponent vectors, so the lex-largest
degree-q monomial is ``x1^q`` with rank 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .errors import DomainError, GuardrailError
from .numseq import binomial

# Full enumeration of a degree slice is refused above this many monomials.
ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        """``x_i^power`` in n variables, 1-based ``i``."""
        e = [0] * n
        e[i - 1] = power
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def m_index(self) -> int:
        """Largest 1-based ``i`` with ``x_i`` dividing this monomial."""
        for i in range(self.n - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        raise DomainError("m(u) is undefined for the monomial 1")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> "Monomial":
        e = list(self.exponents)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def embed(self, n: int) -> "Monomial":
        """Pad with trailing zero exponents to live in ``n >= self.n`` variables."""
        if n < self.n:
            raise DomainError(f"cannot embed a monomial in {self.n} variables into {n}")
        return Monomial(self.exponents + (0,) * (n - self.n))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1^2*x2``-style text (whitespace-insensitive) in n variables."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty monomial")
    if s == "1":
        return Monomial((0,) * n)
    e = [0] * n
    for factor in s.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        e[i - 1] += int(m.group(2) or 1)
    return Monomial(tuple(e))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as ``u <_lex v``, ``u == v``, ``u >_lex v``."""
    if u.n != v.n:
        raise DomainError(f"lex_compare across {u.n} and {v.n} variables")
    a, b = u.exponents, v.exponents
    return (a > b) - (a < b)


def count_monomials(n: int, q: int) -> int:
    """Number of degree-q monomials in n variables."""
    if q < 0:
        return 0
    if n == 0:
        return 1 if q == 0 else 0
    return binomial(n - 1 + q, n - 1)


def lex_rank(u: Monomial) -> int:
    """0-based position of ``u`` in the lex-descending list of its degree slice."""
    n, q = u.n, u.degree
    r = 0
    rem = q
    for i in range(n - 1):
        a = u.exponents[i]
        # monomials agreeing before position i with a larger exponent here
        r += binomial(n - i - 2 + rem - a, n - i - 1)
        rem -= a
    return r


def lex_unrank(n: int, q: int, r: int) -> Monomial:
    """Inverse of :func:`lex_rank` on degree-q monomials in n variables."""
    total = count_monomials(n, q)
    if not 0 <= r < total:
        raise DomainError(f"rank {r} outside 0..{total - 1} for n={n}, q={q}")
    e = []
    rem = q
    for i in range(n - 1):
        # exponent a at position i covers ranks of monomials with larger exponents first
        a = rem
        while True:
            block = count_monomials(n - i - 1, rem - a)
            if r < block:
                break
            r -= block
            a -= 1
        e.append(a)
        rem -= a
    e.append(rem)
    return Monomial(tuple(e))


def lex_segment(n: int, q: int, size: int) -> list[Monomial]:
    """The ``size`` lex-largest degree-q monomials."""
    return [lex_unrank(n, q, r) for r in range(size)]


def monomials_of_degree(n: int, q: int) -> Iterator[Monomial]:
    """All degree-q monomials in lex-descending order."""
    if count_monomials(n, q) > ENUMERATION_LIMIT:
        raise GuardrailError(
            f"degree-{q} slice in {n} variables has {count_monomials(n, q)} monomials"
        )
    if n == 0:
        if q == 0:
            yield Monomial(())
        return
    # combinations_with_replacement over variable indices is lex-descending
    for combo in combinations_with_replacement(range(n), q):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield Monomial(tuple(e))


def shadow(S: Iterable[Monomial], n: int | None = None) -> set[Monomial]:
    """All products ``x_i * u`` for u in S."""
    S = list(S)
    if not S:
        return set()
    degs = {u.degree for u in S}
    if len(degs) > 1:
        raise DomainError(f"shadow needs a single degree, got degrees {sorted(degs)}")
    n = S[0].n if n is None else n
    return {u.times_var(i) for u in S for i in range(1, n + 1)}


def _canonical_key(u: Monomial):
    return (u.degree, tuple(-e for e in u.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators in canonical order."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(sorted(self.gens, key=_canonical_key)))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.gens)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def lcm(self) -> Monomial:
        out = Monomial((0,) * self.n)
        for g in self.gens:
            out = out.lcm(g)
        return out

    def embed(self, n: int) -> "MonomialIdeal":
        return MonomialIdeal(n, tuple(g.embed(n) for g in self.gens))

    def degree_part(self, q: int) -> list[Monomial]:
        return [u for u in monomials_of_degree(self.n, q) if u in self]

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Drop every monomial divisible by another one; canonical order."""
    gens = set(gens)
    for g in gens:
        if g.n != n:
            raise DomainError(f"generator {g} does not live in {n} variables")
        if g.degree == 0:
            raise DomainError("the unit monomial 1 generates the whole ring")
    ordered = sorted(gens, key=_canonical_key)
    kept: list[Monomial] = []
    for g in ordered:
        # ascending degree: only earlier (lower or equal degree) monomials can divide g
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(kept))


def ideal(n: int, *texts: str) -> MonomialIdeal:
    """Convenience constructor: ``ideal(4, "x1*x4", "x3*x4")``."""
    return minimalize((parse_monomial(t, n) for t in texts), n)


def is_stable(I: MonomialIdeal) -> bool:
    """Stability checked on minimal generators only.

    If every generator passes the exchange ``u -> (x_q / x_m(u)) u`` then so
    does every monomial of I: for ``w = v g`` with ``m(w) = m(v)`` the
    exchanged ``(x_q/x_m(v)) v * g`` is still a multiple of g, and otherwise
    ``m(w) = m(g)`` and the exchange factors through g's.
    """
    for u in I.gens:
        m = u.m_index
        for q in range(1, m):
            e = list(u.exponents)
            e[m - 1] -= 1
            e[q - 1] += 1
            if Monomial(tuple(e)) not in I:
                return False
    return True
