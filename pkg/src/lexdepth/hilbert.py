"""Hilbert functions, K-polynomials and Krull dimension of monomial quotients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import monomial as _mono
from .errors import DomainError, GuardrailError
from .monomial import Monomial, MonomialIdeal, count_monomials, monomials_of_degree
from .numseq import binomial

# Inclusion-exclusion is used up to this many generators, splitting beyond.
SUBSET_LIMIT = 22


@dataclass(frozen=True)
class KPolynomial:
    """Numerator of the Hilbert series over ``(1 - t)^n``; index j holds the t^j coefficient."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c) or (0,))

    def at_one(self) -> int:
        return sum(self.coefficients)

    def divide_one_minus_t(self) -> "KPolynomial":
        """Exact quotient by ``(1 - t)``; requires a root at t = 1."""
        if self.at_one() != 0:
            raise DomainError("K-polynomial has no root at 1")
        # p(t) = (1 - t) g(t)  =>  g_k = sum_{j <= k} p_j
        out, acc = [], 0
        for c in self.coefficients[:-1]:
            acc += c
            out.append(acc)
        return KPolynomial(tuple(out))

    def reduced(self) -> tuple["KPolynomial", int]:
        """Strip every factor ``(1 - t)``; returns the quotient and the count."""
        p, k = self, 0
        while p.coefficients != (0,) and p.at_one() == 0:
            p, k = p.divide_one_minus_t(), k + 1
        return p, k

    def series(self, n: int, length: int) -> list[int]:
        """First ``length`` coefficients of ``self / (1 - t)^n``."""
        out = []
        for q in range(length):
            out.append(sum(c * count_monomials(n, q - j) for j, c in enumerate(self.coefficients) if j <= q))
        return out


def hilbert_function(I: MonomialIdeal, q: int) -> int:
    """Number of degree-q monomials outside I, by enumeration."""
    if q < 0:
        return 0
    if count_monomials(I.n, q) > _mono.ENUMERATION_LIMIT:
        raise GuardrailError(f"degree-{q} slice in {I.n} variables is too large to enumerate")
    return sum(1 for u in monomials_of_degree(I.n, q) if u not in I)


def _inclusion_exclusion(gens: Sequence[Monomial], n: int) -> dict[int, int]:
    # Accumulate signed lcm terms; equal lcms from different subsets merge.
    terms: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for g in gens:
        new = dict(terms)
        for e, c in terms.items():
            m = tuple(max(a, b) for a, b in zip(e, g.exponents))
            new[m] = new.get(m, 0) - c
        terms = {e: c for e, c in new.items() if c}
    poly: dict[int, int] = {}
    for e, c in terms.items():
        d = sum(e)
        poly[d] = poly.get(d, 0) + c
    return poly


def _minimal(gens):
    kept = []
    for g in sorted(set(gens), key=lambda u: u.degree):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return kept


def _split(gens: list[Monomial], n: int, limit: int) -> dict[int, int]:
    # HS(A/I) = HS(A/(I + x_i)) + t * HS(A/(I : x_i)); the total degree of
    # nonlinear generators strictly drops in both branches.
    gens = _minimal(gens)
    nonlinear = [g for g in gens if g.degree > 1]
    if len(gens) <= limit or not nonlinear:
        return _inclusion_exclusion(gens, n)
    i = max(range(n), key=lambda k: sum(1 for g in nonlinear if g.exponents[k]))
    x = Monomial.var(i + 1, n)
    left = _split(gens + [x], n, limit)
    colon = []
    for g in gens:
        e = list(g.exponents)
        e[i] = max(e[i] - 1, 0)
        colon.append(Monomial(tuple(e)))
    right = _split(colon, n, limit)
    out = dict(left)
    for d, c in right.items():
        out[d + 1] = out.get(d + 1, 0) + c
    return out


def k_polynomial(I: MonomialIdeal, subset_limit: int = SUBSET_LIMIT, split: bool = False) -> KPolynomial:
    """K-polynomial ``sum_S (-1)^|S| t^deg lcm(S)`` over generator subsets S.

    More than ``subset_limit`` generators is rejected unless ``split`` is set,
    which enables recursive splitting on a pivot variable.
    """
    if len(I.gens) > subset_limit and not split:
        raise GuardrailError(
            f"{len(I.gens)} generators exceed the subset limit {subset_limit}; pass split=True"
        )
    poly = _split(list(I.gens), I.n, subset_limit) if split else _inclusion_exclusion(I.gens, I.n)
    top = max(poly, default=0)
    return KPolynomial(tuple(poly.get(d, 0) for d in range(top + 1)))


def krull_dim(I: MonomialIdeal, **kw) -> int:
    if not I.gens:
        return I.n
    _, k = k_polynomial(I, **kw).reduced()
    return I.n - k


def hilbert_series(I: MonomialIdeal, **kw) -> tuple[KPolynomial, int]:
    """Reduced numerator and the exponent d in ``numerator / (1 - t)^d``."""
    K = k_polynomial(I, **kw)
    reduced, k = K.reduced()
    return reduced, I.n - k


def critical_hilbert(n: int, degrees: Sequence[int], q: int) -> int:
    """Hilbert function of the universal lex ideal with generator degrees ``e_1..e_delta``."""
    if not 1 <= len(degrees) <= n:
        raise DomainError(f"need 1 <= delta <= n = {n}, got delta = {len(degrees)}")
    if any(e < 1 for e in degrees) or any(a > b for a, b in zip(degrees, degrees[1:])):
        raise DomainError(f"degrees must be positive and nondecreasing, got {tuple(degrees)}")
    total = binomial(n - 1 + q, n - 1)
    removed = sum(binomial(n - i + q - e, n - i) for i, e in enumerate(degrees, start=1))
    return total - removed


def hilbert_values(I: MonomialIdeal, length: int) -> tuple[int, ...]:
    """``H_{A/I}(0..length-1)`` read off the K-polynomial (no enumeration)."""
    return tuple(k_polynomial(I, split=True).series(I.n, length))
