"""Lexsegment ideals: construction from a Hilbert function and universality."""
from __future__ import annotations

from typing import Sequence

from .errors import DomainError
from .monomial import (
    Monomial,
    MonomialIdeal,
    count_monomials,
    lex_rank,
    lex_unrank,
    minimalize,
)
from .numseq import OSequence, require_o_sequence


def lexify(H: OSequence) -> MonomialIdeal:
    """The unique lexsegment ideal ``L`` of ``K[x1..xn]`` with ``H_{A/L} = H``.

    Degree q of L is the top lex segment of size ``c_q = #monomials - h(q)``.
    The shadow of the degree-(q-1) segment ending at u is the segment ending
    at ``u * x_n``, so the new generators are exactly the ranks between the
    shadow size and ``c_q``; they are unranked directly.
    """
    require_o_sequence(H)
    n = H.n
    gens: list[Monomial] = []
    prev_last = None  # lex-smallest member of the previous degree slice
    for q in range(1, H.settle_degree + 1):
        c = count_monomials(n, q) - H[q]
        shadow_size = 0 if prev_last is None else lex_rank(prev_last.times_var(n)) + 1
        if c < shadow_size:
            raise DomainError(f"degree {q}: lex slice of size {c} cannot contain its shadow", degree=q)
        gens.extend(lex_unrank(n, q, r) for r in range(shadow_size, c))
        prev_last = lex_unrank(n, q, c - 1) if c else None
    return MonomialIdeal(n, tuple(gens))


def lexify_by_enumeration(H: OSequence) -> MonomialIdeal:
    """Slow reference for :func:`lexify` that materializes every degree slice."""
    from .monomial import monomials_of_degree, shadow

    require_o_sequence(H)
    n = H.n
    gens = []
    current: set[Monomial] = set()
    for q in range(1, H.settle_degree + 1):
        slice_ = list(monomials_of_degree(n, q))
        c = len(slice_) - H[q]
        top = slice_[:c]
        sh = shadow(current, n) if current else set()
        if not sh <= set(top):
            raise DomainError(f"degree {q}: shadow escapes the lex segment", degree=q)
        gens.extend(u for u in top if u not in sh)
        current = set(top)
    return minimalize(gens, n)


def is_lexsegment(I: MonomialIdeal) -> bool:
    """True iff every degree slice of I is a top lex segment.

    Only the lex-smallest generator of each generator degree needs checking:
    degrees without new generators are shadows of segments, hence segments,
    and in a degree with generators the smallest member of the slice is one.
    """
    by_degree: dict[int, Monomial] = {}
    for g in I.gens:
        d = g.degree
        if d not in by_degree or g.exponents < by_degree[d].exponents:
            by_degree[d] = g
    for d, u in by_degree.items():
        for r in range(lex_rank(u)):
            if lex_unrank(I.n, d, r) not in I:
                return False
    return True


def is_universal_lex(I: MonomialIdeal) -> bool:
    return len(I.gens) <= I.n and is_lexsegment(I)


def _check_degrees(n: int, degrees: Sequence[int]) -> None:
    if not 1 <= len(degrees) <= n:
        raise DomainError(f"need 1 <= delta <= n = {n} degrees, got {len(degrees)}")
    if any(e < 1 for e in degrees):
        raise DomainError(f"degrees must be positive, got {tuple(degrees)}")
    if any(a > b for a, b in zip(degrees, degrees[1:])):
        raise DomainError(f"degrees must be nondecreasing, got {tuple(degrees)}")


def universal_lex_from_degrees(n: int, degrees: Sequence[int]) -> MonomialIdeal:
    """Closed form ``u_k = x1^s1 ... x_{k-1}^s_{k-1} x_k^(s_k + 1)``.

    ``s_1 = e_1 - 1`` and ``s_k = e_k - e_{k-1}``.
    """
    degrees = tuple(degrees)
    _check_degrees(n, degrees)
    s = [degrees[0] - 1] + [degrees[k] - degrees[k - 1] for k in range(1, len(degrees))]
    gens = []
    for k in range(1, len(degrees) + 1):
        e = s[:k] + [0] * (n - k)
        e[k - 1] += 1
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(n, tuple(gens))


def greedy_next_generator(J: MonomialIdeal, e: int) -> Monomial:
    """Lex-largest degree-e monomial outside J."""
    for r in range(count_monomials(J.n, e)):
        u = lex_unrank(J.n, e, r)
        if u not in J:
            return u
    raise DomainError(f"every degree-{e} monomial already lies in {J}")


def universal_lex_greedy(n: int, degrees: Sequence[int]) -> MonomialIdeal:
    """Build the universal lex ideal by repeated :func:`greedy_next_generator`."""
    degrees = tuple(degrees)
    _check_degrees(n, degrees)
    J = MonomialIdeal(n, ())
    for e in degrees:
        J = MonomialIdeal(n, J.gens + (greedy_next_generator(J, e),))
    return J
