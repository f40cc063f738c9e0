"""Random instances for property tests and experiment scripts.

Every sampler takes an explicit ``random.Random`` so runs are reproducible.
"""
from __future__ import annotations

import random

from .hilbert import k_polynomial
from .lex import universal_lex_from_degrees
from .monomial import Monomial, MonomialIdeal, minimalize
from .numseq import OSequence, Tail, macaulay_bound


def random_o_sequence(rng: random.Random, n: int, D: int, tail: Tail = Tail.MAX_GROWTH) -> OSequence:
    """Random valid window; values lean toward the Macaulay bound half the time."""
    h = [1]
    if D >= 1:
        h.append(rng.randint(max(0, n - 2), n) if rng.random() < 0.7 else rng.randint(0, n))
    for q in range(1, D):
        b = macaulay_bound(h[q], q)
        if rng.random() < 0.5:
            h.append(max(0, b - rng.randint(0, 3)))
        else:
            h.append(rng.randint(0, b))
    return OSequence(n, tuple(h), tail)


def random_monomial(rng: random.Random, n: int, d: int) -> Monomial:
    e = [0] * n
    for _ in range(d):
        e[rng.randrange(n)] += 1
    return Monomial(tuple(e))


def stable_closure(gens, n: int) -> MonomialIdeal:
    """Smallest stable ideal containing ``gens``; exchanges preserve degree, so this terminates."""
    todo = list(gens)
    seen = set(todo)
    while todo:
        u = todo.pop()
        m = u.m_index
        for q in range(1, m):
            e = list(u.exponents)
            e[m - 1] -= 1
            e[q - 1] += 1
            v = Monomial(tuple(e))
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return minimalize(seen, n)


def random_stable_ideal(rng: random.Random, max_n: int = 4, max_gens: int = 5, max_deg: int = 4) -> MonomialIdeal:
    """Stable ideal with at most ``max_gens`` minimal generators of degree <= max_deg."""
    while True:
        n = rng.randint(1, max_n)
        seeds = [random_monomial(rng, n, rng.randint(1, max_deg)) for _ in range(rng.randint(1, 3))]
        I = stable_closure(seeds, n)
        if len(I.gens) <= max_gens:
            return I


def random_monomial_ideal(rng: random.Random, n: int, max_gens: int, max_deg: int) -> MonomialIdeal:
    gens = [random_monomial(rng, n, rng.randint(1, max_deg)) for _ in range(rng.randint(1, max_gens))]
    return minimalize(gens, n)


def random_degrees(rng: random.Random, n: int, max_e: int) -> tuple[int, ...]:
    delta = rng.randint(1, n)
    return tuple(sorted(rng.randint(1, max_e) for _ in range(delta)))


def permute_variables(I: MonomialIdeal, perm) -> MonomialIdeal:
    """Apply ``x_i -> x_{perm[i]}`` (0-based perm); the Hilbert function is unchanged."""
    gens = []
    for g in I.gens:
        e = [0] * I.n
        for i, a in enumerate(g.exponents):
            e[perm[i]] = a
        gens.append(Monomial(tuple(e)))
    return minimalize(gens, I.n)


def hilbert_oseq(I: MonomialIdeal) -> OSequence:
    """Hilbert function of A/I as an exact O-sequence.

    ``h(q)`` agrees with the Hilbert polynomial once ``q > deg K - n``, so a
    window reaching ``deg K`` lets the POLYNOMIAL tail interpolate only
    genuine polynomial values.
    """
    K = k_polynomial(I, split=True)
    window = len(K.coefficients) + I.n
    return OSequence(I.n, tuple(K.series(I.n, window + 1)), Tail.POLYNOMIAL)


def random_deep_o_sequence(rng: random.Random, n: int, D: int, tries: int = 50) -> OSequence | None:
    """Window of length D + 1 whose depth set reaches above 0.

    Built from a lex ideal in ``n - r`` variables extended to ``n``; kept only
    when the POLYNOMIAL tail reproduces the true Hilbert function.
    """
    from .lex import lexify

    for _ in range(tries):
        r = rng.randint(1, n - 1) if n > 1 else 1
        J = lexify(random_o_sequence(rng, n - r, rng.randint(1, D))).embed(n)
        true = hilbert_oseq(J)
        H = OSequence(n, true.prefix(D + 1), Tail.POLYNOMIAL)
        top = max(true.D, H.D) + 2 * n + 4
        if H.prefix(top) == true.prefix(top):
            return H
    return None


def random_critical_perturbation(rng: random.Random, max_n: int = 4, max_e: int = 3):
    """A universal lex ideal L and a monomial ideal with the same Hilbert function."""
    from .depthset import explore

    n = rng.randint(2, max_n)
    L = universal_lex_from_degrees(n, random_degrees(rng, n, max_e))
    H = hilbert_oseq(L)
    rep = explore(H, L.max_degree, node_limit=20_000, keep_ideals=True)
    others = [J for J in rep.ideals if J != L]
    J = rng.choice(others) if others else L
    perm = list(range(n))
    rng.shuffle(perm)
    return L, permute_variables(J, perm)
