"""Graded Betti numbers: Eliahou-Kervaire closed form and a Koszul homology oracle.

Public Betti tables resolve the quotient: ``beta[i, j] = beta_{i,j}(A/I)``,
so ``beta[0, 0] = 1`` and ``beta_{i,j}(I) = beta[i + 1, j]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd

from .errors import DomainError, GuardrailError
from .lex import is_lexsegment
from .monomial import Monomial, MonomialIdeal, is_stable
from .numseq import binomial

# Largest number of basis elements allowed in one linear-algebra slice.
COLUMN_LIMIT = 20_000
# Largest number of multidegrees scanned below lcm(G(I)).
MULTIDEGREE_LIMIT = 2_000_000


@dataclass(frozen=True)
class GradedBetti:
    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedBetti) and self.n == other.n and self.entries == other.entries

    @property
    def proj_dim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def depth(self) -> int:
        return self.n - self.proj_dim

    def ideal_convention(self) -> dict[tuple[int, int], int]:
        """``beta_{i,j}(I)``, i.e. the quotient table shifted down one index."""
        return {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}

    def euler(self, j: int) -> int:
        return sum((-1) ** i * v for (i, jj), v in self.entries.items() if jj == j)

    def to_json(self) -> str:
        rows = [[i, j, v] for (i, j), v in self.entries.items()]
        return json.dumps({"n": self.n, "betti": rows, "proj_dim": self.proj_dim, "depth": self.depth},
                          sort_keys=True)

    def table(self) -> str:
        """Macaulay-style table: columns are homological indices, rows the shift ``j - i``."""
        if not self.entries:
            return "total:\n"
        top_i = self.proj_dim
        shifts = sorted({j - i for i, j in self.entries})
        cols = list(range(top_i + 1))
        totals = [sum(v for (i, _), v in self.entries.items() if i == c) for c in cols]
        cells = [[str(self[c, s + c]) if self[c, s + c] else "." for c in cols] for s in shifts]
        width = max(len(x) for x in [str(c) for c in cols] + [str(t) for t in totals] + sum(cells, []))
        label_w = max(len("total:"), max(len(f"{s}:") for s in shifts))
        fmt = lambda items: " ".join(x.rjust(width) for x in items)
        lines = [" " * label_w + " " + fmt([str(c) for c in cols]),
                 "total:".rjust(label_w) + " " + fmt([str(t) for t in totals])]
        for s, row in zip(shifts, cells):
            lines.append(f"{s}:".rjust(label_w) + " " + fmt(row))
        return "\n".join(lines) + "\n"


def ek_betti(I: MonomialIdeal) -> GradedBetti:
    """Eliahou-Kervaire: each generator u adds ``C(m(u)-1, i)`` at ``beta_{i, i+deg u}(I)``."""
    if not is_stable(I):
        raise DomainError(f"Eliahou-Kervaire formulas need a stable ideal, got {I}")
    entries = {(0, 0): 1}
    for u in I.gens:
        m, d = u.m_index, u.degree
        for i in range(m):
            key = (i + 1, i + d)
            entries[key] = entries.get(key, 0) + binomial(m - 1, i)
    return GradedBetti(I.n, entries)


def proj_dim_stable(I: MonomialIdeal) -> int:
    if not is_stable(I):
        raise DomainError(f"projective dimension formula needs a stable ideal, got {I}")
    return max((u.m_index for u in I.gens), default=0)


def depth_lexsegment(I: MonomialIdeal) -> int:
    if not is_lexsegment(I):
        raise DomainError(f"{I} is not a lexsegment ideal")
    return max(I.n - len(I.gens), 0)


def taylor_bound(I: MonomialIdeal) -> int:
    """Taylor's resolution has length ``|G(I)|``, bounding ``proj dim A/I``."""
    return len(I.gens)


def _rank(rows: list[dict[int, int]], modulus: int | None) -> int:
    """Rank of a sparse integer matrix, fraction-free over Q or modulo a prime."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        # pivot on the shortest row to limit fill-in
        k = min(range(len(rows)), key=lambda t: len(rows[t]))
        piv = rows.pop(k)
        col = min(piv)
        a = piv[col]
        rank += 1
        rest = []
        for r in rows:
            b = r.get(col)
            if b is None:
                rest.append(r)
                continue
            new = {}
            for c in set(r) | set(piv):
                v = a * r.get(c, 0) - b * piv.get(c, 0)
                if modulus:
                    v %= modulus
                if v:
                    new[c] = v
            if new and not modulus:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            if new:
                rest.append(new)
        rows = rest
    return rank


def _multidegree_betti(I: MonomialIdeal, alpha: tuple[int, ...], modulus, column_limit) -> dict[int, int]:
    """``beta_{i, alpha}(A/I)`` from the Koszul complex in multidegree alpha."""
    supp = [k for k, a in enumerate(alpha) if a]
    if len(supp) and 2 ** len(supp) > column_limit:
        raise GuardrailError(f"multidegree {alpha} needs {2 ** len(supp)} columns")

    def standard(S) -> bool:
        e = list(alpha)
        for k in S:
            e[k] -= 1
        return Monomial(tuple(e)) not in I

    basis = {i: [S for S in combinations(supp, i) if standard(S)] for i in range(len(supp) + 1)}
    index = {i: {S: t for t, S in enumerate(b)} for i, b in basis.items()}
    ranks = {}
    for i in range(1, len(supp) + 1):
        # d(e_S (x) w) = sum_k (-1)^pos e_{S\k} (x) x_k w, dropping terms in I
        rows = []
        for S in basis[i]:
            row = {}
            for pos, k in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                t = index[i - 1].get(T)
                if t is not None:
                    row[t] = (-1) ** pos
            rows.append(row)
        ranks[i] = _rank(rows, modulus)
    out = {}
    for i, b in basis.items():
        v = len(b) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if v:
            out[i] = v
    return out


def koszul_betti(I: MonomialIdeal, j_max: int | None = None, modulus: int | None = None,
                 column_limit: int = COLUMN_LIMIT) -> GradedBetti:
    """Exact ``beta_{i,j}(A/I) = dim Tor_i(A/I, K)_j`` via Koszul homology.

    The Koszul complex on ``x1..xn`` tensored with A/I is split by
    multidegree; only multidegrees dividing ``lcm(G(I))`` can carry homology.
    Ranks are exact over Q unless ``modulus`` selects a prime field.
    """
    lcm = I.lcm().exponents
    if j_max is None:
        j_max = sum(lcm)
    size = 1
    for a in lcm:
        size *= a + 1
    if size > MULTIDEGREE_LIMIT:
        raise GuardrailError(f"{size} multidegrees below lcm exceed the limit {MULTIDEGREE_LIMIT}")
    entries = {(0, 0): 1}
    for alpha in product(*(range(a + 1) for a in lcm)):
        j = sum(alpha)
        # outside I the complex is a full exterior complex, exact unless alpha = 0
        if j == 0 or j > j_max or Monomial(alpha) not in I:
            continue
        for i, v in _multidegree_betti(I, alpha, modulus, column_limit).items():
            entries[i, j] = entries.get((i, j), 0) + v
    return GradedBetti(I.n, entries)


def depth_any(I: MonomialIdeal, method: str = "auto") -> int:
    """``n - proj dim A/I`` by Auslander-Buchsbaum; Eliahou-Kervaire when stable."""
    if method == "ek" or (method == "auto" and is_stable(I)):
        return I.n - proj_dim_stable(I)
    if method not in ("auto", "koszul"):
        raise ValueError(f"unknown method {method!r}")
    return koszul_betti(I).depth
