"""Which depths a graded quotient with Hilbert function H can have.

``A_H`` is ``{n - delta}`` when the lexsegment ideal of H has
``delta <= n`` generators (H critical) and ``{0, ..., b}`` otherwise, where
``b`` is the largest p whose p-th differential is again an O-sequence in
``n - p`` variables.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError
from .lex import lexify
from .monomial import MonomialIdeal, count_monomials, monomials_of_degree, shadow
from .numseq import OSequence, Violation, is_o_sequence, macaulay_bound, pth_differential, require_o_sequence
from .resolution import depth_any

# Default node budget for explore().
NODE_LIMIT = 200_000


@dataclass(frozen=True)
class Classification:
    critical: bool
    delta: int
    degrees: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.critical:
            return f"critical delta={self.delta} degrees={','.join(map(str, self.degrees))}"
        return f"noncritical delta={self.delta}"

    def as_dict(self) -> dict:
        d = {"kind": "critical" if self.critical else "noncritical", "delta": self.delta}
        if self.critical:
            d["degrees"] = list(self.degrees)
        return d


@dataclass(frozen=True)
class DepthSet:
    """Either ``{value}`` (singleton) or ``{0, ..., value}`` (range)."""

    singleton: bool
    value: int

    def members(self) -> tuple[int, ...]:
        return (self.value,) if self.singleton else tuple(range(self.value + 1))

    def __contains__(self, r: int) -> bool:
        return r in self.members()

    def __str__(self) -> str:
        return f"{{{self.value}}}" if self.singleton else f"{{0..{self.value}}}"

    def as_dict(self) -> dict:
        return {"kind": "singleton" if self.singleton else "range", "value": self.value,
                "members": list(self.members())}


def classify(H: OSequence) -> Classification:
    L = lexify(H)
    if len(L.gens) <= H.n:
        return Classification(True, len(L.gens), L.degrees)
    return Classification(False, len(L.gens))


@dataclass(frozen=True)
class PStep:
    p: int
    passes: bool
    violation: Violation | None
    literal: bool

    def as_dict(self) -> dict:
        v = self.violation
        return {"p": self.p, "passes": self.passes,
                "first_violation": None if v is None else {"kind": v.kind, "q": v.q, "value": v.value,
                                                           "bound": v.bound, "text": v.describe()},
                "literal_growth_only": self.literal}


def _literal_growth(dH: OSequence) -> bool:
    # Growth bound alone on a finite horizon, skipping degrees with negative value.
    top = max(dH.D, dH.poly_from) + dH.n + 2
    h = dH.prefix(top + 2)
    return all(h[q] < 0 or h[q + 1] <= macaulay_bound(h[q], q) for q in range(1, top + 1))


def differential_scan(H: OSequence) -> list[PStep]:
    """O-sequence test of every differential ``Delta^p(H)``, p = 0..n."""
    require_o_sequence(H)
    steps = []
    dH = H
    for p in range(H.n + 1):
        if p:
            dH = pth_differential(dH, 1)
        chk = is_o_sequence(dH)
        steps.append(PStep(p, chk.ok, chk.violation, _literal_growth(dH)))
    return steps


def max_depth(H: OSequence) -> int:
    """Largest p with ``Delta^p(H)`` an O-sequence in ``n - p`` variables."""
    steps = differential_scan(H)
    for s in reversed(steps):
        if s.passes:
            return s.p
    raise AssertionError("Delta^0(H) = H must pass")  # require_o_sequence already ran


def depth_set(H: OSequence) -> DepthSet:
    c = classify(H)
    b = max_depth(H)
    if c.critical:
        if b != H.n - c.delta:
            raise AssertionError(f"critical H with delta={c.delta} but max depth {b} != {H.n - c.delta}")
        return DepthSet(True, b)
    return DepthSet(False, b)


def witness_ideal(H: OSequence, r: int, ds: DepthSet | None = None) -> MonomialIdeal:
    """Lexsegment ideal of ``Delta^r(H)`` in ``n - r`` variables, embedded in n.

    The last r variables form a regular sequence on the quotient, so its depth
    is ``r + max(n - r - |G|, 0)``, which equals r for every r in ``A_H``.
    """
    ds = depth_set(H) if ds is None else ds
    if r not in ds:
        raise DomainError(f"depth {r} is not attainable: A_H = {ds}")
    J = lexify(pth_differential(H, r))
    return J.embed(H.n)


def report(H: OSequence) -> dict:
    """Depth-set report with per-p diagnostics and one witness per attainable depth."""
    c = classify(H)
    ds = depth_set(H)
    steps = differential_scan(H)
    witnesses = [{"r": r, "generators": [str(g) for g in witness_ideal(H, r, ds).gens]}
                 for r in ds.members()]
    return {"classification": c.as_dict(), "depth_set": ds.as_dict(),
            "per_p": [s.as_dict() for s in steps], "witnesses": witnesses}


@dataclass
class ExploreReport:
    classification: Classification
    depth_set: DepthSet
    observed: dict[int, int] = field(default_factory=dict)
    ideals: list[MonomialIdeal] = field(default_factory=list)
    nodes: int = 0
    complete: bool = True

    @property
    def consistent(self) -> bool:
        ok = all(d in self.depth_set for d in self.observed)
        if self.classification.critical:
            ok = ok and set(self.observed) <= {self.depth_set.value}
        return ok

    def as_dict(self) -> dict:
        return {"classification": self.classification.as_dict(),
                "depth_set": self.depth_set.as_dict(),
                "matches": sum(self.observed.values()),
                "observed_depths": {str(k): v for k, v in sorted(self.observed.items())},
                "nodes": self.nodes, "complete": self.complete, "consistent": self.consistent}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


class _Budget(Exception):
    pass


def explore(H: OSequence, degree_cap: int, node_limit: int = NODE_LIMIT, keep_ideals: bool = False) -> ExploreReport:
    """Enumerate every monomial ideal generated in degrees <= degree_cap with Hilbert function H.

    Degree slices are chosen in increasing degree: slice q must contain the
    shadow of slice q-1 and have exactly ``#monomials - h(q)`` members, so the
    free choice is which complement monomials become new generators. Past the
    cap the shadow alone must keep matching H until both grow maximally.
    """
    require_o_sequence(H)
    n = H.n
    rep = ExploreReport(classify(H), depth_set(H))
    last = max(degree_cap, H.settle_degree) + 1

    def close(slice_, q, gens):
        # no generators above the cap: shadows must match H through `last`
        cur = slice_
        for k in range(q + 1, last + 1):
            cur = shadow(cur, n) if cur else set()
            if len(cur) != count_monomials(n, k) - H[k]:
                return
        I = MonomialIdeal(n, tuple(gens))
        d = depth_any(I)
        rep.observed[d] = rep.observed.get(d, 0) + 1
        if keep_ideals:
            rep.ideals.append(I)

    def walk(slice_, q, gens):
        if q == degree_cap:
            close(slice_, q, gens)
            return
        k = q + 1
        sh = shadow(slice_, n) if slice_ else set()
        need = count_monomials(n, k) - H[k] - len(sh)
        if need < 0:
            return
        free = [u for u in monomials_of_degree(n, k) if u not in sh]
        for chosen in combinations(free, need):
            rep.nodes += 1
            if rep.nodes > node_limit:
                raise _Budget
            walk(sh | set(chosen), k, gens + list(chosen))

    try:
        walk(set(), 0, [])
    except _Budget:
        rep.complete = False
    return rep
