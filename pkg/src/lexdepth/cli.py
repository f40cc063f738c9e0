"""Command-line interface.

Exit status: 0 success, 1 domain rejection, 2 malformed input, 3 guardrail.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import depthset, hilbert, lex, resolution
from .errors import DomainError, GuardrailError
from .monomial import MonomialIdeal, minimalize, parse_monomial
from .numseq import OSequence, Tail, is_o_sequence, parse_values


class InputError(ValueError):
    pass


def read_ideal(path: str) -> MonomialIdeal:
    """Ideal file: ``n=<N>`` on the first content line, then one generator per line."""
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read ideal file {path}: {exc}") from exc
    content = [ln.split("#", 1)[0].strip() for ln in lines]
    content = [ln for ln in content if ln]
    if not content or not content[0].replace(" ", "").startswith("n="):
        raise InputError(f"{path}: first line must be n=<N>")
    try:
        n = int(content[0].replace(" ", "")[2:])
        gens = [parse_monomial(ln, n) for ln in content[1:]]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return minimalize(gens, n)


def format_ideal(I: MonomialIdeal) -> str:
    return f"n={I.n}\n" + "".join(f"{g}\n" for g in I.gens)


def _oseq(args) -> OSequence:
    if args.n is None:
        raise InputError("--n is required")
    if (args.h is None) == (args.hfile is None):
        raise InputError("give exactly one of --h and --hfile")
    text = args.h
    if args.hfile is not None:
        try:
            with open(args.hfile) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.hfile}: {exc}") from exc
    try:
        values = parse_values(text)
    except ValueError as exc:
        raise InputError(f"malformed Hilbert function: {exc}") from exc
    return OSequence(args.n, values, Tail(args.tail))


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _write_out(args, I: MonomialIdeal) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(format_ideal(I))


def cmd_check_oseq(args) -> int:
    H = _oseq(args)
    chk = is_o_sequence(H)
    if chk:
        _emit(args, "PASS", {"passes": True, "first_violation": None})
        return 0
    v = chk.violation
    _emit(args, f"FAIL at q={v.q}: {v.describe()}",
          {"passes": False, "first_violation": {"kind": v.kind, "q": v.q, "value": v.value, "bound": v.bound}})
    return 1


def cmd_lexify(args) -> int:
    L = lex.lexify(_oseq(args))
    _write_out(args, L)
    text = "".join(f"{g}\n" for g in L.gens) + f"delta={len(L.gens)}\n"
    _emit(args, text, {"n": L.n, "generators": [str(g) for g in L.gens], "delta": len(L.gens)})
    return 0


def cmd_classify(args) -> int:
    c = depthset.classify(_oseq(args))
    _emit(args, str(c), c.as_dict())
    return 0


def cmd_depth_set(args) -> int:
    H = _oseq(args)
    if args.json:
        _emit(args, "", depthset.report(H))
        return 0
    ds = depthset.depth_set(H)
    lines = [str(ds)]
    if args.verbose:
        for s in depthset.differential_scan(H):
            status = "pass" if s.passes else f"fail: {s.violation.describe()}"
            lines.append(f"p={s.p} {status} literal={'pass' if s.literal else 'fail'}")
    _emit(args, "\n".join(lines), None)
    return 0


def cmd_witness(args) -> int:
    W = depthset.witness_ideal(_oseq(args), args.depth)
    _write_out(args, W)
    _emit(args, "".join(f"{g}\n" for g in W.gens) + f"delta={len(W.gens)}\n",
          {"n": W.n, "depth": args.depth, "generators": [str(g) for g in W.gens]})
    return 0


def cmd_hilbert(args) -> int:
    I = read_ideal(args.ideal)
    values = [hilbert.hilbert_function(I, q) for q in range(args.q + 1)]
    _emit(args, ",".join(map(str, values)), {"values": values})
    return 0


def cmd_series(args) -> int:
    I = read_ideal(args.ideal)
    K = hilbert.k_polynomial(I, split=True)
    reduced, d = hilbert.hilbert_series(I, split=True)
    text = (f"K={','.join(map(str, K.coefficients))}\n"
            f"numerator={','.join(map(str, reduced.coefficients))}\n"
            f"dim={d}\n")
    _emit(args, text, {"k_polynomial": list(K.coefficients), "numerator": list(reduced.coefficients), "dim": d})
    return 0


def cmd_dim(args) -> int:
    d = hilbert.krull_dim(read_ideal(args.ideal), split=True)
    _emit(args, str(d), {"dim": d})
    return 0


def cmd_betti(args) -> int:
    I = read_ideal(args.ideal)
    B = resolution.ek_betti(I) if args.method == "ek" else resolution.koszul_betti(I)
    if args.json:
        print(B.to_json())
    else:
        sys.stdout.write(B.table() + f"proj_dim={B.proj_dim} depth={B.depth}\n")
    return 0


def cmd_explore(args) -> int:
    rep = depthset.explore(_oseq(args), args.degcap, node_limit=args.limit)
    print(rep.to_json())
    return 0 if rep.complete else 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lexdepth", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, hseq=False, ideal=False, out=False):
        p = sub.add_parser(name)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--verbose", action="store_true")
        if hseq:
            p.add_argument("--n", type=int)
            p.add_argument("--h", help="comma-separated values h(0),h(1),...")
            p.add_argument("--hfile")
            p.add_argument("--tail", choices=[t.value for t in Tail], default=Tail.POLYNOMIAL.value)
        if ideal:
            p.add_argument("--ideal", required=True)
        if out:
            p.add_argument("--out", help="also write the ideal to this file")
        p.set_defaults(func=func)
        return p

    add("check-oseq", cmd_check_oseq, hseq=True)
    add("lexify", cmd_lexify, hseq=True, out=True)
    add("classify", cmd_classify, hseq=True)
    add("depth-set", cmd_depth_set, hseq=True)
    add("witness", cmd_witness, hseq=True, out=True).add_argument("--depth", type=int, required=True)
    add("hilbert", cmd_hilbert, ideal=True).add_argument("--q", type=int, required=True)
    add("series", cmd_series, ideal=True)
    add("dim", cmd_dim, ideal=True)
    add("betti", cmd_betti, ideal=True).add_argument("--method", choices=["ek", "koszul"], default="koszul")
    p = add("explore", cmd_explore, hseq=True)
    p.add_argument("--degcap", type=int, required=True)
    p.add_argument("--limit", type=int, default=depthset.NODE_LIMIT)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardrailError as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return 3


run = main

if __name__ == "__main__":
    sys.exit(main())
