"""Recompute every invariant of the five-generator ideal in five variables."""
from lexdepth.depthset import classify, depth_set, witness_ideal
from lexdepth.hilbert import hilbert_series, krull_dim
from lexdepth.lex import lexify
from lexdepth.monomial import ideal
from lexdepth.resolution import depth_lexsegment, koszul_betti
from lexdepth.sampling import hilbert_oseq


def main():
    I = ideal(5, "x1*x4", "x1*x5", "x2*x5", "x3*x5", "x2*x3*x4")
    H = hilbert_oseq(I)
    reduced, d = hilbert_series(I)
    B = koszul_betti(I)
    L = lexify(H)
    print("I       =", I)
    print("H       =", ",".join(map(str, H.prefix(10))), "...")
    print("series  = (", ",".join(map(str, reduced.coefficients)), f") / (1-t)^{d}")
    print("dim     =", krull_dim(I))
    print(B.table(), end="")
    print("depth   =", B.depth)
    print("lex     =", L)
    print("class   =", classify(H))
    print("lexdep  =", depth_lexsegment(L))
    ds = depth_set(H)
    print("A_H     =", ds)
    for r in ds.members():
        W = witness_ideal(H, r)
        print(f"witness r={r}: {W}  depth={koszul_betti(W).depth}")


if __name__ == "__main__":
    main()
