import random
from itertools import combinations_with_replacement

import pytest

from lexdepth.errors import DomainError
from lexdepth.hilbert import hilbert_function
from lexdepth.lex import (
    greedy_next_generator,
    is_lexsegment,
    is_universal_lex,
    lexify,
    lexify_by_enumeration,
    universal_lex_from_degrees,
    universal_lex_greedy,
)
from lexdepth.monomial import (
    MonomialIdeal,
    count_monomials,
    ideal,
    is_stable,
    lex_compare,
    minimalize,
    monomials_of_degree,
    parse_monomial,
)
from lexdepth.numseq import OSequence, Tail
from lexdepth.sampling import hilbert_oseq, random_o_sequence

FINAL_LEX_GENS = ["x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5^2", "x2^3", "x2^2*x3", "x2^2*x4^2",
             "x2^2*x4*x5", "x2^2*x5^3", "x2*x3^4", "x2*x3^3*x4^2"]


def lexsegment_by_slices(I):
    for q in range(1, I.max_degree + 1):
        in_I = [u in I for u in monomials_of_degree(I.n, q)]
        # top segment: all True then all False
        if in_I != sorted(in_I, reverse=True):
            return False
    return True


def test_lexify_final_example():
    L = lexify(OSequence(5, (1, 5, 11, 18, 26, 35), Tail.POLYNOMIAL))
    assert [str(g) for g in L.gens] == FINAL_LEX_GENS
    # the same Hilbert function given explicitly through degree 6
    assert lexify(OSequence(5, (1, 5, 11, 18, 26, 35, 45))) == L


def test_lexify_other_examples():
    H = hilbert_oseq(ideal(4, "x1*x4", "x3*x4"))
    assert H.prefix(5) == (1, 4, 8, 13, 19)
    assert lexify(H) == ideal(4, "x1^2", "x1*x2")
    for n in range(1, 5):
        assert lexify(OSequence(n, (1,))).is_zero


def test_lexify_rejects_non_o_sequence():
    with pytest.raises(DomainError) as exc:
        lexify(OSequence(2, (1, 2, 7)))
    assert exc.value.degree == 1


def test_lexify_zero_tail():
    L = lexify(OSequence(2, (1, 2, 2, 1), Tail.ZERO))
    assert L == ideal(2, "x1^2", "x1*x2^2", "x2^4")
    assert [hilbert_function(L, q) for q in range(6)] == [1, 2, 2, 1, 0, 0]


def test_lexify_round_trip_and_oracle():
    rng = random.Random(11)
    for _ in range(150):
        n, D = rng.randint(1, 5), rng.randint(0, 6)
        H = random_o_sequence(rng, n, D, rng.choice([Tail.MAX_GROWTH, Tail.ZERO]))
        L = lexify(H)
        top = H.settle_degree + 2
        assert [hilbert_function(L, q) for q in range(top)] == list(H.prefix(top))
        assert is_lexsegment(L) and is_stable(L)
        if n <= 4:
            assert lexify_by_enumeration(H) == L


def test_is_lexsegment_examples():
    assert is_lexsegment(ideal(2, "x1^2", "x1*x2^2"))
    assert not is_lexsegment(ideal(4, "x1*x4", "x3*x4"))
    assert is_lexsegment(MonomialIdeal(3, ()))


def test_is_lexsegment_agrees_with_slices():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 4)
        gens = [list(monomials_of_degree(n, d))[rng.randrange(count_monomials(n, d))]
                for d in (rng.randint(1, 3) for _ in range(rng.randint(1, 4)))]
        I = minimalize(gens, n)
        assert is_lexsegment(I) == lexsegment_by_slices(I), I


def test_universal_examples():
    assert is_universal_lex(ideal(2, "x1^2", "x1*x2^2"))
    assert not is_universal_lex(ideal(2, "x1^3", "x1^2*x2", "x1*x2^2"))
    assert is_universal_lex(ideal(4, "x1^2", "x1*x2"))
    assert is_universal_lex(MonomialIdeal(2, ()))
    # (x1^3, x1^2 x2, x1 x2^2) stops being lexsegment once x3 exists
    assert lex_compare(parse_monomial("x1*x2^2", 3), parse_monomial("x1^2*x3", 3)) == -1
    assert not is_lexsegment(ideal(2, "x1^3", "x1^2*x2", "x1*x2^2").embed(3))


def test_closed_form_examples():
    assert universal_lex_from_degrees(2, (2, 3)) == ideal(2, "x1^2", "x1*x2^2")
    assert universal_lex_from_degrees(4, (2, 2)) == ideal(4, "x1^2", "x1*x2")
    assert universal_lex_from_degrees(1, (5,)) == ideal(1, "x1^5")
    for bad in [(1, 2, 3), (3, 2), (), (0, 1)]:
        with pytest.raises(DomainError):
            universal_lex_from_degrees(2, bad)


def test_greedy_examples():
    assert greedy_next_generator(ideal(2, "x1^2"), 3) == parse_monomial("x1*x2^2", 2)
    assert greedy_next_generator(MonomialIdeal(3, ()), 2) == parse_monomial("x1^2", 3)
    # x1*x3^3 avoids both generators and beats x2^4 in lex order
    assert greedy_next_generator(ideal(4, "x1^2", "x1*x2"), 4) == parse_monomial("x1*x3^3", 4)
    assert universal_lex_from_degrees(4, (2, 2, 4)).gens[-1] == parse_monomial("x1*x3^3", 4)
    with pytest.raises(DomainError):
        greedy_next_generator(ideal(1, "x1"), 2)


def all_degree_sequences(n, top):
    for delta in range(1, n + 1):
        yield from combinations_with_replacement(range(1, top + 1), delta)


def test_closed_form_equals_greedy_and_is_universal():
    for n in range(1, 5):
        for e in all_degree_sequences(n, 6):
            U = universal_lex_from_degrees(n, e)
            assert universal_lex_greedy(n, e) == U
            assert U.degrees == e
            assert is_universal_lex(U)
            s = [e[0] - 1] + [e[k] - e[k - 1] for k in range(1, len(e))]
            for k, u in enumerate(U.gens, start=1):
                assert u.m_index == k and set(u.support) <= set(range(1, k + 1))
                assert list(u.exponents[:k]) == s[:k - 1] + [s[k - 1] + 1]


def test_extension_invariance():
    for n in range(1, 4):
        for e in all_degree_sequences(n, 3):
            U = universal_lex_from_degrees(n, e)
            for extra in (1, 2, 3):
                assert is_lexsegment(U.embed(n + extra))


def test_lexify_of_universal_is_itself():
    for n in range(1, 4):
        for e in all_degree_sequences(n, 4):
            U = universal_lex_from_degrees(n, e)
            assert lexify(hilbert_oseq(U)) == U
