import pytest

from cycshift.oracle import oracle_i_subset
from cycshift.parabolic import (
    NotSimple,
    ad_on_simples,
    bedard_sequence,
    double_min_rep,
    i_subset,
    j_infinity_oracle,
    min_rep,
    minimal_reps,
    parabolic_elements,
)

from conftest import el, wd

FIG_1_1 = ["", "1", "2", "1,2", "2,1", "2,3", "1,2,3", "1,2,1", "2,1,3", "2,1,3,2", "1,2,1,3", "1,2,1,3,2"]


def test_min_rep_trivial(A3):
    for w in A3.elements:
        assert min_rep(A3, w, ()) == w


def test_figure_representatives(A3):
    reps = {min_rep(A3, w, {3}) for w in A3.elements}
    assert reps == {el(A3, t) for t in FIG_1_1}
    assert minimal_reps(A3, {3}) == sorted(reps)


def test_small_representatives(A2, A3):
    assert [wd(A2, w) for w in minimal_reps(A2, {1})] == ["", "2", "2,1"]
    assert minimal_reps(A3, ()) == list(A3.elements)
    assert minimal_reps(A3, A3.S) == [A3.identity]


def test_double_reps(A3):
    reps = minimal_reps(A3, {1}, {3})
    assert all(not (A3.descents(w, "left") & {1}) and not (A3.descents(w, "right") & {3}) for w in reps)
    assert {double_min_rep(A3, w, {1}, {3}) for w in A3.elements} == set(reps)


def test_parabolic_elements(A3):
    assert parabolic_elements(A3, ()) == {A3.identity}
    assert parabolic_elements(A3, A3.S) == set(A3.elements)
    assert len(parabolic_elements(A3, {1, 3})) == 4


def test_ad_on_simples(A3, A4):
    idd = A3.identity_automorphism()
    assert ad_on_simples(A3, A3.identity, idd, {1, 2}) == {1, 2}
    with pytest.raises(NotSimple) as exc:
        ad_on_simples(A3, el(A3, "2"), idd, {1})
    assert exc.value.s == 1
    # oracle check: w s1 w^-1 = s3, but w s3 w^-1 is not simple
    w = el(A4, "2,1,3,2,4,3")
    assert ad_on_simples(A4, w, A4.identity_automorphism(), {1}) == {3}
    with pytest.raises(NotSimple):
        ad_on_simples(A4, w, A4.identity_automorphism(), {1, 3})


def test_i_subset_examples(A2, A3):
    idd = A3.identity_automorphism()
    assert i_subset(A3, {1, 3}, A3.identity, idd) == {1, 3}
    assert i_subset(A3, {1, 3}, el(A3, "2"), idd) == frozenset()
    assert i_subset(A2, {1}, el(A2, "2,1"), A2.identity_automorphism()) == frozenset()
    flip = A3.automorphisms[1]
    # w0 conjugates s_i to s_{4-i}; composed with the flip it fixes every label
    assert i_subset(A3, A3.S, A3.longest(), flip) == A3.S


def test_bedard_sequence(A3):
    idd = A3.identity_automorphism()
    w = el(A3, "2,1,3,2")
    assert bedard_sequence(A3, (), w, idd).steps == ((frozenset(), w),)
    tr = bedard_sequence(A3, {1, 3}, A3.identity, idd)
    assert tr.steps == ((frozenset({1, 3}), A3.identity),)
    tr = bedard_sequence(A3, {3}, w, idd)
    assert tr.limit == (oracle_i_subset(A3, {3}, w, idd), w)
    assert tr[10] == tr.limit
    with pytest.raises(ValueError):
        bedard_sequence(A3, {3}, el(A3, "3"), idd)


def test_bedard_invariants(A3, B3):
    for W in (A3, B3):
        for delta in W.automorphisms:
            for J in ({1}, {1, 2}, {2, 3}, W.S):
                for w in minimal_reps(W, J):
                    tr = bedard_sequence(W, J, w, delta)
                    for n, (Jn, wn) in enumerate(tr.steps):
                        dJ = delta.on_subset(Jn)
                        assert not (W.descents(wn, "left") & Jn) and not (W.descents(wn, "right") & dJ)
                        assert W.multiply(W.inverse(w), wn) in parabolic_elements(W, dJ)
                        if n:
                            assert Jn < tr.steps[n - 1][0]


def test_j_infinity(A3):
    idd = A3.identity_automorphism()
    assert j_infinity_oracle(A3, {1, 2}, A3.identity, idd) == parabolic_elements(A3, {1, 2})
    assert j_infinity_oracle(A3, (), el(A3, "2,1"), idd) == {A3.identity}
    for J in ({1}, {1, 3}, {1, 2}):
        for w in minimal_reps(A3, J):
            assert j_infinity_oracle(A3, J, w, idd) == parabolic_elements(A3, i_subset(A3, J, w, idd))


def test_normalizing_rep_is_left_and_right_minimal(A3, B3):
    # w in ^J W with Ad(w) delta(J) = J lies in W^{delta(J)}
    for W in (A3, B3):
        for delta in W.automorphisms:
            for J in ({1}, {2}, {1, 3}, {1, 2}):
                for w in minimal_reps(W, J):
                    if i_subset(W, J, w, delta) == frozenset(J):
                        assert not (W.descents(w, "right") & delta.on_subset(J))
