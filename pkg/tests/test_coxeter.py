import pytest

from cycshift.coxeter import (
    CoxeterDatum,
    CoxeterError,
    DiagramAutomorphism,
    GroupTooLarge,
    WeylGroup,
    subscript_label,
    parse_automorphism,
    parse_subset,
    parse_word,
)
from cycshift.formats import group
from cycshift.oracle import subword_bruhat_leq

from conftest import el, wd


@pytest.mark.parametrize(
    "name,order",
    [("A1", 2), ("A3", 24), ("A4", 120), ("G2", 12), ("B2", 8), ("B3", 48), ("C3", 48), ("D4", 192), ("F4", 1152), ("A1xA2", 12)],
)
def test_group_orders(name, order):
    W = group(name)
    assert W.order == order == W.datum.expected_order


def test_coxeter_matrix_entries():
    for name in ("A3", "B3", "G2", "F4", "D5"):
        m = CoxeterDatum.from_type(name).coxeter_matrix
        n = len(m)
        assert all(m[i][i] == 1 for i in range(n))
        assert all(m[i][j] == m[j][i] in (2, 3, 4, 6) for i in range(n) for j in range(n) if i != j)
    assert CoxeterDatum.from_type("G2").coxeter_matrix[0][1] == 6


def test_invalid_data():
    with pytest.raises(CoxeterError):
        CoxeterDatum.from_type("E9")
    with pytest.raises(CoxeterError):
        CoxeterDatum.from_coxeter_matrix([[1, 5], [5, 1]])
    with pytest.raises(CoxeterError):
        CoxeterDatum.from_coxeter_matrix([[1, 3], [2, 1]])
    with pytest.raises(GroupTooLarge):
        WeylGroup.from_type("A5", cap=100)


def test_from_coxeter_matrix_matches_type():
    W = WeylGroup(CoxeterDatum.from_coxeter_matrix([[1, 3, 2], [3, 1, 3], [2, 3, 1]]))
    assert W.order == 24


def test_numbering_is_by_length_then_shortlex(A3):
    keys = [(A3.length(w), A3.word(w)) for w in A3.elements]
    assert keys == sorted(keys)
    assert A3.word(A3.identity) == ()


def test_words(A3):
    assert el(A3, "") == el(A3, "e") == A3.identity
    assert el(A3, "1,2,1") == el(A3, "2,1,2")
    assert A3.word(el(A3, "1,2,3")) == (1, 2, 3)
    # s_{23212} as usually written; ShortLex picks 2,1,3,2,1
    assert A3.word(el(A3, "2,3,2,1,2")) == (2, 1, 3, 2, 1)
    for w in A3.elements:
        assert A3.element(A3.word(w)) == w


def test_word_parse_errors():
    with pytest.raises(CoxeterError, match="position 1"):
        parse_word("1,x", 3)
    with pytest.raises(CoxeterError, match="out of range"):
        parse_word("4", 3)
    assert parse_subset("∅") == frozenset()
    assert parse_subset("1,3", 3) == {1, 3}
    with pytest.raises(CoxeterError):
        parse_subset("0")


def test_arithmetic(A3):
    s1 = A3.gen[1]
    assert A3.multiply(s1, s1) == A3.identity
    assert A3.length(el(A3, "1,2,1,3,2")) == 5
    assert A3.length(A3.longest()) == 6
    for a in A3.elements:
        assert A3.length(A3.inverse(a)) == A3.length(a)
        assert A3.multiply(a, A3.inverse(a)) == A3.identity


def test_descents(A3):
    assert A3.descents(A3.identity) == frozenset()
    w0 = A3.longest()
    assert A3.descents(w0, "left") == A3.descents(w0, "right") == {1, 2, 3}
    # oracle: compare lengths of s*w for each s
    assert A3.descents(el(A3, "1,2,3"), "left") == {1}
    assert A3.descents(el(A3, "1,2,3"), "right") == {3}


def test_bruhat_examples(A3):
    e = A3.identity
    assert all(A3.bruhat_leq(e, w) for w in A3.elements)
    assert not A3.bruhat_leq(el(A3, "1,2,3"), el(A3, "2,1,3,2"))
    assert A3.bruhat_leq(el(A3, "1,3,2"), el(A3, "2,1,3,2"))
    assert subword_bruhat_leq(A3, el(A3, "1,3,2"), el(A3, "2,1,3,2"))


def test_automorphisms(A3, B2, G2):
    assert len(A3.automorphisms) == 2
    assert len(group("D4").automorphisms) == 6
    assert len(group("A1xA1").automorphisms) == 2
    assert len(B2.automorphisms) == 2 and len(G2.automorphisms) == 2
    flip = parse_automorphism("1:3,3:1", A3)
    assert str(flip) == "1:3,2:2,3:1"
    assert A3.apply_automorphism(flip, el(A3, "1,2,3")) == el(A3, "3,2,1")
    assert A3.apply_automorphism(flip, A3.longest()) == A3.longest()
    with pytest.raises(CoxeterError):
        parse_automorphism("1:2,2:1", A3)
    assert DiagramAutomorphism.identity(3).is_identity


def test_twisted_conjugate(A3):
    idd = A3.identity_automorphism()
    w = el(A3, "1,2,1,3,2")
    assert A3.twisted_conjugate(A3.identity, w, idd) == w
    v = A3.twisted_conjugate(A3.gen[2], w, idd)
    assert wd(A3, v) == "1,2,3"
    assert v in {el(A3, t) for t in ("1,2,3", "2,1,3", "1,3,2", "3,2,1")}


def test_conjugacy_classes_partition(A3):
    idd = A3.identity_automorphism()
    classes = {frozenset(A3.twisted_conjugate(x, w, idd) for x in A3.elements) for w in A3.elements}
    assert len(classes) == 5
    assert sum(map(len, classes)) == 24


def test_labels():
    assert subscript_label(()) == "1"
    assert subscript_label((1, 2, 3)) == "s_{123}"
