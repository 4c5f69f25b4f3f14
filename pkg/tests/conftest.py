import hypothesis
import pytest

from cycshift.coxeter import format_word, parse_word
from cycshift.formats import group

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None, derandomize=True)
hypothesis.settings.load_profile("ci")


def el(W, text):
    return W.element(parse_word(text, W.rank))


def wd(W, w):
    return format_word(W.word(w))


@pytest.fixture(scope="session")
def A1():
    return group("A1")


@pytest.fixture(scope="session")
def A2():
    return group("A2")


@pytest.fixture(scope="session")
def A3():
    return group("A3")


@pytest.fixture(scope="session")
def A4():
    return group("A4")


@pytest.fixture(scope="session")
def B2():
    return group("B2")


@pytest.fixture(scope="session")
def B3():
    return group("B3")


@pytest.fixture(scope="session")
def G2():
    return group("G2")
