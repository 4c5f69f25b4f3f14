"""
Finite Weyl groups as enumerated multiplication tables.

Elements are integer handles into a table built once by breadth-first
enumeration.  Handles are numbered by (length, ShortLex reduced word), so
handle 0 is the identity and comparing handles compares ShortLex order.

>>> W = WeylGroup.from_type("A3")
>>> W.order
24
>>> W.word(W.element([2, 1, 2]))
(1, 2, 1)
"""

from __future__ import annotations

import itertools
import math
import re
from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Elt = int
Word = tuple[int, ...]
Subset = frozenset  # frozenset[int] of 1-based generator labels

DEFAULT_CAP = 10**6
FULL_TABLE_LIMIT = 5000

_COMPONENT = re.compile(r"\s*([A-Ga-g])\s*(\d+)\s*$")


class CoxeterError(ValueError):
    """Invalid Cartan type, Coxeter matrix, word or automorphism."""


class GroupTooLarge(CoxeterError):
    pass


def _cartan_component(series: str, n: int) -> list[list[int]]:
    """Cartan matrix for one irreducible type (Bourbaki labelling)."""
    series = series.upper()
    ok = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "F": n == 4,
        "G": n == 2,
    }
    if not ok.get(series, False):
        raise CoxeterError(f"unsupported Cartan type {series}{n}")
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        A[i][j], A[j][i] = a_ij, a_ji

    if series == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif series == "G":
        link(0, 1, -1, -3)
    else:
        for i in range(n - 1):
            link(i, i + 1)
        if series == "B":
            link(n - 2, n - 1, -2, -1)
        elif series == "C":
            link(n - 2, n - 1, -1, -2)
        elif series == "F":
            link(1, 2, -2, -1)
    return A


def _component_order(series: str, n: int) -> int:
    series = series.upper()
    if series == "A":
        return math.factorial(n + 1)
    if series in "BC":
        return 2**n * math.factorial(n)
    if series == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"F": 1152, "G": 12}[series]


_M_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}
_PRODUCT_FROM_M = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}


@dataclass(frozen=True)
class CoxeterDatum:
    """A Cartan type together with its Coxeter matrix.

    Products of irreducible types are written ``A1xA2``; generator labels
    run consecutively through the factors.
    """

    cartan_type: str
    cartan_matrix: tuple[tuple[int, ...], ...]
    expected_order: int | None = None

    @classmethod
    def from_type(cls, name: str) -> CoxeterDatum:
        parts = re.split(r"[x×*]", name.strip())
        blocks, order = [], 1
        for part in parts:
            m = _COMPONENT.match(part)
            if not m:
                raise CoxeterError(f"cannot parse Cartan type {name!r}")
            series, n = m.group(1).upper(), int(m.group(2))
            blocks.append(_cartan_component(series, n))
            order *= _component_order(series, n)
        rank = sum(len(b) for b in blocks)
        A = [[0] * rank for _ in range(rank)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                A[off + i][off : off + len(b)] = row
            off += len(b)
        label = "x".join(p.strip().upper() for p in parts)
        return cls(label, tuple(map(tuple, A)), order)

    @classmethod
    def from_coxeter_matrix(cls, m: Sequence[Sequence[int]], name: str = "custom") -> CoxeterDatum:
        """Realize a crystallographic Coxeter matrix by some Cartan matrix."""
        n = len(m)
        for i in range(n):
            if len(m[i]) != n:
                raise CoxeterError("Coxeter matrix is not square")
            if m[i][i] != 1:
                raise CoxeterError(f"m({i + 1},{i + 1}) must be 1")
            for j in range(n):
                if i != j and (m[i][j] != m[j][i] or m[i][j] not in _PRODUCT_FROM_M):
                    raise CoxeterError(f"invalid entry m({i + 1},{j + 1})={m[i][j]}")
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            A[i][j], A[j][i] = _PRODUCT_FROM_M[m[i][j]]
        return cls(name, tuple(map(tuple, A)), None)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        A = self.cartan_matrix
        return tuple(
            tuple(1 if i == j else _M_FROM_PRODUCT[A[i][j] * A[j][i]] for j in range(self.rank))
            for i in range(self.rank)
        )

    @property
    def generators(self) -> Word:
        return tuple(range(1, self.rank + 1))


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of the simple reflections preserving the Coxeter matrix.

    ``image[i - 1]`` is the label that generator ``i`` is sent to.
    """

    image: tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> DiagramAutomorphism:
        return cls(tuple(range(1, rank + 1)))

    @property
    def is_identity(self) -> bool:
        return all(i == t for i, t in enumerate(self.image, 1))

    def __call__(self, s: int) -> int:
        return self.image[s - 1]

    def on_subset(self, J: Iterable[int]) -> Subset:
        return frozenset(self.image[s - 1] for s in J)

    def inverse(self) -> DiagramAutomorphism:
        inv = [0] * len(self.image)
        for i, t in enumerate(self.image, 1):
            inv[t - 1] = i
        return DiagramAutomorphism(tuple(inv))

    def __str__(self) -> str:
        if self.is_identity:
            return "id"
        return ",".join(f"{i}:{t}" for i, t in enumerate(self.image, 1))


class WeylGroup:
    """An enumerated finite Weyl group.

    Construction realizes W as the orbit of a regular dominant weight under
    the simple reflections of a Cartan matrix; the orbit map is a bijection
    for finite types and the cap stops runaway enumeration otherwise.
    """

    def __init__(self, datum: CoxeterDatum, cap: int = DEFAULT_CAP):
        self.datum = datum
        self.rank = n = datum.rank
        A = datum.cartan_matrix
        # column i of A is alpha_i in fundamental-weight coordinates
        alpha = [tuple(A[k][i] for k in range(n)) for i in range(n)]

        start = (1,) * n
        index = {start: 0}
        vecs = [start]
        depth = [0]
        lm: list[list[int]] = [[] for _ in range(n)]
        queue = deque([0])
        while queue:
            t = queue.popleft()
            v = vecs[t]
            for i in range(n):
                c = v[i]
                nv = tuple(v[k] - c * alpha[i][k] for k in range(n))
                u = index.get(nv)
                if u is None:
                    u = index[nv] = len(vecs)
                    if u >= cap:
                        raise GroupTooLarge(f"{datum.cartan_type}: more than {cap} elements")
                    vecs.append(nv)
                    depth.append(depth[t] + 1)
                    queue.append(u)
                lm[i].append(u)
        N = len(vecs)
        if datum.expected_order is not None and N != datum.expected_order:
            raise CoxeterError(f"enumerated {N} elements, expected {datum.expected_order}")

        # ShortLex-least reduced word: strip the least left descent.
        # A negative coordinate i of w(rho) means s_i is a left descent.
        words: list[Word] = [()] * N
        for t in range(1, N):
            v = vecs[t]
            s = next(i for i in range(n) if v[i] < 0)
            words[t] = (s + 1,) + words[lm[s][t]]
        order = sorted(range(N), key=lambda t: (depth[t], words[t]))
        new = [0] * N
        for h, t in enumerate(order):
            new[t] = h

        self.order = N
        self._words = [words[t] for t in order]
        self._length = array("i", (depth[t] for t in order))
        self._lmul = [array("i", (new[lm[i][t]] for t in order)) for i in range(n)]
        self._word_index = {w: h for h, w in enumerate(self._words)}

        inv = array("i", [0]) * N
        for h, w in enumerate(self._words):
            x = 0
            for s in w:
                x = self._lmul[s - 1][x]
            inv[h] = x
        self._inv = inv
        self._rmul = [array("i", (inv[self._lmul[i][inv[h]]] for h in range(N))) for i in range(n)]

        dl = array("i", [0]) * N
        dr = array("i", [0]) * N
        ln = self._length
        for i in range(n):
            bit = 1 << i
            L, R = self._lmul[i], self._rmul[i]
            for h in range(N):
                if ln[L[h]] < ln[h]:
                    dl[h] |= bit
                if ln[R[h]] < ln[h]:
                    dr[h] |= bit
        self._dl, self._dr = dl, dr
        self.gen = {i + 1: self._lmul[i][0] for i in range(n)}
        self._simple = {h: s for s, h in self.gen.items()}
        self._auto_tables: dict[tuple[int, ...], array] = {}
        self._full: list[array] | None = None

    @classmethod
    def from_type(cls, name: str, cap: int = DEFAULT_CAP) -> WeylGroup:
        return cls(CoxeterDatum.from_type(name), cap)

    def __repr__(self) -> str:
        return f"WeylGroup({self.datum.cartan_type!r}, order={self.order})"

    # -- basic arithmetic ---------------------------------------------------

    identity: Elt = 0

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def S(self) -> Subset:
        return frozenset(range(1, self.rank + 1))

    def length(self, w: Elt) -> int:
        return self._length[w]

    def lmul(self, s: int, w: Elt) -> Elt:
        """s_s * w for a generator label s."""
        return self._lmul[s - 1][w]

    def rmul(self, w: Elt, s: int) -> Elt:
        """w * s_s for a generator label s."""
        return self._rmul[s - 1][w]

    def inverse(self, w: Elt) -> Elt:
        return self._inv[w]

    def multiply(self, a: Elt, b: Elt) -> Elt:
        if self._full is None and self.order <= FULL_TABLE_LIMIT:
            self._build_full_table()
        if self._full is not None:
            return self._full[a][b]
        for s in self._words[b]:
            a = self._rmul[s - 1][a]
        return a

    mul = multiply

    def prod(self, *elts: Elt) -> Elt:
        x = 0
        for e in elts:
            x = self.multiply(x, e)
        return x

    def _build_full_table(self) -> None:
        import numpy as np

        N = self.order
        T = np.empty((N, N), dtype=np.int32)
        T[:, 0] = np.arange(N)
        R = [np.frombuffer(r, dtype=np.int32) for r in self._rmul]
        for b in range(1, N):
            w = self._words[b]
            T[:, b] = R[w[-1] - 1][T[:, self._word_index[w[:-1]]]]
        self._full = [array("i", row.tolist()) for row in T]

    def conj(self, x: Elt, w: Elt) -> Elt:
        """x w x^-1."""
        return self.multiply(self.multiply(x, w), self._inv[x])

    # -- words ----------------------------------------------------------------

    def element(self, word: Iterable[int]) -> Elt:
        x = 0
        for s in word:
            if not isinstance(s, int) or not 1 <= s <= self.rank:
                raise CoxeterError(f"letter {s!r} out of range 1..{self.rank}")
            x = self._rmul[s - 1][x]
        return x

    element_of = element

    def word(self, w: Elt) -> Word:
        """ShortLex-least reduced word."""
        return self._words[w]

    word_of = word

    def handle_of_word(self, word: Word) -> Elt:
        """Handle from an already ShortLex-normal word (KeyError otherwise)."""
        return self._word_index[tuple(word)]

    def longest(self) -> Elt:
        return self.order - 1

    # -- descents and simple reflections ------------------------------------

    def left_descent_mask(self, w: Elt) -> int:
        return self._dl[w]

    def right_descent_mask(self, w: Elt) -> int:
        return self._dr[w]

    def descents(self, w: Elt, side: str = "left") -> Subset:
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        m = self._dl[w] if side == "left" else self._dr[w]
        return frozenset(i + 1 for i in range(self.rank) if m >> i & 1)

    def simple_label(self, w: Elt) -> int | None:
        """The label s if w is the simple reflection s_s, else None."""
        return self._simple.get(w)

    # -- Bruhat order ---------------------------------------------------------

    def bruhat_leq(self, a: Elt, b: Elt) -> bool:
        ln, dl = self._length, self._dl
        while True:
            if a == 0:
                return True
            if ln[a] > ln[b]:
                return False
            if a == b:
                return True
            m = dl[b]
            i = (m & -m).bit_length() - 1
            L = self._lmul[i]
            if dl[a] >> i & 1:
                a = L[a]
            b = L[b]

    # -- diagram automorphisms ----------------------------------------------

    def automorphism(self, image: Sequence[int]) -> DiagramAutomorphism:
        image = tuple(image)
        if sorted(image) != list(range(1, self.rank + 1)):
            raise CoxeterError(f"{image} is not a permutation of 1..{self.rank}")
        m = self.datum.coxeter_matrix
        for i in range(self.rank):
            for j in range(self.rank):
                if m[image[i] - 1][image[j] - 1] != m[i][j]:
                    raise CoxeterError(f"{image} does not preserve the Coxeter matrix")
        return DiagramAutomorphism(image)

    def identity_automorphism(self) -> DiagramAutomorphism:
        return DiagramAutomorphism.identity(self.rank)

    @cached_property
    def automorphisms(self) -> tuple[DiagramAutomorphism, ...]:
        """All diagram automorphisms, identity first."""
        m = self.datum.coxeter_matrix
        out = []
        for p in itertools.permutations(range(1, self.rank + 1)):
            if all(m[p[i] - 1][p[j] - 1] == m[i][j] for i in range(self.rank) for j in range(i)):
                out.append(DiagramAutomorphism(p))
        return tuple(out)

    def _delta_table(self, delta: DiagramAutomorphism) -> array:
        tab = self._auto_tables.get(delta.image)
        if tab is None:
            if len(delta.image) != self.rank:
                raise CoxeterError("automorphism rank mismatch")
            tab = array("i", [0]) * self.order
            # delta(s w) = delta(s) delta(w); handles are length-sorted
            for h in range(1, self.order):
                s = self._words[h][0]
                tab[h] = self._lmul[delta(s) - 1][tab[self._lmul[s - 1][h]]]
            self._auto_tables[delta.image] = tab
        return tab

    def apply_automorphism(self, delta: DiagramAutomorphism, w: Elt) -> Elt:
        return self._delta_table(delta)[w]

    def twisted_conjugate(self, x: Elt, w: Elt, delta: DiagramAutomorphism) -> Elt:
        """x w delta(x)^-1."""
        dx = self._delta_table(delta)[x]
        return self.multiply(self.multiply(x, w), self._inv[dx])


# -- text formats -------------------------------------------------------------


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse ``"1,2,1"``; ``""`` and ``"e"`` are the empty word."""
    text = text.strip()
    if text in ("", "e", "1_W", "id"):
        return ()
    out = []
    pos = 0
    for tok in text.split(","):
        t = tok.strip()
        if not t.isdigit():
            raise CoxeterError(f"invalid letter {t!r} at position {pos} in word {text!r}")
        s = int(t)
        if s < 1 or (rank is not None and s > rank):
            raise CoxeterError(f"letter {s} at position {pos} out of range 1..{rank}")
        out.append(s)
        pos += 1
    return tuple(out)


def format_word(word: Word) -> str:
    return ",".join(map(str, word))


def subscript_label(word: Word) -> str:
    """``s_{123}`` style label; the identity prints as ``1``."""
    if not word:
        return "1"
    sep = "" if all(s < 10 for s in word) else ","
    return "s_{" + sep.join(map(str, word)) + "}"


def parse_subset(text: str, rank: int | None = None) -> Subset:
    text = text.strip()
    if text in ("", "∅", "empty", "none", "{}"):
        return frozenset()
    out = set()
    for pos, tok in enumerate(text.strip("{}").split(",")):
        t = tok.strip()
        if not t.isdigit() or int(t) < 1 or (rank is not None and int(t) > rank):
            raise CoxeterError(f"invalid label {t!r} at position {pos} in subset {text!r}")
        out.add(int(t))
    return frozenset(out)


def parse_automorphism(text: str, W: WeylGroup) -> DiagramAutomorphism:
    """``"id"`` or a map ``"1:3,2:2,3:1"`` (unlisted labels are fixed)."""
    text = text.strip()
    if text in ("", "id"):
        return W.identity_automorphism()
    image = list(range(1, W.rank + 1))
    for pos, tok in enumerate(text.split(",")):
        a, sep, b = tok.partition(":")
        if not sep or not a.strip().isdigit() or not b.strip().isdigit():
            raise CoxeterError(f"invalid map entry {tok!r} at position {pos} in {text!r}")
        a, b = int(a), int(b)
        if not (1 <= a <= W.rank and 1 <= b <= W.rank):
            raise CoxeterError(f"label out of range at position {pos} in {text!r}")
        image[a - 1] = b
    return W.automorphism(image)


def subset_mask(J: Iterable[int]) -> int:
    m = 0
    for s in J:
        m |= 1 << (s - 1)
    return m
