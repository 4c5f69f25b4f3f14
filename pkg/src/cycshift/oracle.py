"""
Brute-force reference implementations.

Nothing here calls the production algorithms; only group arithmetic from
:mod:`cycshift.coxeter` is shared.  Every function takes an optional
``timeout`` in seconds and raises :class:`OracleTimeout` when it runs over.
"""

from __future__ import annotations

import itertools
import time
from typing import Iterable

from .coxeter import DiagramAutomorphism, Elt, Subset, WeylGroup

DEFAULT_TIMEOUT = 30.0


class OracleTimeout(RuntimeError):
    pass


class _Deadline:
    def __init__(self, name: str, timeout: float | None):
        self.name = name
        self.limit = None if timeout is None else time.monotonic() + timeout
        self.timeout = timeout

    def check(self) -> None:
        if self.limit is not None and time.monotonic() > self.limit:
            raise OracleTimeout(f"{self.name} exceeded {self.timeout}s")


def _subgroup(W: WeylGroup, J: Iterable[int]) -> list[Elt]:
    """Closure of {e} under right multiplication by generators in J."""
    J = list(J)
    out = {W.identity}
    grew = True
    while grew:
        new = {W.rmul(w, s) for w in out for s in J} - out
        out |= new
        grew = bool(new)
    return sorted(out)


def _is_simple(W: WeylGroup, x: Elt) -> int | None:
    for s, h in W.gen.items():
        if h == x:
            return s
    return None


def _normalizes(W: WeylGroup, w: Elt, delta: DiagramAutomorphism, K: Iterable[int]) -> bool:
    K = set(K)
    img = set()
    for s in K:
        t = _is_simple(W, W.prod(w, W.gen[delta(s)], W.inverse(w)))
        if t is None:
            return False
        img.add(t)
    return img == K


def oracle_i_subset(W: WeylGroup, J: Iterable[int], w: Elt, delta: DiagramAutomorphism, timeout: float | None = DEFAULT_TIMEOUT) -> Subset:
    dl = _Deadline("oracle_i_subset", timeout)
    J = sorted(J)
    for r in range(len(J), -1, -1):
        for K in itertools.combinations(J, r):
            dl.check()
            if _normalizes(W, w, delta, K):
                return frozenset(K)
    raise AssertionError("the empty set always qualifies")


def oracle_orbits(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, timeout: float | None = DEFAULT_TIMEOUT) -> list[frozenset[Elt]]:
    """Partition of W into W_J delta-conjugation orbits, by union-find over all pairs."""
    dl = _Deadline("oracle_orbits", timeout)
    parent = list(W.elements)

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in _subgroup(W, J):
        dl.check()
        dxinv = W.inverse(W.apply_automorphism(delta, x))
        for w in W.elements:
            v = W.prod(x, w, dxinv)
            a, b = find(w), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, set[Elt]] = {}
    for w in W.elements:
        classes.setdefault(find(w), set()).add(w)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def oracle_shift_class(W: WeylGroup, w: Elt, delta: DiagramAutomorphism, timeout: float | None = DEFAULT_TIMEOUT) -> frozenset[Elt]:
    """Closure under v = x y -> y delta(x) with l(v) = l(x) + l(y) = l(y delta(x)).

    Every x in W is tried literally at every vertex.
    """
    dl = _Deadline("oracle_shift_class", timeout)
    lw = W.length(w)
    seen = {w}
    todo = [w]
    while todo:
        v = todo.pop()
        for x in W.elements:
            if x % 256 == 0:
                dl.check()
            y = W.multiply(W.inverse(x), v)
            if W.length(x) + W.length(y) != lw:
                continue
            u = W.multiply(y, W.apply_automorphism(delta, x))
            if W.length(u) == lw and u not in seen:
                seen.add(u)
                todo.append(u)
    return frozenset(seen)


def subword_bruhat_leq(W: WeylGroup, a: Elt, b: Elt) -> bool:
    """a <= b iff a is a product of a subword of a fixed reduced word of b."""
    word = W.word(b)
    products = {W.identity}
    for s in word:
        products |= {W.rmul(p, s) for p in products}
    return a in products


def oracle_partial_leq(
    W: WeylGroup, wp: Elt, w: Elt, J: Iterable[int], delta: DiagramAutomorphism, timeout: float | None = DEFAULT_TIMEOUT
) -> bool:
    dl = _Deadline("oracle_partial_leq", timeout)
    for u in _subgroup(W, J):
        dl.check()
        v = W.prod(u, wp, W.inverse(W.apply_automorphism(delta, u)))
        if subword_bruhat_leq(W, v, w):
            return True
    return False


def _ad_inv_simple(W: WeylGroup, x: Elt, K: Iterable[int]) -> Subset | None:
    xi = W.inverse(x)
    out = set()
    for s in K:
        t = _is_simple(W, W.prod(xi, W.gen[s], x))
        if t is None:
            return None
        out.add(t)
    return frozenset(out)


def oracle_cyc_triples(
    W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, w: Elt, K: Iterable[int], timeout: float | None = DEFAULT_TIMEOUT
) -> list[tuple[Elt, Elt, Elt]]:
    """All (w', x, u) with w' in ^J W, x in W_J ∩ W^I, u in W_I, x^-1 w delta(x) = u w'
    and Ad(x)^-1 K ⊆ J, where I = I(J, w', delta)."""
    dl = _Deadline("oracle_cyc_triples", timeout)
    J = frozenset(J)
    WJ = _subgroup(W, J)
    out = []
    for wp in W.elements:
        if any(W.length(W.lmul(s, wp)) < W.length(wp) for s in J):
            continue
        dl.check()
        I = oracle_i_subset(W, J, wp, delta, timeout)
        WI = set(_subgroup(W, I))
        for x in WJ:
            if any(W.length(W.rmul(x, s)) < W.length(x) for s in I):
                continue
            v = W.prod(W.inverse(x), w, W.apply_automorphism(delta, x))
            u = W.multiply(v, W.inverse(wp))
            if u not in WI:
                continue
            K2 = _ad_inv_simple(W, x, K)
            if K2 is not None and K2 <= J:
                out.append((wp, x, u))
    return out
