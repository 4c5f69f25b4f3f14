"""
delta-conjugacy graphs, the pre-order ->_{J,delta} and cyclic shift classes.

An edge w -s-> w' exists for s in J when w' = s w delta(s) and
l(w') <= l(w).  The same length condition is kept for proper subsets J.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .coxeter import DiagramAutomorphism, Elt, Subset, WeylGroup


def shift_target(W: WeylGroup, w: Elt, s: int, delta: DiagramAutomorphism) -> Elt:
    """s w delta(s)."""
    return W.rmul(W.lmul(s, w), delta(s))


@dataclass
class ShiftGraph:
    W: WeylGroup
    delta: DiagramAutomorphism
    J: Subset
    edges: list[tuple[Elt, int, Elt]]
    out: list[list[tuple[int, Elt]]] = field(repr=False)

    def successors(self, w: Elt) -> list[tuple[int, Elt]]:
        return self.out[w]

    def reaches(self, a: Elt, b: Elt) -> bool:
        seen = {a}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                return True
            for _, u in self.out[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return False

    def reachable(self, a: Elt) -> set[Elt]:
        seen = {a}
        queue = deque([a])
        while queue:
            for _, u in self.out[queue.popleft()]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen

    def _components(self, connection: str) -> list[int]:
        N = self.W.order
        src = np.fromiter((e[0] for e in self.edges), dtype=np.int64, count=len(self.edges))
        dst = np.fromiter((e[2] for e in self.edges), dtype=np.int64, count=len(self.edges))
        A = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N))
        _, raw = connected_components(A, directed=True, connection=connection)
        # renumber by least contained vertex
        relabel: dict[int, int] = {}
        return [relabel.setdefault(int(c), len(relabel)) for c in raw]

    @property
    def scc_labels(self) -> list[int]:
        if not hasattr(self, "_scc"):
            self._scc = self._components("strong")
        return self._scc

    @property
    def weak_labels(self) -> list[int]:
        if not hasattr(self, "_weak"):
            self._weak = self._components("weak")
        return self._weak

    def sccs(self) -> list[list[Elt]]:
        out: dict[int, list[Elt]] = {}
        for v, c in enumerate(self.scc_labels):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def scc_of(self, w: Elt) -> frozenset[Elt]:
        lab = self.scc_labels
        return frozenset(v for v in self.W.elements if lab[v] == lab[w])

    def component_of(self, w: Elt) -> frozenset[Elt]:
        """Weakly connected component containing w."""
        lab = self.weak_labels
        return frozenset(v for v in self.W.elements if lab[v] == lab[w])


def build_graph(W: WeylGroup, delta: DiagramAutomorphism, J: Iterable[int] | None = None) -> ShiftGraph:
    J = W.S if J is None else frozenset(J)
    labels = sorted(J)
    edges = []
    out: list[list[tuple[int, Elt]]] = [[] for _ in W.elements]
    for w in W.elements:
        lw = W.length(w)
        for s in labels:
            v = shift_target(W, w, s, delta)
            if W.length(v) <= lw:
                edges.append((w, s, v))
                out[w].append((s, v))
    return ShiftGraph(W, delta, J, edges, out)


def cyclic_shift_class(W: WeylGroup, w: Elt, delta: DiagramAutomorphism, J: Iterable[int] | None = None) -> frozenset[Elt]:
    """Cyc: the strongly connected component of w."""
    return build_graph(W, delta, J).scc_of(w)


def orbit(W: WeylGroup, w: Elt, J: Iterable[int], delta: DiagramAutomorphism) -> frozenset[Elt]:
    """W_J ._delta w, closed under the generators s w delta(s)."""
    J = sorted(J)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for s in J:
                u = shift_target(W, v, s, delta)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def min_length_in_orbit(W: WeylGroup, w: Elt, J: Iterable[int], delta: DiagramAutomorphism) -> bool:
    lw = W.length(w)
    return all(W.length(v) >= lw for v in orbit(W, w, J, delta))


@dataclass(frozen=True)
class Reduction:
    path: tuple[tuple[Elt, int, Elt], ...]
    endpoint: Elt
    w_prime: Elt
    u: Elt


def _descend(W: WeylGroup, w: Elt, J: list[int], delta: DiagramAutomorphism) -> list[tuple[Elt, int, Elt]]:
    """Walk ->_{J,delta} until no length drop is reachable.

    Searches the length-preserving part of the graph breadth-first for a
    vertex with a strictly decreasing edge, taking the least label.
    """
    path: list[tuple[Elt, int, Elt]] = []
    while True:
        lw = W.length(w)
        parent: dict[Elt, tuple[Elt, int] | None] = {w: None}
        queue = deque([w])
        drop = None
        while queue and drop is None:
            v = queue.popleft()
            for s in J:
                u = shift_target(W, v, s, delta)
                if W.length(u) < lw:
                    drop = (v, s, u)
                    break
                if W.length(u) == lw and u not in parent:
                    parent[u] = (v, s)
                    queue.append(u)
        if drop is None:
            return path
        v, s, u = drop
        seg = []
        while parent[v] is not None:
            pv, ps = parent[v]
            seg.append((pv, ps, v))
            v = pv
        path.extend(reversed(seg))
        path.append(drop)
        w = u


def expand_step(W: WeylGroup, w: Elt, x: Elt, delta: DiagramAutomorphism) -> list[tuple[Elt, int, Elt]]:
    """Generator edges realizing w -> x^-1 w delta(x) along the ShortLex word of x."""
    path = []
    for s in W.word(x):
        v = shift_target(W, w, s, delta)
        path.append((w, s, v))
        w = v
    return path


def reduce_to_min(W: WeylGroup, w: Elt, J: Iterable[int], delta: DiagramAutomorphism) -> Reduction:
    """A ->_{J,delta} path from w to some u w' with w' in ^J W and u in W_{I(J,w',delta)}."""
    from .decomposition import quadruple

    labels = sorted(J)
    path = _descend(W, w, labels, delta)
    v = path[-1][2] if path else w
    q = quadruple(W, labels, delta, v)
    for n, step in enumerate(q.steps):
        path.extend(expand_step(W, q.w_twisted[n], step.x, delta))
    end = path[-1][2] if path else w
    assert end == W.multiply(q.u, q.w_prime)
    return Reduction(tuple(path), end, q.w_prime, q.u)


def is_graph_path(W: WeylGroup, path: Iterable[tuple[Elt, int, Elt]], J: Iterable[int], delta: DiagramAutomorphism) -> bool:
    J = set(J)
    prev = None
    for a, s, b in path:
        if prev is not None and a != prev:
            return False
        if s not in J or shift_target(W, a, s, delta) != b or W.length(b) > W.length(a):
            return False
        prev = b
    return True


def _prefixes(W: WeylGroup, w: Elt) -> list[Elt]:
    """All x with l(x) + l(x^-1 w) = l(w), by stripping right descents."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            m = W.right_descent_mask(v)
            while m:
                s = (m & -m).bit_length()
                m &= m - 1
                u = W.rmul(v, s)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def broue_michel_class(W: WeylGroup, w: Elt, delta: DiagramAutomorphism) -> frozenset[Elt]:
    """Closure of w under w = x y  ->  y delta(x) with lengths additive and preserved."""
    lw = W.length(w)
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for x in _prefixes(W, v):
            y = W.multiply(W.inverse(x), v)
            u = W.multiply(y, W.apply_automorphism(delta, x))
            if W.length(u) == lw and u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def broue_michel_equiv(W: WeylGroup, a: Elt, b: Elt, delta: DiagramAutomorphism) -> bool:
    if W.length(a) != W.length(b):
        return False
    return b in broue_michel_class(W, a, delta)
