"""
Partial conjugation by W_J: orbit decomposition, the order <=_{J,delta} on
^J W, representatives for shift classes of pieces, the left-right bijection
iota and induction data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .coxeter import DiagramAutomorphism, Elt, Subset, WeylGroup, subset_mask
from .parabolic import (
    NotSimple,
    ad_intersection,
    ad_inverse,
    ad_on_simples,
    i_subset,
    in_parabolic,
    min_rep,
    minimal_reps,
    parabolic_elements,
)
from .pieces import CombinatorialPiece, ShiftStep, make_piece, shift_step
from .shiftgraph import min_length_in_orbit, shift_target


class HypothesisError(ValueError):
    """Input violates a stated precondition."""


# -- orbit decomposition ------------------------------------------------------


@dataclass(frozen=True)
class Block:
    w: Elt
    I: Subset
    orbit: frozenset[Elt]


@dataclass(frozen=True)
class PartialDecomposition:
    J: Subset
    delta: DiagramAutomorphism
    blocks: tuple[Block, ...]

    def block_of(self, v: Elt) -> Block:
        for b in self.blocks:
            if v in b.orbit:
                return b
        raise KeyError(v)


def block_orbit(W: WeylGroup, J: Iterable[int], w: Elt, I: Iterable[int], delta: DiagramAutomorphism) -> frozenset[Elt]:
    """W_J ._delta (W_I w)."""
    J = sorted(J)
    seen = {W.multiply(u, w) for u in parabolic_elements(W, I)}
    frontier = sorted(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for s in J:
                t = shift_target(W, v, s, delta)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def decompose(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism) -> PartialDecomposition:
    J = frozenset(J)
    blocks = []
    for w in minimal_reps(W, J):
        I = i_subset(W, J, w, delta)
        blocks.append(Block(w, I, block_orbit(W, J, w, I, delta)))
    return PartialDecomposition(J, delta, tuple(blocks))


def stabilizer_check(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, w: Elt) -> bool:
    """a in W_J with a b delta(a)^-1 in W_I w for some b in W_I w forces a in W_I."""
    I = i_subset(W, J, w, delta)
    WI = parabolic_elements(W, I)
    coset = {W.multiply(u, w) for u in WI}
    for a in parabolic_elements(W, J):
        if a in WI:
            continue
        if any(W.twisted_conjugate(a, b, delta) in coset for b in coset):
            return False
    return True


# -- the order <=_{J,delta} --------------------------------------------------


def partial_leq(W: WeylGroup, wp: Elt, w: Elt, J: Iterable[int], delta: DiagramAutomorphism) -> bool:
    """wp <=_{J,delta} w: some u wp delta(u)^-1 with u in W_J is Bruhat-below w."""
    if W.left_descent_mask(wp) & subset_mask(J):
        raise HypothesisError("partial_leq needs wp in ^J W")
    return any(W.bruhat_leq(W.twisted_conjugate(u, wp, delta), w) for u in sorted(parabolic_elements(W, J)))


@dataclass(frozen=True)
class Hasse:
    J: Subset
    delta: DiagramAutomorphism
    nodes: tuple[Elt, ...]
    covers: tuple[tuple[Elt, Elt, bool], ...]  # (lower, upper, is Bruhat relation)


def _cover_pairs(nodes: list[Elt], leq) -> list[tuple[Elt, Elt]]:
    n = len(nodes)
    M = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j:
                M[i, j] = leq(a, b)
    via = (M.astype(np.int32) @ M.astype(np.int32)) > 0
    C = M & ~via
    return [(nodes[i], nodes[j]) for i, j in zip(*np.nonzero(C))]


def hasse(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism) -> Hasse:
    """Cover relations of <=_{J,delta} on ^J W."""
    J = frozenset(J)
    nodes = minimal_reps(W, J)
    pairs = _cover_pairs(nodes, lambda a, b: partial_leq(W, a, b, J, delta))
    covers = sorted((a, b, W.bruhat_leq(a, b)) for a, b in pairs)
    return Hasse(J, delta, tuple(nodes), tuple(covers))


def bruhat_hasse(W: WeylGroup, nodes: Iterable[Elt]) -> list[tuple[Elt, Elt]]:
    """Covers of the Bruhat order restricted to the given elements."""
    return sorted(_cover_pairs(sorted(nodes), W.bruhat_leq))


def max_below(W: WeylGroup, w: Elt, J: Iterable[int], delta: DiagramAutomorphism) -> Elt:
    J = frozenset(J)
    below = [v for v in minimal_reps(W, J) if partial_leq(W, v, w, J, delta)]
    top = [v for v in below if not any(c != v and partial_leq(W, v, c, J, delta) for c in below)]
    if len(top) != 1:
        raise RuntimeError(f"expected a unique maximal element, found {len(top)}")
    return top[0]


# -- representatives of shift classes ---------------------------------------


@dataclass(frozen=True)
class QuadStep:
    """One round of the construction: J_n, w'_n = z_n w''_n, w_n, x_n, y_n."""

    J: Subset
    w_twisted: Elt
    z: Elt
    w_reduced: Elt
    w: Elt
    x: Elt
    y: Elt


@dataclass(frozen=True)
class Quadruple:
    steps: tuple[QuadStep, ...]
    w_prime: Elt
    x: Elt
    u: Elt
    I: Subset

    @property
    def w_twisted(self) -> list[Elt]:
        return [st.w_twisted for st in self.steps]


def quadruple(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, w: Elt) -> Quadruple:
    """Run the (J_n, w_n, x_n, y_n) construction until J_n stabilizes.

    Once J_{n+1} = J_n, x_n is forced to be 1 and every later round repeats.
    """
    Jn = frozenset(J)
    J0 = Jn
    xacc = W.identity
    steps = []
    for _ in range(W.rank + 2):
        wt = W.twisted_conjugate(W.inverse(xacc), w, delta)
        wr = min_rep(W, wt, Jn, "right")
        z = W.multiply(wt, W.inverse(wr))
        wn = min_rep(W, wr, delta.on_subset(Jn), "left")
        Jnext = ad_intersection(W, Jn, wn, delta)
        xn = min_rep(W, z, Jnext, "left")
        yn = W.multiply(W.inverse(xn), z)
        steps.append(QuadStep(Jn, wt, z, wr, wn, xn, yn))
        if Jnext == Jn:
            break
        xacc = W.multiply(xacc, xn)
        Jn = Jnext
    else:  # pragma: no cover - J_n strictly shrinks
        raise RuntimeError("quadruple construction did not stabilize")
    last = steps[-1]
    assert last.x == W.identity
    assert last.w_reduced == last.w, "stabilized reduced part must be w_m"
    assert Jn == i_subset(W, J0, last.w, delta)
    return Quadruple(tuple(steps), last.w, xacc, last.z, Jn)


@dataclass(frozen=True)
class CycCertificate:
    J: Subset
    delta: DiagramAutomorphism
    piece: CombinatorialPiece
    w_prime: Elt
    x: Elt
    u: Elt
    K_prime: Subset
    I: Subset
    chain: tuple[ShiftStep, ...]
    trace: tuple[QuadStep, ...]

    @property
    def endpoint(self) -> CombinatorialPiece:
        return CombinatorialPiece(self.chain[-1].target.w if self.chain else self.piece.w, self.K_prime, self.delta)


def theorem_cyc(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, piece: CombinatorialPiece) -> CycCertificate:
    """Certificate (w', x, u, K') with (w, K) ≈_{J,delta} (u w', K').

    Requires K ⊆ J and w of minimal length in W_J ._delta w.
    """
    J = frozenset(J)
    w, K = piece.w, piece.K
    if piece.delta != delta:
        raise HypothesisError("piece uses a different automorphism")
    if not K <= J:
        raise HypothesisError("K must be contained in J")
    make_piece(W, w, K, delta)  # raises PieceError
    if not min_length_in_orbit(W, w, J, delta):
        raise HypothesisError("w not minimal in its W_J delta-orbit")

    q = quadruple(W, J, delta, w)
    chain = []
    cur = piece
    lw = W.length(w)
    for n, st in enumerate(q.steps):
        assert W.length(st.w_twisted) == lw, "length must stay constant"
        if st.x != W.identity:
            step = shift_step(W, st.x, cur)
            if step is None:
                raise AssertionError(f"round {n} is not a valid shift")
            chain.append(step)
            cur = step.target
        if n + 1 < len(q.steps):
            assert cur.K <= q.steps[n + 1].J, "Ad(x_0..x_n)^-1 K must lie in J_{n+1}"
    uw = W.multiply(q.u, q.w_prime)
    assert cur.w == uw == W.twisted_conjugate(W.inverse(q.x), w, delta)
    K_prime = cur.K
    assert K_prime <= q.I
    assert not (W.right_descent_mask(q.x) & subset_mask(q.I)) and in_parabolic(W, q.x, J)
    return CycCertificate(J, delta, piece, q.w_prime, q.x, q.u, K_prime, q.I, tuple(chain), q.steps)


def iota(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism, w: Elt) -> tuple[Elt, CycCertificate]:
    """The bijection W^{delta(J)} -> ^J W."""
    J = frozenset(J)
    if W.right_descent_mask(w) & subset_mask(delta.on_subset(J)):
        raise HypothesisError("iota needs w in W^{delta(J)}")
    K = i_subset(W, J, w, delta)
    cert = theorem_cyc(W, J, delta, make_piece(W, w, K, delta))
    if cert.u != W.identity:
        raise RuntimeError("u must be trivial for w in W^{delta(J)}")
    return cert.w_prime, cert


def iota_table(W: WeylGroup, J: Iterable[int], delta: DiagramAutomorphism) -> dict[Elt, Elt]:
    J = frozenset(J)
    return {w: iota(W, J, delta, w)[0] for w in minimal_reps(W, (), delta.on_subset(J))}


# -- induction data -----------------------------------------------------------


@dataclass(frozen=True)
class InductionDatum:
    J: Subset
    J_prime: Subset
    delta: DiagramAutomorphism
    w: Elt
    w_prime: Elt
    x: Elt
    u: Elt
    K: Subset
    K1: Subset
    K_prime: Subset


def induction_datum(
    W: WeylGroup, J: Iterable[int], J_prime: Iterable[int], delta: DiagramAutomorphism, w: Elt
) -> InductionDatum:
    J, Jp = frozenset(J), frozenset(J_prime)
    if not J <= Jp:
        raise HypothesisError("J must be contained in J'")
    if W.left_descent_mask(w) & subset_mask(J):
        raise HypothesisError("w must lie in ^J W")
    if not min_length_in_orbit(W, w, J, delta):
        raise HypothesisError("w not minimal in its W_J delta-orbit")
    K = i_subset(W, J, w, delta)
    q = quadruple(W, Jp, delta, w)
    try:
        K1 = ad_inverse(W, q.x, K)
    except NotSimple as e:  # pragma: no cover - excluded by the construction
        raise AssertionError("Ad(x)^-1 K is not simple") from e
    assert K1 <= q.I
    uw = W.multiply(q.u, q.w_prime)
    assert ad_on_simples(W, uw, delta, K1) == K1
    return InductionDatum(J, Jp, delta, w, q.w_prime, q.x, q.u, K, K1, q.I)
