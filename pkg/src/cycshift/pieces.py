"""Combinatorial pieces (w, K) and their cyclic shifts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .coxeter import DiagramAutomorphism, Elt, Subset, WeylGroup, subset_mask
from .parabolic import NotSimple, ad_inverse, ad_on_simples, parabolic_elements


class PieceError(ValueError):
    pass


class DoesNotAct(PieceError):
    pass


@dataclass(frozen=True, order=True)
class CombinatorialPiece:
    w: Elt
    K: Subset
    delta: DiagramAutomorphism

    def __repr__(self) -> str:
        return f"Piece(w={self.w}, K={sorted(self.K)})"


def piece_violation(W: WeylGroup, w: Elt, K: Iterable[int], delta: DiagramAutomorphism) -> str | None:
    K = frozenset(K)
    if W.left_descent_mask(w) & subset_mask(K):
        return "not minimal in ^K W"
    try:
        if ad_on_simples(W, w, delta, K) != K:
            return "K not normalized"
    except NotSimple:
        return "K not normalized"
    return None


def make_piece(W: WeylGroup, w: Elt, K: Iterable[int], delta: DiagramAutomorphism) -> CombinatorialPiece:
    K = frozenset(K)
    err = piece_violation(W, w, K, delta)
    if err:
        raise PieceError(err)
    return CombinatorialPiece(w, K, delta)


def is_piece(W: WeylGroup, w: Elt, K: Iterable[int], delta: DiagramAutomorphism) -> bool:
    return piece_violation(W, w, K, delta) is None


def conjugate_piece(W: WeylGroup, x: Elt, piece: CombinatorialPiece) -> CombinatorialPiece:
    """(x^-1 w delta(x), Ad(x)^-1 K).

    x acts when x^-1 sends the simple roots of K to simple roots, i.e.
    Ad(x)^-1(K) consists of simple reflections and x lies in W^{Ad(x)^-1 K}.
    """
    try:
        K2 = ad_inverse(W, x, piece.K)
    except NotSimple as e:
        raise DoesNotAct(f"x does not act: x^-1 s{e.s} x is not simple") from None
    if W.right_descent_mask(x) & subset_mask(K2):
        raise DoesNotAct("x does not act: x sends a simple root of K to a negative root")
    w2 = W.multiply(W.multiply(W.inverse(x), piece.w), W.apply_automorphism(piece.delta, x))
    return CombinatorialPiece(w2, K2, piece.delta)


def piece_set(W: WeylGroup, piece: CombinatorialPiece) -> frozenset[Elt]:
    """W_K w."""
    return frozenset(W.multiply(u, piece.w) for u in parabolic_elements(W, piece.K))


@dataclass(frozen=True)
class ShiftStep:
    """(from) ≈^x (to): to.w = x^-1 from.w delta(x) with lengths additive."""

    x: Elt
    source: CombinatorialPiece
    target: CombinatorialPiece

    def is_valid(self, W: WeylGroup) -> bool:
        w, x = self.source.w, self.x
        lw = W.length(w)
        if W.length(x) + W.length(W.multiply(W.inverse(x), w)) != lw:
            return False
        if W.length(self.target.w) != lw:
            return False
        try:
            return conjugate_piece(W, x, self.source) == self.target
        except DoesNotAct:
            return False


def shift_step(W: WeylGroup, x: Elt, piece: CombinatorialPiece) -> ShiftStep | None:
    """The step by x from piece, or None when x does not give a shift."""
    w = piece.w
    lw = W.length(w)
    if W.length(x) + W.length(W.multiply(W.inverse(x), w)) != lw:
        return None
    try:
        q = conjugate_piece(W, x, piece)
    except DoesNotAct:
        return None
    if W.length(q.w) != lw:
        return None
    return ShiftStep(x, piece, q)


def _neighbours(W: WeylGroup, p: CombinatorialPiece, xs: list[Elt]):
    """Steps touching p in either direction, x in ShortLex order."""
    delta = p.delta
    for x in xs:
        st = shift_step(W, x, p)
        if st is not None:
            yield st, st.target
        # a step q ->x p needs delta(x) to be a suffix of p.w
        dx = W.apply_automorphism(delta, x)
        if W.length(W.multiply(p.w, W.inverse(dx))) + W.length(dx) != W.length(p.w):
            continue
        try:
            K0 = ad_inverse(W, W.inverse(x), p.K)
        except NotSimple:
            continue
        w0 = W.multiply(W.multiply(x, p.w), W.inverse(dx))
        src = CombinatorialPiece(w0, K0, delta)
        st = shift_step(W, x, src) if is_piece(W, w0, K0, delta) else None
        if st is not None and st.target == p:
            yield st, src


def shift_class(W: WeylGroup, piece: CombinatorialPiece, J: Iterable[int]) -> dict[CombinatorialPiece, list[ShiftStep]]:
    """The ≈_{J,delta} class of piece, each member with a witness chain from piece."""
    xs = sorted(parabolic_elements(W, J))
    paths = {piece: []}
    queue = deque([piece])
    while queue:
        p = queue.popleft()
        for st, q in _neighbours(W, p, xs):
            if q not in paths:
                paths[q] = paths[p] + [st]
                queue.append(q)
    return paths


def shift_equivalent(
    W: WeylGroup, p: CombinatorialPiece, q: CombinatorialPiece, J: Iterable[int]
) -> tuple[bool, list[ShiftStep]]:
    """Whether p ≈_{J,delta} q, with a witness chain.

    Consecutive pieces of the chain are joined by the listed steps; a step
    may be traversed from target to source since the relation is the
    equivalence generated by single shifts.
    """
    for r in (p, q):
        err = piece_violation(W, r.w, r.K, r.delta)
        if err:
            raise PieceError(err)
    if p == q:
        return True, []
    paths = shift_class(W, p, J)
    if q in paths:
        return True, paths[q]
    return False, []
