"""Parabolic subgroups, minimal coset representatives and Bédard sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coxeter import DiagramAutomorphism, Elt, Subset, WeylGroup, subset_mask


class NotSimple(ValueError):
    """Raised when w delta(s) w^-1 is not a simple reflection."""

    def __init__(self, s: int, image: Elt):
        super().__init__(f"image of s{s} is not a simple reflection")
        self.s = s
        self.image = image


def min_rep(W: WeylGroup, w: Elt, J: Iterable[int], side: str = "right") -> Elt:
    """Minimal element of a parabolic coset of w.

    ``side="right"`` is the right coset W_J w (result lies in ^J W);
    ``side="left"`` is the left coset w W_J (result lies in W^J).
    """
    m = subset_mask(J)
    if side == "right":
        desc, step = W.left_descent_mask, W.lmul
        while d := desc(w) & m:
            w = step((d & -d).bit_length(), w)
    elif side == "left":
        desc = W.right_descent_mask
        while d := desc(w) & m:
            w = W.rmul(w, (d & -d).bit_length())
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return w


def double_min_rep(W: WeylGroup, w: Elt, J: Iterable[int], K: Iterable[int]) -> Elt:
    """Minimal element of W_J w W_K."""
    x = min_rep(W, min_rep(W, w, J, "right"), K, "left")
    assert not (W.left_descent_mask(x) & subset_mask(J)), "double coset representative"
    return x


def minimal_reps(W: WeylGroup, J: Iterable[int] = (), K: Iterable[int] = ()) -> list[Elt]:
    """^J W^K: no left descent in J and no right descent in K, in handle order."""
    mj, mk = subset_mask(J), subset_mask(K)
    dl, dr = W.left_descent_mask, W.right_descent_mask
    return [w for w in W.elements if not (dl(w) & mj) and not (dr(w) & mk)]


def parabolic_elements(W: WeylGroup, J: Iterable[int]) -> frozenset[Elt]:
    J = sorted(J)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            for s in J:
                v = W.lmul(s, w)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def in_parabolic(W: WeylGroup, w: Elt, J: Iterable[int]) -> bool:
    """w lies in W_J iff every letter of a reduced word lies in J."""
    J = set(J)
    return all(s in J for s in W.word(w))


def ad_on_simples(W: WeylGroup, w: Elt, delta: DiagramAutomorphism, K: Iterable[int]) -> Subset:
    """{w delta(s) w^-1 : s in K} as generator labels; raises NotSimple."""
    out = set()
    for s in sorted(K):
        img = W.conj(w, W.gen[delta(s)])
        t = W.simple_label(img)
        if t is None:
            raise NotSimple(s, img)
        out.add(t)
    return frozenset(out)


def ad_inverse(W: WeylGroup, x: Elt, K: Iterable[int]) -> Subset:
    """Ad(x)^-1(K) = {x^-1 s x}; raises NotSimple."""
    return ad_on_simples(W, W.inverse(x), W.identity_automorphism(), K)


def _ad_image_in(W: WeylGroup, w: Elt, delta: DiagramAutomorphism, s: int, K: Subset) -> bool:
    t = W.simple_label(W.conj(w, W.gen[delta(s)]))
    return t is not None and t in K


def i_subset(W: WeylGroup, J: Iterable[int], w: Elt, delta: DiagramAutomorphism) -> Subset:
    """The largest K in J with Ad(w) delta(K) = K.

    Shrinks K to {s in K : w delta(s) w^-1 in K} until stable; every valid K
    survives each round, so the fixed point is the maximum.
    """
    K = frozenset(J)
    while True:
        nxt = frozenset(s for s in K if _ad_image_in(W, w, delta, s, K))
        if nxt == K:
            return K
        K = nxt


def ad_intersection(W: WeylGroup, J: Subset, w: Elt, delta: DiagramAutomorphism) -> Subset:
    """J ∩ Ad(w)(delta(J)) as a set of simple reflections."""
    imgs = set()
    for s in J:
        t = W.simple_label(W.conj(w, W.gen[delta(s)]))
        if t is not None:
            imgs.add(t)
    return frozenset(J) & imgs


@dataclass(frozen=True)
class BedardTrace:
    steps: tuple[tuple[Subset, Elt], ...]
    stabilized_at: int

    @property
    def limit(self) -> tuple[Subset, Elt]:
        return self.steps[self.stabilized_at]

    def __getitem__(self, n: int) -> tuple[Subset, Elt]:
        return self.steps[min(n, self.stabilized_at)]


def bedard_sequence(W: WeylGroup, J: Iterable[int], w: Elt, delta: DiagramAutomorphism) -> BedardTrace:
    """The sequence (J_n, w_n) attached to w in ^J W, with w_n = min(w W_{delta(J_n)})."""
    Jn = frozenset(J)
    if W.left_descent_mask(w) & subset_mask(Jn):
        raise ValueError("bedard_sequence needs w in ^J W")
    steps = []
    while True:
        wn = min_rep(W, w, delta.on_subset(Jn), "left")
        steps.append((Jn, wn))
        nxt = ad_intersection(W, Jn, wn, delta)
        if nxt == Jn:
            return BedardTrace(tuple(steps), len(steps) - 1)
        Jn = nxt


def j_infinity_oracle(W: WeylGroup, J: Iterable[int], w: Elt, delta: DiagramAutomorphism) -> frozenset[Elt]:
    """Intersection of (Ad(w) o delta)^n (W_J) over all integers n.

    With X_k the intersection over |n| <= k, X_{k+1} = X_k ∩ phi(X_k) ∩ phi^-1(X_k),
    so the first repeat is the limit.
    """
    winv = W.inverse(w)
    dinv = delta.inverse()

    def phi(X):
        return {W.conj(w, W.apply_automorphism(delta, y)) for y in X}

    def phi_inv(X):
        return {W.apply_automorphism(dinv, W.conj(winv, y)) for y in X}

    X = set(parabolic_elements(W, J))
    for _ in range(W.order + 1):
        nxt = X & phi(X) & phi_inv(X)
        if nxt == X:
            return frozenset(X)
        X = nxt
    raise RuntimeError("intersection did not stabilize")
