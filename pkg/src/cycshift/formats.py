"""JSON and DOT emitters.

Elements travel as comma-separated ShortLex words (``""`` is the identity),
subsets as sorted label arrays.  Every emitter is byte-deterministic.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Any, Iterable

from .coxeter import DiagramAutomorphism, Elt, WeylGroup, format_word, subscript_label, parse_automorphism, parse_word
from .decomposition import Block, CycCertificate, Hasse, InductionDatum, PartialDecomposition, QuadStep
from .pieces import CombinatorialPiece, ShiftStep
from .shiftgraph import ShiftGraph


@lru_cache(maxsize=None)
def group(name: str) -> WeylGroup:
    return WeylGroup.from_type(name)


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# -- JSON ---------------------------------------------------------------------


def _e(W: WeylGroup, w: Elt) -> str:
    return format_word(W.word(w))


def _h(W: WeylGroup, text: str) -> Elt:
    return W.element(parse_word(text, W.rank))


def _set(K: Iterable[int]) -> list[int]:
    return sorted(K)


def piece_to_dict(W: WeylGroup, p: CombinatorialPiece) -> dict:
    return {"w": _e(W, p.w), "K": _set(p.K)}


def piece_from_dict(W: WeylGroup, d: dict, delta: DiagramAutomorphism) -> CombinatorialPiece:
    return CombinatorialPiece(_h(W, d["w"]), frozenset(d["K"]), delta)


def decomposition_to_dict(W: WeylGroup, D: PartialDecomposition) -> dict:
    return {
        "type": W.datum.cartan_type,
        "J": _set(D.J),
        "delta": str(D.delta),
        "blocks": [
            {"w": _e(W, b.w), "I": _set(b.I), "orbit": [_e(W, v) for v in sorted(b.orbit)]}
            for b in D.blocks
        ],
    }


def decomposition_from_dict(d: dict) -> PartialDecomposition:
    W = group(d["type"])
    delta = parse_automorphism(d["delta"], W)
    blocks = tuple(
        Block(_h(W, b["w"]), frozenset(b["I"]), frozenset(_h(W, v) for v in b["orbit"])) for b in d["blocks"]
    )
    return PartialDecomposition(frozenset(d["J"]), delta, blocks)


def certificate_to_dict(W: WeylGroup, c: CycCertificate) -> dict:
    return {
        "type": W.datum.cartan_type,
        "J": _set(c.J),
        "delta": str(c.delta),
        "piece": piece_to_dict(W, c.piece),
        "w_prime": _e(W, c.w_prime),
        "x": _e(W, c.x),
        "u": _e(W, c.u),
        "K_prime": _set(c.K_prime),
        "I": _set(c.I),
        "chain": [
            {"x": _e(W, st.x), "from": piece_to_dict(W, st.source), "to": piece_to_dict(W, st.target)}
            for st in c.chain
        ],
        "trace": [
            {
                "J": _set(q.J),
                "w_twisted": _e(W, q.w_twisted),
                "z": _e(W, q.z),
                "w_reduced": _e(W, q.w_reduced),
                "w": _e(W, q.w),
                "x": _e(W, q.x),
                "y": _e(W, q.y),
            }
            for q in c.trace
        ],
    }


def certificate_from_dict(d: dict) -> CycCertificate:
    W = group(d["type"])
    delta = parse_automorphism(d["delta"], W)
    chain = tuple(
        ShiftStep(_h(W, st["x"]), piece_from_dict(W, st["from"], delta), piece_from_dict(W, st["to"], delta))
        for st in d["chain"]
    )
    trace = tuple(
        QuadStep(frozenset(q["J"]), *(_h(W, q[k]) for k in ("w_twisted", "z", "w_reduced", "w", "x", "y")))
        for q in d["trace"]
    )
    return CycCertificate(
        frozenset(d["J"]),
        delta,
        piece_from_dict(W, d["piece"], delta),
        _h(W, d["w_prime"]),
        _h(W, d["x"]),
        _h(W, d["u"]),
        frozenset(d["K_prime"]),
        frozenset(d["I"]),
        chain,
        trace,
    )


_DATUM_ELTS = ("w", "w_prime", "x", "u")
_DATUM_SETS = ("K", "K1", "K_prime")


def datum_to_dict(W: WeylGroup, t: InductionDatum) -> dict:
    out: dict[str, Any] = {"type": W.datum.cartan_type, "J": _set(t.J), "J_prime": _set(t.J_prime), "delta": str(t.delta)}
    out.update({k: _e(W, getattr(t, k)) for k in _DATUM_ELTS})
    out.update({k: _set(getattr(t, k)) for k in _DATUM_SETS})
    return out


def datum_from_dict(d: dict) -> InductionDatum:
    W = group(d["type"])
    return InductionDatum(
        J=frozenset(d["J"]),
        J_prime=frozenset(d["J_prime"]),
        delta=parse_automorphism(d["delta"], W),
        **{k: _h(W, d[k]) for k in _DATUM_ELTS},
        **{k: frozenset(d[k]) for k in _DATUM_SETS},
    )


def graph_to_dict(G: ShiftGraph, vertices: Iterable[Elt] | None = None) -> dict:
    W = G.W
    vs = sorted(W.elements if vertices is None else vertices)
    keep = set(vs)
    sccs = {}
    for v in vs:
        sccs.setdefault(G.scc_labels[v], []).append(_e(W, v))
    return {
        "type": W.datum.cartan_type,
        "delta": str(G.delta),
        "J": _set(G.J),
        "vertices": [_e(W, v) for v in vs],
        "edges": [
            {"from": _e(W, a), "label": s, "to": _e(W, b)}
            for a, s, b in sorted(G.edges, key=lambda e: (e[0], e[2], e[1]))
            if a in keep
        ],
        "sccs": [sccs[c] for c in sorted(sccs)],
    }


# -- DOT ----------------------------------------------------------------------


def node_id(W: WeylGroup, w: Elt) -> str:
    word = W.word(w)
    if not word:
        return "e"
    return "s" + ("" if W.rank < 10 else "_").join(map(str, word))


def _node_lines(W: WeylGroup, vs: Iterable[Elt]) -> list[str]:
    return [f'  "{node_id(W, v)}" [label="{subscript_label(W.word(v))}"];' for v in vs]


def graph_dot(G: ShiftGraph, vertices: Iterable[Elt] | None = None, name: str | None = None) -> str:
    """The conjugacy graph; parallel edges share one arc labelled ``1,3``, loops are dropped."""
    W = G.W
    vs = sorted(W.elements if vertices is None else vertices)
    keep = set(vs)
    arcs: dict[tuple[Elt, Elt], list[int]] = {}
    for a, s, b in G.edges:
        if a in keep and b in keep and a != b:
            arcs.setdefault((a, b), []).append(s)
    name = name or f"{W.datum.cartan_type} delta={G.delta} J={','.join(map(str, sorted(G.J)))}"
    lines = [f'digraph "{name}" {{', "  node [shape=plaintext];"]
    lines += _node_lines(W, vs)
    for (a, b), labels in sorted(arcs.items()):
        lab = ",".join(map(str, sorted(labels)))
        lines.append(f'  "{node_id(W, a)}" -> "{node_id(W, b)}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(W: WeylGroup, H: Hasse) -> str:
    """Covers drawn bottom-up; relations that are not Bruhat relations are dashed."""
    J = ",".join(map(str, sorted(H.J))) or "∅"
    lines = [f'digraph "{W.datum.cartan_type} J={J} delta={H.delta}" {{', "  rankdir=BT;", "  node [shape=plaintext];", "  edge [arrowhead=none];"]
    lines += _node_lines(W, H.nodes)
    for a, b, bruhat in H.covers:
        style = "" if bruhat else " [style=dashed]"
        lines.append(f'  "{node_id(W, a)}" -> "{node_id(W, b)}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
