"""Command-line entry point: ``python -m cycshift <command> ...``.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .coxeter import CoxeterError, Elt, WeylGroup, format_word, parse_automorphism, parse_subset, parse_word
from .decomposition import HypothesisError, decompose, hasse, induction_datum, iota, iota_table, theorem_cyc
from .formats import (
    certificate_to_dict,
    datum_to_dict,
    decomposition_to_dict,
    dumps,
    graph_dot,
    graph_to_dict,
    group,
    hasse_dot,
)
from .pieces import PieceError, make_piece
from .shiftgraph import build_graph
from .verify import SUITES, run_suite

DEFAULT_TYPES = "A1,A2,A3,B2,G2"


@dataclass
class RunConfig:
    command: str
    type: str | None = None
    delta: str = "id"
    J: str | None = None
    Jprime: str | None = None
    w: str | None = None
    K: str | None = None
    format: str | None = None
    out: str | None = None
    component: bool = False
    suite: str = "all"
    types: str = DEFAULT_TYPES


class UsageError(ValueError):
    pass


def _group(cfg: RunConfig) -> WeylGroup:
    if not cfg.type:
        raise UsageError("a Cartan type is required (positional or --type)")
    return group(cfg.type)


def _subset(W: WeylGroup, text: str | None, default=None):
    if text is None:
        if default is None:
            raise UsageError("missing subset argument")
        return default
    return parse_subset(text, W.rank)


def _elt(cfg: RunConfig, W: WeylGroup) -> Elt:
    if cfg.w is None:
        raise UsageError("--w is required")
    return W.element(parse_word(cfg.w, W.rank))


def _fmt(cfg: RunConfig, allowed: tuple[str, ...]) -> str:
    f = cfg.format or allowed[0]
    if f not in allowed:
        raise UsageError(f"--format must be one of {', '.join(allowed)}")
    return f


def cmd_graph(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    J = _subset(W, cfg.J, W.S)
    G = build_graph(W, delta, J)
    vertices = None
    if cfg.component:
        vertices = G.component_of(_elt(cfg, W))
    elif cfg.w is not None:
        _elt(cfg, W)  # validate even when unused
    f = _fmt(cfg, ("dot", "json", "table"))
    if f == "dot":
        return graph_dot(G, vertices), 0
    d = graph_to_dict(G, vertices)
    if f == "json":
        return dumps(d), 0
    lines = [f"{e['from'] or 'e'} -{e['label']}-> {e['to'] or 'e'}" for e in d["edges"]]
    lines += ["scc: " + " ".join(v or "e" for v in c) for c in d["sccs"]]
    return "\n".join(lines) + "\n", 0


def cmd_decompose(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    D = decompose(W, _subset(W, cfg.J), delta)
    d = decomposition_to_dict(W, D)
    if _fmt(cfg, ("json", "table")) == "json":
        return dumps(d), 0
    lines = [f"w={b['w'] or 'e'} I={b['I']} size={len(b['orbit'])}" for b in d["blocks"]]
    return "\n".join(lines) + "\n", 0


def cmd_hasse(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    H = hasse(W, _subset(W, cfg.J), delta)
    if _fmt(cfg, ("dot", "json")) == "dot":
        return hasse_dot(W, H), 0
    e = lambda v: format_word(W.word(v))  # noqa: E731
    d = {
        "type": W.datum.cartan_type,
        "J": sorted(H.J),
        "delta": str(delta),
        "nodes": [e(v) for v in H.nodes],
        "covers": [{"lower": e(a), "upper": e(b), "bruhat": br} for a, b, br in H.covers],
    }
    return dumps(d), 0


def cmd_iota(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    J = _subset(W, cfg.J)
    f = _fmt(cfg, ("json", "table"))
    e = lambda v: format_word(W.word(v))  # noqa: E731
    if cfg.w is None:
        table = iota_table(W, J, delta)
        pairs = [{"w": e(a), "iota": e(b)} for a, b in sorted(table.items())]
        if f == "json":
            return dumps({"type": W.datum.cartan_type, "J": sorted(J), "delta": str(delta), "table": pairs}), 0
        return "".join(f"{p['w'] or 'e'} -> {p['iota'] or 'e'}\n" for p in pairs), 0
    w = _elt(cfg, W)
    v, cert = iota(W, J, delta, w)
    if f == "json":
        return dumps({"w": e(w), "iota": e(v), "certificate": certificate_to_dict(W, cert)}), 0
    return f"{e(w) or 'e'} -> {e(v) or 'e'}\n", 0


def cmd_certificate(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    J = _subset(W, cfg.J)
    w = _elt(cfg, W)
    K = _subset(W, cfg.K, frozenset())
    cert = theorem_cyc(W, J, delta, make_piece(W, w, K, delta))
    _fmt(cfg, ("json",))
    return dumps(certificate_to_dict(W, cert)), 0


def cmd_datum(cfg: RunConfig) -> tuple[str, int]:
    W = _group(cfg)
    delta = parse_automorphism(cfg.delta, W)
    J = _subset(W, cfg.J)
    Jp = _subset(W, cfg.Jprime)
    t = induction_datum(W, J, Jp, delta, _elt(cfg, W))
    _fmt(cfg, ("json",))
    return dumps(datum_to_dict(W, t)), 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    names = list(SUITES) if cfg.suite == "all" else [s.strip() for s in cfg.suite.split(",")]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
    types = [cfg.type] if cfg.type else [t.strip() for t in cfg.types.split(",") if t.strip()]
    lines, code = [], 0
    for t in types:
        W = group(t)
        for n in names:
            R = run_suite(n, W)
            # timings vary between runs; keep the report byte-stable
            lines.append(f"{'PASS' if R.ok else 'FAIL'} {n:<13} {t:<6} checks={R.checks} failures={len(R.failures)}")
            lines += [f"  {msg}" for msg in R.failures[:5]]
            code = code or (0 if R.ok else 1)
    lines.append("all suites passed" if code == 0 else "verification FAILED")
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "graph": cmd_graph,
    "decompose": cmd_decompose,
    "hasse": cmd_hasse,
    "iota": cmd_iota,
    "certificate": cmd_certificate,
    "datum": cmd_datum,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycshift", description="Cyclic shifts and partial conjugation in finite Weyl groups.")
    sub = p.add_subparsers(dest="command", required=True)
    help_ = {
        "graph": "delta-conjugacy graph (DOT/JSON/table)",
        "decompose": "W_J delta-orbit decomposition (JSON/table)",
        "hasse": "Hasse diagram of <=_{J,delta} on ^J W (DOT/JSON)",
        "iota": "the bijection W^{delta(J)} -> ^J W",
        "certificate": "representative and witness chain for a piece (JSON)",
        "datum": "induction datum for J in J' (JSON)",
        "verify": "run the invariant suites",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=help_[name])
        sp.add_argument("type_pos", nargs="?", metavar="TYPE", help="Cartan type, e.g. A3, B2, A1xA2")
        sp.add_argument("--type", dest="type_opt", metavar="TYPE")
        sp.add_argument("--out", help="write to this file instead of standard output")
        if name == "verify":
            sp.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(SUITES)}")
            sp.add_argument("--types", default=DEFAULT_TYPES)
            continue
        sp.add_argument("--delta", default="id", help='"id" or a label map such as 1:3,3:1')
        sp.add_argument("--format", choices=("dot", "json", "table"))
        if name != "graph":
            sp.add_argument("--J", required=True, help='subset such as "1,3" or "∅"')
        else:
            sp.add_argument("--J", default=None, help="edge labels (default all of S)")
            sp.add_argument("--component", action="store_true", help="restrict to the connected component of --w")
        if name == "datum":
            sp.add_argument("--Jprime", required=True)
        if name == "certificate":
            sp.add_argument("--K", default=None, help="piece subset (default empty)")
        if name not in ("decompose", "hasse"):
            sp.add_argument("--w", default=None, help='word such as "1,2,1"; "e" is the identity')
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.type_pos and ns.type_opt and ns.type_pos != ns.type_opt:
        raise UsageError("conflicting Cartan types")
    fields = vars(ns).copy()
    t = fields.pop("type_pos") or fields.pop("type_opt", None)
    fields.pop("type_opt", None)
    return RunConfig(type=t, **fields)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text, code = COMMANDS[cfg.command](cfg)
    except (UsageError, CoxeterError, HypothesisError, PieceError) as e:
        print(f"cycshift {ns.command}: error: {e}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
