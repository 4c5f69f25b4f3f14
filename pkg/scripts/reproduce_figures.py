"""Write the two worked diagrams for A3 as DOT files.

    python scripts/reproduce_figures.py [outdir]

Render with ``dot -Tpdf``.  The outputs match tests/golden byte for byte.
"""

import sys
from pathlib import Path

from cycshift.coxeter import parse_word
from cycshift.decomposition import hasse
from cycshift.formats import graph_dot, group, hasse_dot
from cycshift.shiftgraph import build_graph


def main(outdir: str = ".") -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    W = group("A3")
    delta = W.identity_automorphism()
    G = build_graph(W, delta)
    comp = G.component_of(W.element(parse_word("1,2,3", W.rank)))
    (out / "a3_coxeter_component.dot").write_text(graph_dot(G, comp))
    (out / "a3_j3_hasse.dot").write_text(hasse_dot(W, hasse(W, {3}, delta)))
    print(f"wrote {out / 'a3_coxeter_component.dot'} and {out / 'a3_j3_hasse.dot'}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
