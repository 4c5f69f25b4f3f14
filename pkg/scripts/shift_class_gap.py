"""Compare graph SCCs with the swap closure x y -> y delta(x), per type and automorphism.

    python scripts/shift_class_gap.py A2 A3 B2 G2 D4

For every element where the two differ, the element is printed with both classes
and whether it has minimal length in its delta-conjugacy class.  The SCC is always
contained in the swap closure; differences occur only at non-minimal elements.
"""

import sys

from cycshift.coxeter import format_word
from cycshift.formats import group
from cycshift.oracle import oracle_shift_class
from cycshift.shiftgraph import build_graph, min_length_in_orbit
from cycshift.verify import shift_class_disagreements


def main(names: list[str]) -> None:
    for name in names or ["A2", "A3", "B2"]:
        W = group(name)
        e = lambda v: format_word(W.word(v)) or "e"  # noqa: E731
        for delta in W.automorphisms:
            bad = shift_class_disagreements(W, delta)
            print(f"{name} delta={delta}: {len(bad)} of {W.order} elements differ")
            if not bad:
                continue
            G = build_graph(W, delta)
            for w in bad[:10]:
                scc = sorted(e(v) for v in G.scc_of(w))
                bm = sorted(e(v) for v in oracle_shift_class(W, w, delta))
                minimal = min_length_in_orbit(W, w, W.S, delta)
                print(f"  {e(w)}: scc={scc} swap={bm} minimal={minimal}")
            if len(bad) > 10:
                print(f"  ... {len(bad) - 10} more")


if __name__ == "__main__":
    main(sys.argv[1:])
