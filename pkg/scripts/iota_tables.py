"""Print iota for every J (and every diagram automorphism) of a type.

    python scripts/iota_tables.py A3

Each line reads ``J delta: w -> iota(w)``; elements with iota(w) = w are skipped.
"""

import sys

from cycshift.coxeter import format_word
from cycshift.decomposition import iota_table
from cycshift.formats import group
from cycshift.verify import subsets


def main(name: str = "A3") -> None:
    W = group(name)
    e = lambda v: format_word(W.word(v)) or "e"  # noqa: E731
    for delta in W.automorphisms:
        for J in subsets(W):
            table = iota_table(W, J, delta)
            moved = [(a, b) for a, b in sorted(table.items()) if a != b]
            tag = ",".join(map(str, sorted(J))) or "∅"
            print(f"J={tag} delta={delta}: {len(table)} elements, {len(moved)} moved")
            for a, b in moved:
                print(f"  {e(a)} -> {e(b)}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
