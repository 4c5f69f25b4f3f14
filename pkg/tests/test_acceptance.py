"""Acceptance criteria 1-9, one pass/fail line each.

Run ``pytest tests/test_acceptance.py -v -s`` to see the report lines; they are
also collected into a summary printed at the end of the module.
"""

import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from cycshift.decomposition import bruhat_hasse, hasse, iota
from cycshift.formats import group
from cycshift.parabolic import minimal_reps
from cycshift.shiftgraph import build_graph
from cycshift.verify import run_suite, shift_class_disagreements

from conftest import el, wd

LINES: dict[str, str] = {}
ROOT = Path(__file__).resolve().parents[1]


def report(key: str, ok: bool, detail: str, capsys) -> None:
    line = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES[key] = line
    with capsys.disabled():
        print("\n" + line)


@pytest.fixture(scope="module", autouse=True)
def summary():
    yield
    print("\n\nacceptance summary")
    for key in sorted(LINES, key=lambda k: (int(k.split()[0]), k)):
        print("  " + LINES[key])


def suites(names, types):
    reports = [run_suite(n, group(t)) for t in types for n in names]
    fails = [f"{r.suite}/{r.cartan_type}: {r.failures[:2]}" for r in reports if not r.ok]
    return reports, fails


def test_1_conjugacy_graph_example(capsys):
    t0 = time.perf_counter()
    W = group("A3")
    G = build_graph(W, W.identity_automorphism())
    comp = G.component_of(el(W, "1,2,3"))
    edges = {(wd(W, a), s, wd(W, b)) for a, s, b in G.edges if a in comp and a != b}
    expected = {
        ("1,2,3", 1, "2,1,3"), ("1,2,3", 3, "1,3,2"),
        ("2,1,3", 1, "1,2,3"), ("2,1,3", 2, "1,3,2"), ("2,1,3", 3, "3,2,1"),
        ("1,3,2", 3, "1,2,3"), ("1,3,2", 2, "2,1,3"), ("1,3,2", 1, "3,2,1"),
        ("3,2,1", 1, "1,3,2"), ("3,2,1", 3, "2,1,3"),
        ("1,2,1,3,2", 2, "1,2,3"), ("2,1,3,2,1", 2, "3,2,1"),
        ("1,2,1,3,2", 1, "2,1,3,2,1"), ("1,2,1,3,2", 3, "2,1,3,2,1"),
        ("2,1,3,2,1", 1, "1,2,1,3,2"), ("2,1,3,2,1", 3, "1,2,1,3,2"),
    }  # fmt: skip
    sccs = sorted(sorted(wd(W, v) for v in c) for c in G.sccs() if set(c) <= comp)
    ok = (
        {wd(W, v) for v in comp} == {"1,2,3", "2,1,3", "1,3,2", "3,2,1", "1,2,1,3,2", "2,1,3,2,1"}
        and edges == expected
        and sorted(map(len, sccs)) == [2, 4]
    )
    dt = time.perf_counter() - t0
    ok = ok and dt < 1
    report("1", ok, f"A3 component: {len(comp)} vertices, {len(edges)} edges, SCC sizes {sorted(map(len, sccs))} ({dt:.3f}s)", capsys)
    assert ok


def test_2_hasse_figure(capsys):
    t0 = time.perf_counter()
    W = group("A3")
    H = hasse(W, {3}, W.identity_automorphism())
    reps = {wd(W, v) for v in H.nodes}
    figure = {"", "1", "2", "1,2", "2,1", "2,3", "1,2,3", "1,2,1", "2,1,3", "2,1,3,2", "1,2,1,3", "1,2,1,3,2"}
    bruhat = set(bruhat_hasse(W, H.nodes))
    covers = {(a, b) for a, b, _ in H.covers}
    extra = covers - bruhat
    ok = reps == figure and bruhat <= covers and extra == {(el(W, "1,2,3"), el(W, "2,1,3,2"))}
    dt = time.perf_counter() - t0
    ok = ok and dt < 1
    report("2", ok, f"^J W has {len(reps)} elements, {len(bruhat)} Bruhat covers + {len(extra)} extra (s123 < s2132) ({dt:.3f}s)", capsys)
    assert ok


def test_3_iota_example(capsys):
    t0 = time.perf_counter()
    W = group("A4")
    w = el(W, "1,2,1,3,2,4")
    v, cert = iota(W, {1, 3}, W.identity_automorphism(), w)
    ok = wd(W, v) == "2,1,3,2,4,3" and cert.u == W.identity and v != W.inverse(w)
    dt = time.perf_counter() - t0
    ok = ok and dt < 1
    report("3", ok, f"iota(1,2,1,3,2,4) = {wd(W, v)}, u = e, inverse = {wd(W, W.inverse(w))} ({dt:.3f}s)", capsys)
    assert ok


def test_4_orbit_decomposition(capsys):
    t0 = time.perf_counter()
    reports, fails = suites(["prop-w"], ["A1", "A2", "A3", "A4", "B2", "B3", "G2"])
    dt = time.perf_counter() - t0
    ok = not fails and dt < 300
    report("4", ok, f"prop-w on A1-A4, B2, B3, G2: {sum(r.checks for r in reports)} checks, {len(fails)} failing suites ({dt:.1f}s)", capsys)
    assert ok, fails


def test_5_lemma_j_inf(capsys):
    t0 = time.perf_counter()
    reports, fails = suites(["lemma-j-inf"], ["A1", "A2", "A3", "A4", "B2", "B3", "G2"])
    dt = time.perf_counter() - t0
    report("5", not fails, f"lemma-j-inf on A1-A4, B2, B3, G2: {sum(r.checks for r in reports)} checks, {len(fails)} failing suites ({dt:.1f}s)", capsys)
    assert not fails, fails


def test_6_theorem_cyc(capsys):
    t0 = time.perf_counter()
    reports, fails = suites(["thm-cyc"], ["A3", "B2", "G2"])
    dt = time.perf_counter() - t0
    ok = not fails and dt < 600
    report("6", ok, f"thm-cyc on A3 (both delta), B2, G2: {sum(r.checks for r in reports)} checks, {len(fails)} failing suites ({dt:.1f}s)", capsys)
    assert ok, fails


@pytest.mark.xfail(
    strict=True,
    reason="with the flip, non-minimal elements are swap-equivalent to delta(w) but not graph-equivalent; "
    "see test_7_minimal_length_elements for the statement that holds",
)
def test_7_broue_michel_literal(capsys):
    counts = {}
    for t in ("A3", "B2"):
        W = group(t)
        for delta in W.automorphisms:
            counts[f"{t} delta={delta}"] = len(shift_class_disagreements(W, delta))
    ok = not any(counts.values())
    report("7", ok, "elements whose SCC differs from the swap closure: " + ", ".join(f"{k}: {v}" for k, v in counts.items()), capsys)
    assert ok


def test_7_minimal_length_elements(capsys):
    reports, fails = suites(["broue-michel"], ["A3", "B2"])
    for t in ("A3", "B2"):
        W = group(t)
        gap = shift_class_disagreements(W, W.identity_automorphism())
        if gap:
            fails.append(f"{t} delta=id: {len(gap)} elements differ")
    report(
        "7 (restricted)",
        not fails,
        f"SCC = swap closure on every element for delta=id and on minimal-length elements for the flip; "
        f"SCC inside swap closure everywhere: {sum(r.checks for r in reports)} checks",
        capsys,
    )
    assert not fails, fails


def test_8_iota_bijection(capsys):
    t0 = time.perf_counter()
    reports, fails = suites(["iota", "special-case"], ["A3", "B3"])
    dt = time.perf_counter() - t0
    n = sum(len(minimal_reps(group(t), ())) for t in ("A3", "B3"))
    report("8", not fails, f"iota bijection, block identity and u = e on A3, B3 ({n} elements): {len(fails)} failing suites ({dt:.1f}s)", capsys)
    assert not fails, fails


CLI_RUNS = [
    ["graph", "A3", "--w", "1,2,3", "--component"],
    ["graph", "A3", "--delta", "1:3,3:1", "--format", "json"],
    ["graph", "B2", "--J", "1", "--format", "table"],
    ["decompose", "A3", "--J", "1,3", "--delta", "1:3,3:1"],
    ["decompose", "A2", "--J", "1", "--format", "table"],
    ["hasse", "A3", "--J", "3"],
    ["hasse", "B2", "--J", "1", "--format", "json"],
    ["iota", "A4", "--J", "1,3", "--w", "1,2,1,3,2,4"],
    ["iota", "A3", "--J", "1", "--delta", "1:3,3:1"],
    ["certificate", "A3", "--J", "1,3", "--w", "1,2"],
    ["datum", "A3", "--J", "1", "--Jprime", "1,2", "--w", "2,3"],
    ["verify", "--suite", "prop-w,iota", "--types", "A2,B2"],
]


def test_9_cli_determinism(capsys):
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src"))
    mismatched = []
    for argv in CLI_RUNS:
        outs = []
        for seed in ("0", "12345"):
            env["PYTHONHASHSEED"] = seed
            p = subprocess.run([sys.executable, "-m", "cycshift", *argv], capture_output=True, env=env, check=True)
            outs.append(p.stdout)
        if outs[0] != outs[1] or not outs[0]:
            mismatched.append(" ".join(argv))
    ok = not mismatched
    report("9", ok, f"{len(CLI_RUNS)} CLI invocations run twice under different hash seeds, {len(mismatched)} differ", capsys)
    assert ok, mismatched
