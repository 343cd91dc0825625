"""Acceptance criteria.  Every check is exact; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""
import io
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import BASELINES, GRID, ORACLE_FIELDS, companion, linear
from hoplattice import gf, metrics, oracle, polyalg
from hoplattice.cli import main
from hoplattice.pattern import companion_matrix, relabel


RESULTS = []  # printed by the terminal-summary hook in conftest


def verdict(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name} -- {detail}".rstrip()
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_optimality_grid():
    start = time.perf_counter()
    bad = []
    for p, k, r in GRID:
        q = p**k
        R = metrics.evaluate(companion(p, k, r))
        want = ((q ** (r + 1) - 1) // (q - 1), Fraction(q**r - 1, q ** (r + 1) - 1), r)
        got = (R.column_period, R.max_collision_ratio, R.max_continual)
        if got != want:
            bad.append(((q, r), got, want))
    elapsed = time.perf_counter() - start
    verdict("1 optimality grid", not bad and elapsed < 10, f"{len(GRID)} points, {elapsed:.2f}s" + (f" {bad}" if bad else ""))


def test_2_bound_compliance():
    patterns = [companion(*g) for g in GRID] + [linear(n, n) for n in BASELINES]
    bad = []
    for P in patterns:
        R = metrics.evaluate(P)
        m, n = P.frame
        if not (R.max_collision_ratio >= Fraction(m - 1, m * n - 1)
                and R.max_continual >= metrics.continual_bound_ceil(m, n)):
            bad.append(P)
    verdict("2 bound compliance", not bad, f"{len(patterns)} patterns" + (f" {bad}" if bad else ""))


def test_3_baseline_non_optimal():
    bad = []
    for n in BASELINES:
        R = metrics.evaluate(linear(n, n))
        if not (R.max_collision_ratio == Fraction(1, n) > Fraction(1, n + 1) == R.ratio_bound):
            bad.append(n)
        out = io.StringIO()
        code = main(["compare", f"companion:p={n},r=1", f"linear:m={n},n={n}"], out=out, err=io.StringIO())
        flags = json.loads(out.getvalue())["attains_bound"]["max_collision_ratio"]
        if code != 0 or flags != [0]:
            bad.append(("compare", n, flags))
    verdict("3 baseline non-optimality", not bad, f"n in {BASELINES}" + (f" {bad}" if bad else ""))


def _primitive_oracle_grid():
    for p, k in ORACLE_FIELDS:
        F = gf.field_new(p, k)
        for r in (1, 2, 3):
            if F.q ** (r + 1) < oracle.EXHAUSTIVE_CAP:
                yield from polyalg.primitive_polys(F, r + 1)


def test_4_group_structure_oracle():
    checked, bad = 0, []
    for f in _primitive_oracle_grid():
        A = companion_matrix(f)
        for v in (oracle.check_group_order(A), oracle.check_transitivity(A, "column"),
                  oracle.check_transitivity(A, "row"), oracle.check_stabilizer(A),
                  oracle.check_row_independence(A)):
            if not v:
                bad.append(v.to_dict())
        checked += 1
    F2 = gf.field_new(2)
    negative = oracle.check_transitivity(companion_matrix(polyalg.monic(F2, [1, 0, 1])))
    verdict("4 group-structure oracle suite", not bad and checked > 0 and not negative,
            f"{checked} primitive polynomials, negative control failed as expected: {not negative}")


def test_5_partition_inequality_oracle():
    bad = []
    for m, n in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        v = oracle.check_lemma1(m, n)
        if not v or v.details["mode"] != "exhaustive" or v.details["equality_at"] != [[m] * n]:
            bad.append(v.to_dict())
    verdict("5 partition inequality oracle", not bad, str(bad) if bad else "exhaustive over 4 frame shapes")


def test_6_engine_equivalence():
    patterns = [companion(*g) for g in GRID] + [linear(n, n) for n in BASELINES]
    bad = [P for P in patterns if oracle.naive_metrics(P) != metrics.evaluate(P)]
    verdict("6 engine equivalence", not bad, f"{len(patterns)} patterns" + (f" {bad}" if bad else ""))


def test_7_occupancy_balance():
    bad = []
    for g in GRID:
        P = companion(*g)
        m = P.frame.m
        if not all(set(metrics.occupancy(P, t).values()) == {m} for t in range(P.period)):
            bad.append(g)
        if not metrics.evaluate(P).occupancy_balanced:
            bad.append(("flag", g))
    verdict("7 occupancy balance", not bad, f"{len(GRID)} companion patterns" + (f" {bad}" if bad else ""))


def test_8_relabel_invariance():
    bad = []
    for g in [(2, 1, 2), (3, 1, 1)]:
        P = companion(*g)
        base = metrics.evaluate(P)
        key = (base.column_period, base.max_collision_ratio, base.max_continual)
        for seed in range(20):
            perm = list(range(P.num_resources))
            random.Random(seed).shuffle(perm)
            R = metrics.evaluate(relabel(P, perm))
            if (R.column_period, R.max_collision_ratio, R.max_continual) != key:
                bad.append((g, seed))
    verdict("8 re-labeling invariance", not bad, f"2 patterns x 20 seeds" + (f" {bad}" if bad else ""))


CLI_EXAMPLES = [
    (["find-poly", "--p", "2", "--k", "1", "--degree", "3"], 0),
    (["find-poly", "--p", "2", "--k", "1", "--degree", "2"], 0),
    (["find-poly", "--p", "4", "--k", "1", "--degree", "2"], 2),
    (["eval", "companion", "--p", "2", "--k", "1", "--r", "2"], 0),
    (["eval", "linear", "--m", "3", "--n", "3"], 0),
    (["eval", "companion", "--p", "2", "--k", "1", "--r", "1", "--poly", "1,1"], 0),
    (["eval", "companion", "--p", "2", "--k", "1", "--r", "1", "--poly", "1,0"], 3),
    (["schedule", "companion", "--p", "2", "--k", "1", "--r", "1", "--t0", "0", "--t1", "3"], 0),
    (["schedule", "companion", "--p", "2", "--k", "1", "--r", "1", "--t0", "1", "--t1", "1"], 0),
    (["schedule", "companion", "--p", "2", "--k", "1", "--r", "1", "--t0", "1", "--t1", "1",
      "--format", "json"], 0),
    (["schedule", "linear", "--m", "2", "--n", "2", "--t0", "0", "--t1", "2"], 0),
    (["compare", "companion:p=3,k=1,r=1", "linear:m=3,n=3"], 0),
    (["compare", "companion:p=3,k=1,r=1", "companion:p=3,k=1,r=1"], 0),
    (["compare", "companion:p=2,k=1,r=2", "linear:m=4,n=2"], 2),
    (["verify", "--p", "2", "--k", "1", "--r", "2"], 0),
    (["verify", "--p", "2", "--k", "1", "--r", "11"], 2),
    (["verify", "--p", "3", "--k", "1", "--r", "1"], 0),
]


def test_9_cli_determinism():
    bad = []
    for argv, code in CLI_EXAMPLES:
        runs = [subprocess.run([sys.executable, "-m", "hoplattice", *argv], capture_output=True)
                for _ in range(2)]
        if runs[0].stdout != runs[1].stdout or runs[0].stderr != runs[1].stderr:
            bad.append((argv, "output differs"))
        if not runs[0].returncode == runs[1].returncode == code:
            bad.append((argv, runs[0].returncode, code))
    verdict("9 CLI determinism and exit codes", not bad, f"{len(CLI_EXAMPLES)} invocations" + (f" {bad}" if bad else ""))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
