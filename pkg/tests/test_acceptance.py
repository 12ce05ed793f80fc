"""Acceptance suite: every criterion the package must meet, at desk scale.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them
stream). All checks are exact; there are no tolerances to tune.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path
from random import Random

import pytest

from genring import (
    Case,
    QuadraticProblem,
    check_critical_family,
    classify,
    decide_ring,
    is_qnil_brute,
    is_qnil_fast,
    is_quasipolar_brute,
    newton_lift,
    parse_matrix,
    parse_ring,
    random_jacobson,
    random_matrix,
    random_unit,
    series_lift,
    solve_brute,
    solve_split,
    verify_ring,
)
from genring.bruteforce import get_space
from genring.genmat import GenMatrix

REPO = Path(__file__).resolve().parent.parent


def report(number: int, ok: bool, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} {status}: {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_01_oracle_equivalence():
    """classify agrees with the exhaustive definition-level search."""
    mismatches = 0
    checked = 0
    for spec in ("Z/4", "Z/2[t]/t^2", "F3", "Z/2"):
        ring = parse_ring(spec)
        for s in ring.elements():
            rep = verify_ring(ring, s, "exhaustive")
            mismatches += len(rep.mismatches)
            checked += rep.checked
    for spec, designated in (("Z/8", 2), ("Z/9", 3)):
        ring = parse_ring(spec)
        for s in ring.elements():
            if s == ring.from_int(designated):
                rep = verify_ring(ring, s, "exhaustive")
            else:
                rep = verify_ring(ring, s, "sample", samples=1000, seed=0)
            mismatches += len(rep.mismatches)
            checked += rep.checked
    report(1, mismatches == 0, f"{checked} matrices swept, {mismatches} oracle mismatches")


def test_criterion_02_quasinilpotence_criterion():
    """Trace/determinant test == definition-level quasinilpotence, exhaustively."""
    bad = 0
    checked = 0
    for spec in ("Z/4", "Z/2[t]/t^2"):
        ring = parse_ring(spec)
        for s in ring.elements():
            space = get_space(ring, s)
            for i in range(space.count):
                m = space.matrix_of(space.M[i])
                if is_qnil_fast(m) != is_qnil_brute(m):
                    bad += 1
                checked += 1
    report(2, bad == 0, f"{checked} matrices, {bad} disagreements")


def test_criterion_03_hensel_and_series_solvers():
    z8 = parse_ring("Z/8")
    prob = QuadraticProblem(z8.from_int(1), z8.from_int(2))
    pair = solve_split(prob)
    brute = {r.payload for r in solve_brute(prob)}
    exact = (
        pair.root_u == z8.from_int(3)
        and pair.root_j == z8.from_int(6)
        and brute == {3, 6}
    )
    ring = parse_ring("Z/4[t]/t^2")
    rng = Random(0)
    agree = 0
    for _ in range(200):
        mu = random_unit(ring, rng)
        lam = random_jacobson(ring, rng)
        p = QuadraticProblem(mu, lam)
        sp = solve_split(p)
        series_j = series_lift(sp.root_j.payload[0], p)
        series_u = series_lift(sp.root_u.payload[0], p)
        newton_j = newton_lift(p, ring.zero)
        newton_u = newton_lift(p, mu)
        if series_j == newton_j and series_u == newton_u:
            agree += 1
    report(3, exact and agree == 200,
           f"Z/8 roots {{3,6}} matched; series==Newton on {agree}/200 problems")


def test_criterion_04_localized_negative_witness():
    zl2 = parse_ring("Zloc(2)")
    cls = classify(parse_matrix(zl2, "1", "[[1,1],[-2,0]]"))
    ok = cls.tag is Case.NOT_QUASIPOLAR and cls.reason == "rational-root-exhausted"
    details = [f"Zloc(2) matrix: {cls.tag.value}"]
    for p in (2, 3, 5):
        ring = parse_ring(f"Zloc({p})")
        d = decide_ring(ring, ring.one)
        witness_ok = (
            d.verdict == "not-quasipolar"
            and d.witness is not None
            and classify(d.witness).tag is Case.NOT_QUASIPOLAR
        )
        ok = ok and witness_ok
        details.append(f"p={p}: {d.verdict}")
    report(4, ok, "; ".join(details))


def test_criterion_05_zero_multiplier_positivity():
    ok = True
    total = 0
    for spec in ("Zloc(2)", "Z/8", "Zloc(2)[t]/t^2"):
        ring = parse_ring(spec)
        rng = Random(0)
        for _ in range(1000):
            a = random_matrix(ring, ring.zero, rng)
            cls = classify(a)  # certificate validity enforced at construction
            if not cls.is_quasipolar or cls.certificate is None:
                ok = False
            total += 1
    report(5, ok, f"{total} matrices with s=0, all quasipolar with valid certificates")


def test_criterion_06_nilpotent_multiplier_theorem():
    z8 = parse_ring("Z/8")
    ok = True
    for s_val in (0, 2, 4, 6):
        s = z8.from_int(s_val)
        if s_val == 2:
            rep = verify_ring(z8, s, "exhaustive")
        else:
            rep = verify_ring(z8, s, "sample", samples=1000, seed=0)
        if not rep.passes or rep.counts[Case.NOT_QUASIPOLAR.value] != 0:
            ok = False
    ring = parse_ring("Zloc(2)[t]/t^2")
    fam = check_critical_family(ring, ring.gen, samples=500, seed=0)
    ok = ok and fam.all_solvable and fam.total == 500
    report(6, ok, f"Z/8 nilpotent multipliers all quasipolar; "
                  f"{fam.solvable}/{fam.total} critical pairs solvable for s=t")


def test_criterion_07_radical_multiplier_iff():
    ring = parse_ring("Zloc(2)[t]/t^2")
    pos = decide_ring(ring, ring.gen)
    s2 = ring.from_int(2)
    fam = check_critical_family(ring, s2, u_values=[ring.from_int(5)], w_values=[ring.zero])
    neg = decide_ring(ring, s2)
    ok = (
        pos.verdict == "quasipolar"
        and len(fam.witnesses) == 1
        and neg.verdict == "not-quasipolar"
        and classify(neg.witness).tag is Case.NOT_QUASIPOLAR
    )
    report(7, ok, f"s=t: {pos.verdict}; s=2: u=5,w=0 unsolvable, {neg.verdict}")


def test_criterion_08_truncation_reduction():
    ring = parse_ring("Z/4[t]/t^3")
    base = ring.base
    rng = Random(0)
    agree = 0
    for _ in range(500):
        s = ring.element([rng.randrange(4) for _ in range(3)])
        a = random_matrix(ring, s, rng)
        a0 = GenMatrix(
            a.a11.payload[0], a.a12.payload[0], a.a21.payload[0], a.a22.payload[0],
            s.payload[0],
        )
        if classify(a).tag is classify(a0).tag:
            agree += 1
    report(8, agree == 500, f"constant-part tag matched on {agree}/500 samples")


def test_criterion_09_certificate_soundness():
    """Round up certificates from representative sweeps and re-check every
    invariant, including double-commutant membership on finite rings."""
    validated = 0
    failures = 0
    sweeps = []
    for spec in ("Z/4", "Z/2[t]/t^2", "F3"):
        ring = parse_ring(spec)
        for s in ring.elements():
            space = get_space(ring, s)
            sweeps.append((space, range(space.count)))
    for spec, s_val in (("Z/8", 2), ("Z/9", 3)):
        ring = parse_ring(spec)
        space = get_space(ring, ring.from_int(s_val))
        rng = Random(1)
        sweeps.append((space, [rng.randrange(space.count) for _ in range(300)]))
    for space, indices in sweeps:
        for i in indices:
            m = space.matrix_of(space.M[i])
            for cert in (classify(m).certificate, is_quasipolar_brute(m)):
                if cert is None:
                    continue
                try:
                    cert.validate(deep=True)
                    if not is_qnil_brute(cert.qnil_part):
                        failures += 1
                except Exception:
                    failures += 1
                validated += 1
    report(9, failures == 0 and validated > 2000,
           f"{validated} certificates fully validated, {failures} failures")


def test_criterion_10_deterministic_reports(tmp_path):
    env = dict(os.environ, PYTHONPATH=str(REPO / "src"))
    outputs = []
    for invocation in (
        ["verify-ring", "--ring", "Z/8", "--s", "3", "--mode", "sample",
         "--samples", "200", "--seed", "7", "--format", "json"],
        ["verify-ring", "--ring", "Z/4", "--s", "1", "--mode", "exhaustive",
         "--format", "json"],
    ):
        runs = [
            subprocess.run([sys.executable, "-m", "genring", *invocation],
                           capture_output=True, env=env, cwd=tmp_path)
            for _ in range(2)
        ]
        ok = runs[0].returncode == runs[1].returncode == 0 and runs[0].stdout == runs[1].stdout
        outputs.append(ok)
        if ok:
            json.loads(runs[0].stdout)  # must also be valid JSON
    report(10, all(outputs), "repeated invocations byte-identical "
                             f"({len(outputs)} invocation pairs)")
