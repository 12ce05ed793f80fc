"""Command-line front end.

Subcommands::

    classify     classify one matrix and print its certificate
    solve-quad   root-find t^2 - mu t + lambda by a chosen method
    verify-ring  sweep classify() against the exhaustive oracle
    decide-ring  three-valued ring-level decision
    witness      search for a non-quasipolar witness matrix
    idempotents  list the idempotents of a finite twisted matrix ring
    report       run the built-in verification battery

Exit codes: 0 success/agreement, 1 mismatch found or an --expect/--assert
contradicted, 2 usage or parse errors. JSON output is canonical (sorted
keys, fixed indentation, no timing fields), so identical invocations with
identical seeds are byte-identical. Every JSON payload carries a "schema"
version field. Relative --output paths are resolved against
$GENRING_OUTPUT_DIR when it is set; files are written atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from random import Random

from .errors import GenRingError, ParseError
from .genmat import GenMatrix
from .localring import Quotient, Ring
from .quadratic import (
    QuadraticProblem,
    series_lift,
    solve_brute,
    solve_rational,
    solve_split,
)
from .quasipolar import (
    Case,
    check_critical_family,
    classify,
    decide_ring,
    is_qnil_brute,
    is_qnil_fast,
    is_strongly_clean_brute,
    reduce_truncated,
    verify_ring,
)
from .ringspec import (
    format_element,
    format_matrix,
    format_ring,
    matrix_to_json,
    parse_element,
    parse_matrix,
    parse_ring,
)
from .sampling import random_matrix
from .bruteforce import get_space


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _resolve_output(path: str) -> str:
    base = os.environ.get("GENRING_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _write_atomic(path: str, data: str):
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".genring-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(args, payload, text_lines, markdown_lines=None):
    if args.format == "json":
        rendered = canonical_json(payload)
    elif args.format == "markdown":
        rendered = "\n".join(markdown_lines or text_lines) + "\n"
    else:
        rendered = "\n".join(text_lines) + "\n"
    if args.output:
        _write_atomic(_resolve_output(args.output), rendered)
    else:
        sys.stdout.write(rendered)


def _ring_and_s(args) -> tuple[Ring, object]:
    ring = parse_ring(args.ring)
    s = parse_element(ring, args.s)
    return ring, s


# -- subcommands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    ring, s = _ring_and_s(args)
    matrix = parse_matrix(ring, s, args.matrix)
    cls = classify(matrix)
    payload = cls.to_json_dict()
    payload.update({"ring": format_ring(ring), "s": format_element(s),
                    "matrix": matrix_to_json(matrix)})
    lines = [f"ring: {format_ring(ring)}  s: {format_element(s)}",
             f"matrix: {format_matrix(matrix)}",
             f"tag: {cls.tag.value}"]
    if cls.reason:
        lines.append(f"reason: {cls.reason}")
    if cls.roots:
        lines.append(
            f"roots: radical {format_element(cls.roots.root_j)}, "
            f"unit {format_element(cls.roots.root_u)}"
        )
    if cls.certificate:
        lines.append(f"E = {format_matrix(cls.certificate.E)}")
        lines.append(f"W = A + E = {format_matrix(cls.certificate.W)}")
        lines.append(f"A*E = {format_matrix(cls.certificate.qnil_part)}")
    emit(args, payload, lines)
    return 0


def cmd_solve_quad(args) -> int:
    ring = parse_ring(args.ring)
    mu = parse_element(ring, args.mu)
    lam = parse_element(ring, args.lam)
    problem = QuadraticProblem(mu, lam)
    method = args.method
    roots = []
    pair = None
    if method == "brute":
        roots = solve_brute(problem)
    elif method == "rational":
        roots = solve_rational(problem)
    elif method == "series":
        if not isinstance(ring, Quotient):
            raise ParseError("--method series needs a quotient ring")
        base_pair = solve_split(QuadraticProblem(mu.payload[0], lam.payload[0]))
        if base_pair is not None:
            pair = (series_lift(base_pair.root_j, problem),
                    series_lift(base_pair.root_u, problem))
            roots = list(pair)
    else:  # split
        rp = solve_split(problem)
        if rp is not None:
            pair = (rp.root_j, rp.root_u)
            roots = list(pair)
    verified = all(problem.is_root(r) for r in roots)
    payload = {
        "schema": "genring.solve-quad/1",
        "ring": format_ring(ring),
        "mu": format_element(mu),
        "lambda": format_element(lam),
        "method": method,
        "roots": [format_element(r) for r in roots],
        "solvable": bool(roots),
        "verified": verified,
    }
    if pair is not None:
        payload["root_j"], payload["root_u"] = (format_element(pair[0]),
                                                format_element(pair[1]))
    lines = [f"t^2 - ({format_element(mu)}) t + ({format_element(lam)}) over {format_ring(ring)}",
             f"method: {method}",
             f"roots: {', '.join(format_element(r) for r in roots) or '(none)'}",
             f"verified: {verified}"]
    emit(args, payload, lines)
    return 0


def _verify_payload(report) -> dict:
    return report.to_json_dict()


def cmd_verify_ring(args) -> int:
    ring = parse_ring(args.ring)
    if args.s == "all":
        if not ring.is_finite():
            raise ParseError("--s all needs a finite ring")
        multipliers = list(ring.elements())
    else:
        multipliers = [parse_element(ring, args.s)]
    reports = [verify_ring(ring, s, args.mode, args.samples, args.seed) for s in multipliers]
    ok = all(r.passes for r in reports)
    if len(reports) == 1:
        payload = _verify_payload(reports[0])
    else:
        payload = {
            "schema": "genring.verify-ring-multi/1",
            "ring": format_ring(ring),
            "reports": [_verify_payload(r) for r in reports],
            "pass": ok,
        }
    lines = []
    md = ["| s | mode | checked | mismatches | result |", "|---|---|---|---|---|"]
    for rep in reports:
        status = "pass" if rep.passes else "FAIL"
        lines.append(
            f"s={format_element(rep.s)} mode={rep.mode} checked={rep.checked} "
            f"counts={rep.counts} mismatches={len(rep.mismatches)} [{status}] "
            f"({rep.elapsed:.2f}s)"
        )
        md.append(
            f"| {format_element(rep.s)} | {rep.mode} | {rep.checked} "
            f"| {len(rep.mismatches)} | {status} |"
        )
    emit(args, payload, lines, md)
    return 0 if ok else 1


def cmd_decide_ring(args) -> int:
    ring, s = _ring_and_s(args)
    decision = decide_ring(ring, s, samples=args.samples, seed=args.seed)
    payload = decision.to_json_dict()
    lines = [f"ring: {format_ring(ring)}  s: {format_element(s)}",
             f"verdict: {decision.verdict} (method: {decision.method})"]
    if decision.witness is not None:
        lines.append(f"witness: {format_matrix(decision.witness)}")
    emit(args, payload, lines)
    if args.expect and decision.verdict != args.expect:
        print(f"expected {args.expect}, got {decision.verdict}", file=sys.stderr)
        return 1
    return 0


def cmd_witness(args) -> int:
    ring, s = _ring_and_s(args)
    decision = decide_ring(ring, s, samples=args.samples, seed=args.seed)
    found = decision.witness is not None and decision.verdict == "not-quasipolar"
    payload = {
        "schema": "genring.witness-fixture/1",
        "ring": format_ring(ring),
        "s": format_element(s),
        "found": found,
        "expect": "not-quasipolar" if found else None,
    }
    if found:
        payload.update(matrix_to_json(decision.witness))
    lines = [f"ring: {format_ring(ring)}  s: {format_element(s)}"]
    if found:
        lines.append(f"witness: {format_matrix(decision.witness)} (verified non-quasipolar)")
    else:
        lines.append(f"no witness found (verdict: {decision.verdict})")
    emit(args, payload, lines)
    if args.assert_quasipolar and found:
        return 1
    return 0


def cmd_idempotents(args) -> int:
    ring, s = _ring_and_s(args)
    space = get_space(ring, s)
    idems = [space.matrix_of(r) for r in space.idempotent_rows()]
    payload = {
        "schema": "genring.idempotents/1",
        "ring": format_ring(ring),
        "s": format_element(s),
        "count": len(idems),
        "idempotents": [format_matrix(e) for e in idems],
    }
    lines = [f"{len(idems)} idempotents in K_{format_element(s)}({format_ring(ring)}):"]
    lines += [f"  {format_matrix(e)}" for e in idems]
    emit(args, payload, lines)
    return 0


def _battery(seed: int):
    """The built-in verification battery; returns (name, scope, ok, detail) rows."""
    rows = []

    z4 = parse_ring("Z/4")
    total_mism = 0
    checked = 0
    for s in z4.elements():
        rep = verify_ring(z4, s, "exhaustive")
        total_mism += len(rep.mismatches)
        checked += rep.checked
    rows.append(("element oracle agreement", "Z/4, all multipliers, exhaustive",
                 total_mism == 0, f"{checked} matrices, {total_mism} mismatches"))

    bad = 0
    count = 0
    for spec in ("Z/4", "Z/2[t]/t^2"):
        ring = parse_ring(spec)
        for s in ring.elements():
            space = get_space(ring, s)
            for i in range(space.count):
                m = space.matrix_of(space.M[i])
                if is_qnil_fast(m) != is_qnil_brute(m):
                    bad += 1
                count += 1
    rows.append(("quasinilpotence criterion", "Z/4 and F2[t]/t^2, all multipliers",
                 bad == 0, f"{count} matrices, {bad} disagreements"))

    ring = parse_ring("Z/4[t]/t^2")
    rng = Random(seed)
    from .quadratic import newton_lift
    from .sampling import random_jacobson, random_unit
    agree = True
    for _ in range(100):
        mu = random_unit(ring, rng)
        lam = random_jacobson(ring, rng)
        problem = QuadraticProblem(mu, lam)
        pair = solve_split(problem)
        alt_j = series_lift(pair.root_j.payload[0], problem)
        newt_j = newton_lift(problem, ring.zero)
        if alt_j != pair.root_j or newt_j != pair.root_j:
            agree = False
    rows.append(("split-root solvers agree", "Z/4[t]/t^2, 100 seeded problems",
                 agree, "coefficientwise lift == Newton lift"))

    ok = True
    for p in (2, 3, 5):
        ring = parse_ring(f"Zloc({p})")
        decision = decide_ring(ring, ring.one)
        ok = ok and decision.verdict == "not-quasipolar"
    rows.append(("localized negative witness", "Zloc(p), s=1, p in {2,3,5}",
                 ok, "explicit witness verified"))

    ok = True
    for spec in ("Zloc(2)", "Z/8"):
        ring = parse_ring(spec)
        rng = Random(seed)
        for _ in range(200):
            m = random_matrix(ring, ring.zero, rng)
            if not classify(m).is_quasipolar:
                ok = False
    rows.append(("zero multiplier positivity", "Zloc(2) and Z/8, 200 samples each",
                 ok, "no negative classifications"))

    z8 = parse_ring("Z/8")
    ok = True
    for sv in (0, 2, 4, 6):
        rep = verify_ring(z8, z8.from_int(sv), "sample", samples=300, seed=seed)
        ok = ok and rep.passes and rep.counts[Case.NOT_QUASIPOLAR.value] == 0
    quot = parse_ring("Zloc(2)[t]/t^2")
    fam = check_critical_family(quot, quot.gen, samples=100, seed=seed)
    ok = ok and fam.all_solvable
    rows.append(("nilpotent multiplier positivity", "Z/8 s in {0,2,4,6}; Zloc(2)[t]/t^2 s=t",
                 ok, "all quasipolar / all solvable"))

    ring = parse_ring("Z/4[t]/t^3")
    rng = Random(seed)
    ok = True
    for _ in range(100):
        s = ring.element([rng.randrange(4) for _ in range(3)])
        m = random_matrix(ring, s, rng)
        if reduce_truncated(m).tag is not classify(m).tag:
            ok = False
    rows.append(("truncation reduction", "Z/4[t]/t^3, 100 seeded samples",
                 ok, "constant-part tag matches direct tag"))

    ok = True
    for spec in ("Z/4", "F3"):
        ring = parse_ring(spec)
        for s in ring.elements():
            if not s.is_unit():
                continue
            space = get_space(ring, s)
            for i in range(space.count):
                m = space.matrix_of(space.M[i])
                if is_strongly_clean_brute(m) != classify(m).is_quasipolar:
                    ok = False
    rows.append(("strongly clean equivalence", "Z/4 and F3, unit multipliers, exhaustive",
                 ok, "quasipolar <=> strongly clean"))

    quot = parse_ring("Zloc(2)[t]/t^2")
    pos = decide_ring(quot, quot.gen)
    neg = decide_ring(quot, quot.from_int(2))
    ok = pos.verdict == "quasipolar" and neg.verdict == "not-quasipolar"
    rows.append(("radical multiplier dichotomy", "Zloc(2)[t]/t^2: s=t vs s=2",
                 ok, f"s=t: {pos.verdict}; s=2: {neg.verdict}"))
    return rows


def cmd_report(args) -> int:
    rows = _battery(args.seed)
    ok = all(r[2] for r in rows)
    payload = {
        "schema": "genring.report/1",
        "seed": args.seed,
        "pass": ok,
        "checks": [
            {"name": n, "scope": s, "pass": p, "detail": d} for n, s, p, d in rows
        ],
    }
    lines = [f"[{'pass' if p else 'FAIL'}] {n} ({s}): {d}" for n, s, p, d in rows]
    lines.append(f"overall: {'pass' if ok else 'FAIL'}")
    md = ["| check | scope | result | detail |", "|---|---|---|---|"]
    md += [f"| {n} | {s} | {'pass' if p else 'FAIL'} | {d} |" for n, s, p, d in rows]
    emit(args, payload, lines, md)
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genring",
        description="Quasipolar decompositions in twisted 2x2 matrix rings "
                    "over commutative local rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring=True, s=True):
        if ring:
            p.add_argument("--ring", required=True, help="ring spec, e.g. Z/8 or Zloc(2)[t]/t^2")
        if s:
            p.add_argument("--s", required=True, help="multiplier literal (or 'all' for verify-ring)")
        p.add_argument("--format", choices=("text", "json", "markdown"), default="text")
        p.add_argument("--output", help="write the report to this path (atomic)")

    p = sub.add_parser("classify", help="classify one matrix")
    common(p)
    p.add_argument("--matrix", required=True, help="matrix literal [[a,b],[c,d]]")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve-quad", help="solve t^2 - mu t + lambda = 0")
    common(p, s=False)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=("brute", "split", "rational", "series"),
                   default="split")
    p.set_defaults(func=cmd_solve_quad)

    p = sub.add_parser("verify-ring", help="sweep classify() against the oracle")
    common(p)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_ring)

    p = sub.add_parser("decide-ring", help="decide quasipolarity of a whole ring")
    common(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--expect", choices=("quasipolar", "not-quasipolar", "unknown"))
    p.set_defaults(func=cmd_decide_ring)

    p = sub.add_parser("witness", help="search for a non-quasipolar witness")
    common(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--assert-quasipolar", action="store_true",
                   help="exit 1 when a witness is found")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("idempotents", help="list idempotents of a finite ring")
    common(p)
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("report", help="run the built-in verification battery")
    common(p, ring=False, s=False)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except GenRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
