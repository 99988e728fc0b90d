"""Acceptance gate: one PASS/FAIL line per criterion, printed in the pytest summary.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from fibhess import claims
from fibhess.algebra import GaussianInt, Poly, fib
from fibhess.determinants import cofactor_det, det_of_lorentz_product, hessenberg_det
from fibhess.matrix import (
    SquareMatrix,
    build,
    build_family,
    lorentz_identity,
    lorentz_mul,
    standard_mul,
)
from fibhess.oeis import load, parse_line
from fibhess.tables import reproduce_table

HERE = Path(__file__).parent
RESULTS = []

ENGINE_BUDGET_S = 10.0
SUITE_BUDGET_S = 60.0
N_MAX = 12


def record(criterion, ok, detail=""):
    RESULTS.append((criterion, ok, detail))
    assert ok, f"criterion {criterion}: {detail}"


def rand_matrix(rng, n, lo=-9, hi=9, hessenberg=False):
    rows = [[rng.randint(lo, hi) if (not hessenberg or j <= i + 1) else 0 for j in range(n)] for i in range(n)]
    return SquareMatrix.from_rows(rows)


def quad(a, b, c):
    return Poly((c, b, a))


@pytest.fixture(scope="module")
def report():
    return claims.verify_all(N_MAX)


def test_c01_engine_agreement():
    start = time.perf_counter()
    bad = []
    for fam in ("A", "B", "C", "D", "E", "F", "G", "H", "K"):
        for n in range(1, N_MAX + 1):
            m = build(fam, n)
            if hessenberg_det(m) != cofactor_det(m):
                bad.append(f"{fam}{n}")
    rng = random.Random(1)
    for k in range(200):
        m = rand_matrix(rng, rng.randint(1, 8), hessenberg=True)
        if hessenberg_det(m) != cofactor_det(m):
            bad.append(f"random#{k}")
    elapsed = time.perf_counter() - start
    record("1 engine agreement", not bad and elapsed < ENGINE_BUDGET_S,
           f"disagreements={bad[:5]} elapsed={elapsed:.2f}s")


def test_c02_printed_general_terms():
    bad = []
    for n in range(1, N_MAX + 1):
        if cofactor_det(build("C", n)) != Poly.linear(fib(n + 1), fib(n)):
            bad.append(f"C{n}")
        if cofactor_det(build("D", n)) != Poly.linear(fib(2 * n - 1), fib(2 * n)):
            bad.append(f"D{n}")
    for n in range(1, 16):
        a = cofactor_det(build("A", n))
        if not (isinstance(a, GaussianInt) and a.im == 0 and a.re == fib(n + 1)):
            bad.append(f"A{n}")
        if cofactor_det(build("B", n)) != fib(n):
            bad.append(f"B{n}")
    record("2 general terms C, D, A, B", not bad, f"failures={bad}")


@pytest.mark.parametrize("family", ["E", "F", "G", "H", "K"])
def test_c03_sign_rule_general_terms(family):
    r = claims.verify_claim(claims.get_claim(f"{family}-general"), N_MAX)
    first = r.counterexamples[0] if r.counterexamples else None
    detail = f"status={r.status} minimal_m={r.minimal_m}"
    if first:
        detail += f" first counterexample n={first.n}: computed {first.computed}, predicted {first.predicted}"
    record(f"3 sign rule general term {family}", r.minimal_m == 1, detail)


def test_c04_lorentz_determinant_law():
    bad = []
    rng = random.Random(4)
    for k in range(100):
        n = rng.randint(1, 6)
        a, b = rand_matrix(rng, n), rand_matrix(rng, n)
        if cofactor_det(lorentz_mul(a, b)) != det_of_lorentz_product(a, b):
            bad.append(f"random#{k}")
    for left, right in (("C", "D"), ("E", "F"), ("G", "H")):
        for n in range(1, 11):
            a, b = build_family(left, n), build_family(right, n)
            if cofactor_det(lorentz_mul(a, b)) != det_of_lorentz_product(a, b):
                bad.append(f"{left}{right}{n}")
    record("4 det(A.L B) = -det A det B", not bad, f"failures={bad}")


def test_c05_cd_product():
    listed = [quad(-1, -2, -1), quad(-4, -8, -3), quad(-15, -34, -16)]
    bad = []
    for n in range(1, N_MAX + 1):
        got = cofactor_det(build("CD", n))
        f = fib
        want = quad(
            -f(n + 1) * f(2 * n - 1),
            -(f(n + 1) * f(2 * n) + f(n) * f(2 * n - 1)),
            -f(n) * f(2 * n),
        )
        if got != want or (n <= 3 and got != listed[n - 1]):
            bad.append(f"n={n}: {got}")
    record("5 CD product values and general term", not bad, f"failures={bad}")


MUST_MISMATCH = ("E-text-n2", "H-text-n2", "H-text-n3", "EF-listed-n3", "GH-statement")
MUST_VERIFY = (
    "GH-proof",
    "C-general", "D-general", "E-general", "F-general", "G-general", "H-general", "K-general",
    "Csub-formula", "Dsub-formula", "C-summation", "D-summation",
)


def test_c06a_discrepancies_reported(report):
    wrong = [f"{i}={report.by_id(i).status}" for i in MUST_MISMATCH if report.by_id(i).status != claims.MISMATCH]
    record("6a expected mismatches reported", not wrong, f"not mismatched: {wrong}")


def test_c06b_expected_verifications(report):
    wrong = [
        f"{i}={report.by_id(i).status}(m={report.by_id(i).minimal_m})"
        for i in MUST_VERIFY
        if report.by_id(i).status != claims.VERIFIED
    ]
    record("6b expected verifications", not wrong, f"not verified: {wrong}")


def test_c06c_report_is_byte_identical(report):
    a = claims.emit_report(report, "json")
    b = claims.emit_report(claims.verify_all(N_MAX), "json")
    record("6c report byte-identical across runs", a == b, f"{len(a)} vs {len(b)} bytes")


def test_c07_table_three():
    table = reproduce_table(3, 3)
    block = next(b for b in table.blocks if b.title == "|CD|")
    printed = {"t=0": ["-1", "-3", "-16"], "t=1": ["-4", "-15", "-65"], "t=2": ["-9", "-35", "-144"]}
    bad = []
    for r in block.rows:
        if r.label in printed and [c.computed for c in r.cells] != printed[r.label]:
            bad.append(r.label)
    flags_ok = all(
        c.diff == (c.printed is not None and c.printed != c.computed)
        for b in table.blocks
        for r in b.rows
        for c in r.cells
    )
    cd_clean = not any(c.diff for r in block.rows if r.label in printed for c in r.cells)
    record("7 table 3 CD rows", not bad and flags_ok and cd_clean,
           f"rows off={bad} flags_consistent={flags_ok} cd_unflagged={cd_clean}")


def test_c08_lorentz_algebra():
    rng = random.Random(8)
    bad = 0
    for _ in range(100):
        n = rng.randint(1, 5)
        a, b, c = (rand_matrix(rng, n) for _ in range(3))
        k = rng.randint(-9, 9)
        j = lorentz_identity(n)
        checks = (
            lorentz_mul(a, lorentz_mul(b, c)) == lorentz_mul(lorentz_mul(a, b), c),
            lorentz_mul(a, b + c) == lorentz_mul(a, b) + lorentz_mul(a, c),
            lorentz_mul(a + b, c) == lorentz_mul(a, c) + lorentz_mul(b, c),
            lorentz_mul(a, b).scale(k) == lorentz_mul(a.scale(k), b) == lorentz_mul(a, b.scale(k)),
            lorentz_mul(a, j) == a == lorentz_mul(j, a),
            lorentz_mul(a, b) == standard_mul(standard_mul(a, j), b),
        )
        bad += not all(checks)
    record("8 Lorentz algebra properties", bad == 0, f"{bad} of 100 triples failed")


def test_c09_sequence_id():
    index = load(HERE / "data" / "oeis_fixture.txt")
    plain = index.lookup([1, 1, 2, 3, 5, 8])
    negated = index.lookup([-1, -1, -2, -3, -5, -8])
    parse_ok = parse_line("A000045 ,0,1,1,2,3,5,8,13,").terms == (0, 1, 1, 2, 3, 5, 8, 13)
    parse_ok &= parse_line("# comment") is None
    try:
        parse_line("A00004 1,2,3")
        parse_ok = False
    except ValueError:
        pass
    ok = (
        len(plain) == 1 and not plain[0].negated
        and len(negated) == 1 and negated[0].negated and negated[0].id == plain[0].id
        and parse_ok
    )
    record("9 sequence identification", ok, f"plain={plain} negated={negated} parse_ok={parse_ok}")


def test_c10_suite_runtime():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(HERE),
         "--ignore", str(Path(__file__))],
        capture_output=True, text=True,
    )
    elapsed = time.perf_counter() - start
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    record("10 full suite under 60 s", proc.returncode == 0 and elapsed < SUITE_BUDGET_S,
           f"elapsed={elapsed:.1f}s result: {tail}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
