"""Acceptance criteria, one PASS/FAIL line each.

Run as a script (``python3 tests/test_acceptance.py``) for the summary, or
through pytest, where the same lines are printed in the terminal summary.
Criteria 4 and 6 are known to fail: the braid relation for the box
divided difference holds only up to sign, and D_w is not stable under the
embedding W~_2 -> W~_3 beyond agreement modulo the ideal. Both are reported
as FAIL, not softened.
"""
from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import og2_arith_degrees  # noqa: E402
from orthoschubert import arakelov, checks  # noqa: E402
from orthoschubert.poly import monomials_of_degree  # noqa: E402

GOLDEN = Path(__file__).parent / "golden" / "table_n3.txt"
RESULTS: dict[int, tuple[str, bool, str]] = {}


def _suite(name, **kw):
    t0 = time.perf_counter()
    res = checks.run_suite(name, **kw)
    elapsed = time.perf_counter() - t0
    failed = [f"{r.name} ({r.detail})" for r in res if not r.ok]
    return res, failed, elapsed


def crit_table():
    t0 = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "orthoschubert", "table", "--n", "3"],
                         capture_output=True, check=False)
    elapsed = time.perf_counter() - t0
    same = out.returncode == 0 and out.stdout == GOLDEN.read_bytes()
    rows = out.stdout.decode().count("\n")
    return same and elapsed < 10, f"{rows} rows, byte-identical={same}, {elapsed:.1f}s (limit 10s)"


def crit_dual_path():
    _, failed, elapsed = _suite("dual-path", samples=50, seed=0)
    return not failed and elapsed < 120, "; ".join(failed) or f"24 + 50 elements agree in {elapsed:.1f}s (limit 120s)"


def crit_ptilde():
    res, failed, elapsed = _suite("ptilde")
    return not failed, "; ".join(failed) or f"{len(res)} properties hold in {elapsed:.1f}s"


def crit_divided_difference():
    res, failed, _ = _suite("divided-difference")
    # the sign-corrected operators are a diagnostic, not part of the criterion
    failed = [f for f in failed if not f.startswith("root-operators")]
    return not failed, "; ".join(failed) or "all checks hold"


def crit_structure():
    res, failed, elapsed = _suite("structure")
    flag = next(r.detail for r in res if r.name == "structure-ideal-integrality")
    ok = not failed and elapsed < 300
    return ok, "; ".join(failed) or f"576 products in {elapsed:.1f}s (limit 300s); ideal integrality: {flag}"


def crit_stability():
    res, failed, _ = _suite("stability", m=2, n=3)
    exact = [f for f in failed if not f.startswith("stability-mod-J")]
    mod_j = next(r for r in res if r.name.startswith("stability-mod-J"))
    note = f"modulo J_3: {'holds' if mod_j.ok else 'fails'}"
    return not exact, ("; ".join(exact) + f"; {note}") if exact else f"exact equality holds; {note}"


def crit_arakelov():
    res, failed, _ = _suite("arakelov")
    oracle = og2_arith_degrees()
    wrong = [f"{m}: got {arakelov.arith_degree(m, 2)}, oracle {v}"
             for m, v in oracle.items() if arakelov.arith_degree(m, 2) != v]
    bad = failed + wrong
    values = ", ".join(f"{m}->{v}" for m, v in oracle.items())
    return not bad, "; ".join(bad) or f"{len(res)} checks hold; degrees {values}"


def crit_integration():
    res, failed, elapsed = _suite("integration", ns=(2, 3))
    return not failed and elapsed < 60, "; ".join(failed) or f"{len(res)} integrals exact in {elapsed:.1f}s (limit 60s)"


def crit_rationality():
    res, failed, _ = _suite("rationality", n=2)
    total = 0
    for mono in monomials_of_degree(2, arakelov.dim_flag(2) + 1):
        total += 1
        form = arakelov.arith_monomial(mono, 2).form
        if not form.is_multiple_of_top() or not isinstance(arakelov.degree_of_form(form), Fraction):
            failed.append(str(mono))
    return not failed, "; ".join(failed) or f"{total} top monomials give r*Omega with r rational"


CRITERIA = [
    (1, "table reproduction", crit_table),
    (2, "dual-path coefficients", crit_dual_path),
    (3, "P~ property suite", crit_ptilde),
    (4, "divided-difference property and well-definedness", crit_divided_difference),
    (5, "structure constants on W~_3", crit_structure),
    (6, "stability W~_2 -> W~_3", crit_stability),
    (7, "arithmetic suite at n=2", crit_arakelov),
    (8, "exact integration", crit_integration),
    (9, "rationality of arithmetic degrees", crit_rationality),
]
KNOWN_FAILURES = {
    4: "d_box d_2 d_box = -d_2 d_box d_2, so d_w depends on the reduced word",
    6: "D_w keeps only lambda in F_{n-1}, so restriction agrees only modulo the ideal",
}


def evaluate(number, name, fn):
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {name}: {detail}"
    RESULTS[number] = (line, ok, detail)
    return ok, line


@pytest.mark.parametrize(
    "number,name,fn",
    [
        pytest.param(num, name, fn, id=f"criterion-{num}",
                     marks=[pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[num])] if num in KNOWN_FAILURES else [])
        for num, name, fn in CRITERIA
    ],
)
def test_criterion(number, name, fn):
    ok, line = evaluate(number, name, fn)
    assert ok, line


def main() -> int:
    failures = 0
    for number, name, fn in CRITERIA:
        ok, line = evaluate(number, name, fn)
        print(line, flush=True)
        failures += not ok
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria pass")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
