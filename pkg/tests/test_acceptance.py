"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s`.  The heavy criteria read
off a single full `verify-all` run (default seed and trials, both backends)
performed once per session; the timing criteria measure that same run.
"""

import json
import random
import time

import pytest

from spin8.cli import main
from spin8.octonion import (
    Octonion,
    left_translation,
    random_octonion,
    random_quaternion,
)
from spin8.scalars import EXACT, FloatBackend


def _report(num: int, desc: str, ok: bool):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {num} failed: {desc}"


@pytest.fixture(scope="module")
def full_run(tmp_path_factory):
    """One default-configuration verify-all run: report dict plus wall time."""
    out = tmp_path_factory.mktemp("acceptance") / "report.json"
    t0 = time.perf_counter()
    code = main(["verify-all", "--out", str(out)])
    elapsed = time.perf_counter() - t0
    report = json.loads(out.read_text())
    by_key = {(c["name"], c["backend"]): c for c in report["checks"]}
    return {"code": code, "elapsed": elapsed, "report": report, "by": by_key}


def _passed(full, name, backend):
    row = full["by"][(name, backend)]
    return row["status"] == "pass", row


def test_criterion_01_octonion_axioms():
    t0 = time.perf_counter()
    rng = random.Random(101)
    ok = True
    for _ in range(200):
        x = random_octonion(rng, EXACT)
        y = random_octonion(rng, EXACT)
        ok = ok and (x * y).norm_sq() == x.norm_sq() * y.norm_sq()
        ok = ok and x * (x * y) == (x * x) * y
        ok = ok and (y * x) * x == y * (x * x)
        ok = ok and (x * y).conj() == y.conj() * x.conj()
    fb = FloatBackend(1e-9)
    worst = 0.0
    for _ in range(1000):
        x = random_octonion(rng, fb)
        y = random_octonion(rng, fb)
        pairs = [
            ((x * y).norm_sq(), x.norm_sq() * y.norm_sq()),
        ]
        pairs += list(zip((x * (x * y)).coeffs, ((x * x) * y).coeffs))
        pairs += list(zip(((y * x) * x).coeffs, (y * (x * x)).coeffs))
        pairs += list(zip((x * y).conj().coeffs, (y.conj() * x.conj()).coeffs))
        for a, b in pairs:
            worst = max(worst, abs(float(a) - float(b)))
    elapsed = time.perf_counter() - t0
    _report(
        1,
        f"octonion axioms: 200 exact pairs exactly, 1000 float pairs "
        f"(worst {worst:.2e} <= 1e-9), {elapsed:.1f}s < 5s",
        ok and worst <= 1e-9 and elapsed < 5.0,
    )


def test_criterion_02_left_translation_sandwich():
    rng = random.Random(102)
    ok = True
    for _ in range(50):
        s = random_octonion(rng, EXACT)
        x = random_octonion(rng, EXACT)
        lhs = left_translation(s) * left_translation(x) * left_translation(s)
        ok = ok and lhs == left_translation(s * (x * s))
    ell = Octonion.basis(5)
    lell = left_translation(ell)
    for _ in range(50):
        h = random_quaternion(rng, EXACT)
        ok = ok and left_translation(h) * lell == lell * left_translation(h.conj())
    _report(
        2,
        "sandwich identity on 50 exact pairs and quaternion switch for 50 "
        "exact h, residual 0",
        ok,
    )


def test_criterion_03_closure(full_run):
    ok_e, row_e = _passed(full_run, "triality-closure", "exact")
    ok_f, row_f = _passed(full_run, "triality-closure", "float")
    _report(
        3,
        f"100 generator-word products re-verify on both backends "
        f"(exact residual {row_e['max_residual']:g}, float "
        f"{row_f['max_residual']:.2e})",
        ok_e and ok_f and row_e["trials"] == 100 and row_f["trials"] == 100,
    )


def test_criterion_04_outer_symmetry_relations(full_run):
    ok = True
    detail = []
    for name in ("tau-order-three", "sigma-involution", "s3-relations"):
        for backend in ("exact", "float"):
            passed, row = _passed(full_run, name, backend)
            ok = ok and passed and row["trials"] == 100
            if backend == "exact":
                ok = ok and row["max_residual"] == 0.0
            else:
                ok = ok and row["max_residual"] <= 1e-9
                detail.append(f"{name} {row['max_residual']:.1e}")
    _report(
        4,
        "tau^3 = id, sigma^2 = id, sigma tau sigma = tau^2 on 100 triples "
        f"per backend (float residuals {', '.join(detail)})",
        ok,
    )


def test_criterion_05_fixed_group(full_run):
    ok_e, _ = _passed(full_run, "g2-fixed-group", "exact")
    ok_f, _ = _passed(full_run, "g2-fixed-group", "float")
    _report(
        5,
        "tau-fixed sampled triples are diagonal automorphism triples and "
        "diagonal triples are tau- and sigma-fixed, both backends",
        ok_e and ok_f,
    )


def test_criterion_06_descent(full_run):
    ok_e, row_e = _passed(full_run, "sphere-descent", "exact")
    ok_f, row_f = _passed(full_run, "sphere-descent", "float")
    _report(
        6,
        f"orbit-map descent on 100 words per backend (exact residual "
        f"{row_e['max_residual']:g}, float {row_f['max_residual']:.1e} <= 1e-9)",
        ok_e and ok_f
        and row_e["trials"] == 100 and row_f["trials"] == 100
        and row_e["max_residual"] == 0.0 and row_f["max_residual"] <= 1e-9,
    )


def test_criterion_07_fixed_sets(full_run):
    ok_e, row_e = _passed(full_run, "fixed-sets", "exact")
    ok_f, row_f = _passed(full_run, "fixed-sets", "float")
    _report(
        7,
        "50 sampled fixed points are tau-fixed, the diagonal is sigma-fixed, "
        "and the fixed 6-sphere avoids the diagonal, both backends",
        ok_e and ok_f and row_e["trials"] == 50 and row_f["trials"] == 50,
    )


def test_criterion_08_kai(full_run):
    ok_e, row_e = _passed(full_run, "kai-property", "exact")
    ok_f, row_f = _passed(full_run, "kai-property", "float")
    _report(
        8,
        f"conjugation identity on 100 configurations over a 10-point grid "
        f"(exact equality, float residual {row_f['max_residual']:.1e} <= 1e-9)",
        ok_e and ok_f
        and row_e["trials"] == 100 and row_f["trials"] == 100
        and row_e["max_residual"] == 0.0 and row_f["max_residual"] <= 1e-9,
    )


def test_criterion_09_antipodal_theorem(full_run):
    ok_e, row_e = _passed(full_run, "antipodal-triple", "exact")
    ok_f, row_f = _passed(full_run, "antipodal-triple", "float")
    elapsed = full_run["elapsed"]
    all_pass = full_run["code"] == 0
    _report(
        9,
        f"three-point antipodal set for the canonical and 20 random v "
        f"(certificates, swap, 1000-candidate scan); full battery "
        f"{elapsed:.1f}s <= 60s, exit 0",
        ok_e and ok_f and row_e["trials"] == 21 and row_f["trials"] == 21
        and all_pass and elapsed <= 60.0,
    )


def test_criterion_10_determinism(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    code_a = main(["verify-all", "--trials", "5", "--seed", "42", "--out", str(a)])
    code_b = main(["verify-all", "--trials", "5", "--seed", "42", "--out", str(b)])
    identical = a.read_bytes() == b.read_bytes()
    different_seed = tmp_path / "c.json"
    main(["verify-all", "--trials", "5", "--seed", "43", "--out", str(different_seed)])
    _report(
        10,
        "same seed gives byte-identical reports (and a different seed does not)",
        code_a == 0 and code_b == 0 and identical
        and a.read_bytes() != different_seed.read_bytes(),
    )
