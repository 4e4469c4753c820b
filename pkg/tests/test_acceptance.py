"""Acceptance gate: one test (and one printed PASS/FAIL line) per criterion."""

from __future__ import annotations

import json
import subprocess
import sys
import time

from idealclass.classify import classify
from idealclass.config import DEFAULT_CAPS
from idealclass.ideals import generate
from idealclass.rings import Idealization, Modular, build_ring
from idealclass.theorems import REGISTRY, verify_theorem
from idealclass.zideals import FactoredInteger, classify_z, intersect_z

COMPACT = "zn:2..24,prod:(zn:2..4,zn:2..4),idz:(zn:2..3)^1..2"


def announce(criterion: str, failures: list) -> None:
    verdict = "FAIL" if failures else "PASS"
    print(f"criterion {criterion}: {verdict}")
    for f in failures:
        print(f"  - {f}")
    assert not failures


def check(failures: list, cond: bool, label: str) -> None:
    if not cond:
        failures.append(label)


def test_criterion_1_pinned_fixtures():
    start = time.monotonic()
    failures: list = []

    z12 = classify(generate(build_ring(Modular(12)), (0,)))
    check(failures, z12.flags["twoAbsorbingPrimary"], "12Z is 2AP")
    check(failures, not z12.flags["twoAbsorbing"], "12Z is not 2-absorbing")
    check(failures, not z12.flags["primary"], "12Z is not primary")
    check(failures, not z12.flags["uniformlyPrimary"], "12Z is not uniformly primary")
    check(failures, z12.two_exp == 2, f"12Z radical exponent 2, got {z12.two_exp}")
    check(failures, z12.two_ord == 2, f"12Z uniform exponent 2, got {z12.two_ord}")
    check(failures, not z12.flags["special"], "12Z is not special")

    z60 = classify_z(FactoredInteger.from_int(60)).report
    check(failures, not z60.flags["twoAbsorbingPrimary"], "60Z is not 2AP")
    triple = z60.witnesses.get("twoAbsorbingPrimary")
    check(failures, isinstance(triple, tuple) and len(triple) == 3,
          "60Z records a witness triple")
    if isinstance(triple, tuple) and len(triple) == 3:
        a, b, c = triple
        check(failures, (a * b * c) % 60 == 0 and (a * b) % 60 != 0,
              "60Z witness triple is genuine")

    z6 = classify_z(FactoredInteger.from_int(6)).report
    check(failures, z6.flags["twoAbsorbing"], "6Z is 2-absorbing")
    check(failures, z6.flags["special"], "6Z is special")
    check(failures, z6.two_ord == 1, f"6Z uniform exponent 1, got {z6.two_ord}")

    meet = intersect_z(FactoredInteger.from_int(3), FactoredInteger.from_int(4))
    check(failures, meet.value == 12, f"3Z meet 4Z = 12Z, got {meet.value}")
    check(failures, not classify_z(meet).report.flags["special"],
          "3Z meet 4Z is not special")

    idz = build_ring(Idealization(Modular(2), 2))
    rep = classify(generate(idz, (0,)))
    check(failures, rep.flags["primary"], "idealization zero ideal is primary")
    check(failures, rep.ord == 2, f"idealization exponent 2, got {rep.ord}")
    check(failures, rep.flags["special"], "idealization zero ideal is special")

    elapsed = time.monotonic() - start
    check(failures, elapsed < 5.0, f"fixtures under 5s, took {elapsed:.1f}s")
    announce("1 (pinned fixtures)", failures)


def run_group(ids, failures, budget=None):
    start = time.monotonic()
    for tid in ids:
        result = verify_theorem(tid)
        check(failures, result.verdict == "passed",
              f"{tid} passed, got {result.verdict}: "
              f"{list(result.counterexamples)[:1]}")
        check(failures, result.instances > 0, f"{tid} exercised instances")
    if budget is not None:
        elapsed = time.monotonic() - start
        check(failures, elapsed < budget, f"group under {budget}s, took {elapsed:.0f}s")


def test_criterion_2_order_theorems():
    failures: list = []
    run_group(("uniformly-primary-thm", "main1", "special"), failures, budget=300)
    announce("2 (order characterizations on their corpora)", failures)


def test_criterion_3_closure_theorems():
    failures: list = []
    run_group(
        ("intersection", "monoepi", "frac", "multi", "idealization",
         "product1", "product2", "product3", "result1", "product4"),
        failures,
    )
    announce("3 (closure and transfer theorems)", failures)


def test_criterion_4_structural_theorems():
    failures: list = []
    run_group(
        ("uni-abs", "prop1", "noe-uni", "rad", "idempotent-colon",
         "radical-prop", "ord-comparison", "lemch-corollary", "main2",
         "main3", "chain-colon", "divided-prime", "boolean-corollary"),
        failures,
    )
    announce("4 (structural and comparison theorems)", failures)


def test_criterion_5_integer_sweep():
    start = time.monotonic()
    failures: list = []
    caps = DEFAULT_CAPS.bumped(cubic=1024)

    for n in range(2, 145):
        z = classify_z(FactoredInteger.from_int(n), caps=caps)
        check(failures, z.bridge == "verified", f"n={n} cross-checked")

    primes = (2, 3, 5, 7)
    pairs = 0
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            a = 1
            while p**a * q <= 1000:
                b = 1
                while p**a * q**b <= 1000:
                    z = classify_z(
                        FactoredInteger(((p, a), (q, b))), caps=caps)
                    check(failures, z.bridge == "verified",
                          f"n={p}^{a}*{q}^{b} cross-checked")
                    pairs += 1
                    b += 1
                a += 1
    check(failures, pairs >= 50, f"swept {pairs} two-prime moduli")

    elapsed = time.monotonic() - start
    check(failures, elapsed < 600, f"sweep under 10min, took {elapsed:.0f}s")
    announce("5 (closed forms against the quotient oracle)", failures)


def test_criterion_6_mutants_are_caught():
    failures: list = []
    for tid in REGISTRY:
        result = verify_theorem(tid, use_mutant=True)
        check(failures, result.verdict == "failed",
              f"{tid} mutant refuted, got {result.verdict}")
        check(failures, len(result.counterexamples) >= 1,
              f"{tid} mutant produced a counterexample")
    announce("6 (every mutant is refuted on the default corpus)", failures)


def test_criterion_7_worker_determinism():
    failures: list = []
    outs = []
    for workers in ("1", "8"):
        proc = subprocess.run(
            [sys.executable, "-m", "idealclass.cli", "verify", "--all",
             "--format", "json", "--corpus", COMPACT, "--workers", workers],
            capture_output=True, text=True, timeout=600,
        )
        check(failures, proc.returncode == 0,
              f"workers={workers} exit 0, got {proc.returncode}: {proc.stderr[-200:]}")
        outs.append(proc.stdout)
    check(failures, outs[0] == outs[1], "stdout is byte-identical across workers")
    if outs[0]:
        results = json.loads(outs[0])
        check(failures, len(results) == len(REGISTRY), "all theorems ran")
        check(failures, all(r["verdict"] == "passed" for r in results),
              "all theorems passed on the shared corpus")
    announce("7 (parallel verification is deterministic)", failures)
