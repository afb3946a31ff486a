"""Acceptance gate: the eight headline identity families, each run at
full stated size with exact arithmetic, one PASS/FAIL line per
criterion (run with -s or read the captured stdout)."""

import time

from multischur.shapes import partitions_up_to_weight, subpartitions, superpartitions
from multischur.verifications import (
    beta_chain,
    branching,
    cauchy,
    classical,
    dual_engine,
    hall_duality,
    orthonormality,
    truncation_stability,
)


def _report(n, name, summary):
    status = "PASS" if summary["passed"] else "FAIL"
    print(f"criterion {n} ({name}): {status}  [{summary['cases']} cases]")
    for line in summary["failures"][:10]:
        print("    " + line)
    assert summary["passed"], summary["failures"][:10]


def test_criterion_1_orthonormality():
    t0 = time.perf_counter()
    summary = orthonormality(max_weight=5)
    elapsed = time.perf_counter() - t0
    _report(1, "refined orthonormality, symbolic t", summary)
    print(f"    elapsed {elapsed:.1f}s, budget 120s")
    # exhaustive over all pairs of the 19 shapes of weight <= 5
    assert summary["cases"] == 19 * 19
    assert summary["parameters"] == {"maxWeight": 5}
    assert elapsed < 120.0


def test_criterion_2_dual_engine_equivalence():
    summary = dual_engine(max_weight=4)
    _report(2, "determinant vs fermion pairing", summary)
    want = sum(len(subpartitions(lam)) for lam in partitions_up_to_weight(4))
    assert summary["cases"] == want


def test_criterion_3_hall_duality():
    summary = hall_duality(max_weight=5, truncation=5)
    _report(3, "Hall duality of stable and dual families", summary)
    assert summary["cases"] == 19 * 19
    assert summary["parameters"]["truncation"] == 5


def test_criterion_4_cauchy_kernel():
    summary = cauchy()
    _report(4, "Cauchy kernel", summary)
    assert summary["cases"] == 2
    assert summary["parameters"]["symbolic"] == {"D": 3, "n": 2, "m": 2}
    assert summary["parameters"]["zero"] == {"D": 4, "n": 2, "m": 2}


def test_criterion_5_branching():
    summary = branching(max_weight=5, general_max_weight=3)
    _report(5, "alphabet-split branching", summary)
    refined = len(partitions_up_to_weight(5))
    general = len(partitions_up_to_weight(3))
    assert summary["cases"] == refined + general


def test_criterion_6_truncation_stability():
    summary = truncation_stability(max_weight=3, max_rows=3, max_truncation=5)
    _report(6, "truncated vs stable in r variables", summary)
    assert summary["parameters"] == {"maxWeight": 3, "maxRows": 3, "maxTruncation": 5}


def test_criterion_7_beta_chain():
    summary = beta_chain(max_weight=4, max_dual_weight=5)
    _report(7, "beta specialization chain", summary)
    shapes = partitions_up_to_weight(4)
    want = len(shapes) + sum(len(superpartitions(lam, 5)) for lam in shapes)
    assert summary["cases"] == want


def test_criterion_8_classical_sanity():
    summary = classical(max_weight=6, window=3, pairing_rows=3)
    _report(8, "tableau, transpose, and operator relations", summary)
    assert summary["parameters"] == {"maxWeight": 6, "window": 3, "pairingRows": 3}
