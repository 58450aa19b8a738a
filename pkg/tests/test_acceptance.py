"""Acceptance criteria, each held to its stated tolerance.

Every test prints one PASS/FAIL line, repeated in the terminal summary under
"acceptance criteria", and fails if the criterion is not met.
"""
import time

import pytest

from gammaft import verification as v


def _report(log, results):
    results = results if isinstance(results, list) else [results]
    for r in results:
        print(r.line())
        log.append(r.line())
    failed = [r.name for r in results if not r.passed]
    assert not failed, f"failed: {failed}"


def test_criterion_1_closed_form_vs_quadrature_grid(acceptance_log):
    t0 = time.perf_counter()
    r = v.check_grid()
    elapsed = time.perf_counter() - t0
    line = f"{'PASS' if elapsed < 60 else 'FAIL'}  grid runtime {elapsed:.1f} s (limit 60 s)"
    print(line)
    acceptance_log.append(line)
    _report(acceptance_log, r)
    assert elapsed < 60


def test_criterion_2_anchor_values(acceptance_log):
    _report(acceptance_log, v.check_anchors())


def test_criterion_3_number_theory(acceptance_log):
    _report(acceptance_log, v.check_number_theory())


def test_criterion_4_partition_layer(acceptance_log):
    _report(acceptance_log, v.check_partitions())


def test_criterion_5_physics_closed_forms(acceptance_log):
    _report(acceptance_log, v.check_physics())


def test_criterion_6_uncertainty_claims(acceptance_log):
    _report(acceptance_log, v.check_uncertainty())


def test_criterion_7_wigner_cross_check(acceptance_log):
    _report(acceptance_log, v.check_wigner())


@pytest.mark.slow
def test_criterion_7_phase_space_reconstruction(acceptance_log):
    _report(acceptance_log, v.check_phase_space())


@pytest.mark.parametrize("name", [
    "reality structure", "swap reflection", "contiguous recurrences", "derivative identity",
    "decay at |lambda| = 20", "odd-m vanishing", "Pfaff case agreement",
])
def test_criterion_8_property_suite(name, acceptance_log):
    results = {r.name: r for r in v.check_properties()}
    _report(acceptance_log, results[name])
